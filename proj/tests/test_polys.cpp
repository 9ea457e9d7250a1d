#include <gtest/gtest.h>

#include <random>

#include "qcforge/poly.hpp"

using namespace qcforge;

namespace {

Poly random_poly(const Field& f, int max_deg, std::mt19937_64& rng) {
  int len = int(rng() % uint64_t(max_deg + 2));  // allow the zero polynomial
  std::vector<uint8_t> c(size_t(len), 0);
  for (auto& ci : c) ci = uint8_t(rng() % uint64_t(f.q()));
  return Poly(f, std::move(c));
}

TEST(Polys, NormalizationAndAccessors) {
  const Field& f = Field::of(3);
  Poly p(f, {1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coeff(0), 1);
  EXPECT_EQ(p.coeff(1), 2);
  EXPECT_EQ(p.coeff(5), 0);
  EXPECT_EQ(p.leading(), 2);
  Poly z(f, {0, 0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_THROW(z.degree(), std::logic_error);
  EXPECT_THROW(z.leading(), std::logic_error);
  EXPECT_THROW(Poly(f, {3}), std::invalid_argument);  // coefficient out of range
}

TEST(Polys, MixedFieldOperandsAreRejected) {
  Poly a = Poly::one(Field::of(2));
  Poly b = Poly::one(Field::of(3));
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(Polys, KnownProducts) {
  const Field& f2 = Field::of(2);
  // (1 + x)(1 + x) = 1 + x^2 in characteristic 2
  EXPECT_EQ(Poly(f2, {1, 1}) * Poly(f2, {1, 1}), Poly(f2, {1, 0, 1}));
  // (1 + x)(1 + x + x^2) = 1 + x^3
  EXPECT_EQ(Poly(f2, {1, 1}) * Poly(f2, {1, 1, 1}), Poly(f2, {1, 0, 0, 1}));
  const Field& f3 = Field::of(3);
  // (x + 2)(x + 1) = x^2 + 2 over GF(3)
  EXPECT_EQ(Poly(f3, {2, 1}) * Poly(f3, {1, 1}), Poly(f3, {2, 0, 1}));
}

TEST(Polys, DivModPropertyOnRandomInputs) {
  std::mt19937_64 rng(12345);
  for (int q : {2, 3, 4, 5}) {
    const Field& f = Field::of(q);
    for (int iter = 0; iter < 400; ++iter) {
      Poly a = random_poly(f, 12, rng);
      Poly b = random_poly(f, 6, rng);
      if (b.is_zero()) {
        EXPECT_THROW(divmod(a, b), std::domain_error);
        continue;
      }
      auto [quot, rem] = divmod(a, b);
      EXPECT_EQ(quot * b + rem, a);
      if (!rem.is_zero()) EXPECT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(Polys, GcdDividesBothAndIsMonic) {
  std::mt19937_64 rng(777);
  for (int q : {2, 3, 4, 5}) {
    const Field& f = Field::of(q);
    for (int iter = 0; iter < 300; ++iter) {
      Poly a = random_poly(f, 10, rng);
      Poly b = random_poly(f, 10, rng);
      if (a.is_zero() && b.is_zero()) {
        EXPECT_THROW(gcd(a, b), std::domain_error);
        continue;
      }
      Poly g = gcd(a, b);
      EXPECT_EQ(g.leading(), 1);
      if (!a.is_zero()) EXPECT_TRUE((a % g).is_zero());
      if (!b.is_zero()) EXPECT_TRUE((b % g).is_zero());
      // Common factors scale the gcd: gcd(ac, bc) = monic(c) * gcd(a, b).
      Poly c = random_poly(f, 4, rng);
      if (!c.is_zero() && !(a.is_zero() && b.is_zero())) {
        Poly lhs = gcd(a * c, b * c);
        Poly rhs = make_monic(make_monic(c) * g);
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(Polys, KnownGcd) {
  const Field& f3 = Field::of(3);
  // gcd(x^2 - 1, x^3 - 1) = x - 1 = x + 2 over GF(3)
  Poly a(f3, {2, 0, 1});
  Poly b(f3, {2, 0, 0, 1});
  EXPECT_EQ(gcd(a, b), Poly(f3, {2, 1}));
}

TEST(Polys, PowModMatchesFrobenius) {
  const Field& f2 = Field::of(2);
  Poly mod(f2, {1, 1, 0, 1});  // 1 + x + x^3, irreducible
  // In GF(8), x^8 = x.
  EXPECT_EQ(pow_mod(Poly::x(f2), 8, mod), Poly::x(f2));
  EXPECT_EQ(pow_mod(Poly::x(f2), 7, mod), Poly::one(f2));
}

TEST(Polys, EvalHorner) {
  const Field& f5 = Field::of(5);
  Poly p(f5, {1, 0, 1});  // 1 + x^2
  EXPECT_EQ(eval(p, 3), 0);  // 1 + 9 = 10 = 0 mod 5
  EXPECT_EQ(eval(p, 1), 2);
  EXPECT_EQ(eval(p, 0), 1);
}

TEST(Polys, XnMinusOne) {
  EXPECT_EQ(xn_minus_one(Field::of(3), 4), Poly(Field::of(3), {2, 0, 0, 0, 1}));
  EXPECT_EQ(xn_minus_one(Field::of(2), 3), Poly(Field::of(2), {1, 0, 0, 1}));
  EXPECT_THROW(xn_minus_one(Field::of(2), 0), std::invalid_argument);
}

TEST(Polys, CanonicalOrderIsDegreeThenCoefficients) {
  const Field& f2 = Field::of(2);
  Poly a(f2, {1, 1});        // 1 + x
  Poly b(f2, {1, 0, 1});     // 1 + x^2
  Poly c(f2, {0, 1, 1});     // x + x^2
  EXPECT_TRUE(a < b);
  EXPECT_TRUE(c < b);        // (0,1,1) < (1,0,1)
  EXPECT_TRUE(Poly(f2) < a); // zero sorts first
}

TEST(Polys, ScaleAndMonic) {
  const Field& f5 = Field::of(5);
  Poly p(f5, {2, 0, 3});
  EXPECT_EQ(make_monic(p), Poly(f5, {4, 0, 1}));  // multiply by 3^{-1} = 2
  EXPECT_THROW(make_monic(Poly(f5)), std::domain_error);
}

TEST(Polys, ToStringReadsNaturally) {
  const Field& f3 = Field::of(3);
  EXPECT_EQ(to_string(Poly(f3, {1, 0, 2, 1})), "1 + 2*x^2 + x^3");
  EXPECT_EQ(to_string(Poly(f3)), "0");
  EXPECT_EQ(to_string(Poly::x(f3)), "x");
}

}  // namespace
