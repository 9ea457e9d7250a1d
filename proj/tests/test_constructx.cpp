#include <gtest/gtest.h>

#include <vector>

#include "qcforge/constructx.hpp"
#include "qcforge/cyclic.hpp"
#include "qcforge/distance.hpp"
#include "qcforge/qc.hpp"

using namespace qcforge;

namespace {

const Field& f2 = Field::of(2);

GenMatrix hamming74() {
  CyclicCode c = cyclic_code_from_gen(Poly(f2, {1, 1, 0, 1}), 7);
  return c.generator_matrix();
}

}  // namespace

TEST(ConstructionX, GluingParityBitExtendsHamming) {
  GenMatrix c1 = hamming74();
  GenMatrix c2 = modify(c1, "expurgate", {}).mat;  // [7,3,4] even subcode
  GenMatrix c3 = GenMatrix::from_rows(f2, {{1}});  // [1,1,1]
  GenMatrix out = construction_x(c1, c2, c3);
  EXPECT_EQ(out.rows(), 4u);
  EXPECT_EQ(out.cols(), 8u);
  EXPECT_EQ(rank(out), 4u);
  // d2 >= d >= min{d2, d1 + d3} collapses to d = 4: the extended Hamming code
  EXPECT_EQ(min_distance_exact(out).weight, 4);
}

TEST(ConstructionX, RejectsIllFormedTriples) {
  GenMatrix c1 = hamming74();
  GenMatrix even = modify(c1, "expurgate", {}).mat;
  GenMatrix one = GenMatrix::from_rows(f2, {{1}});
  GenMatrix two = GenMatrix::from_rows(f2, {{1, 0}, {0, 1}});

  EXPECT_THROW(construction_x(c1, c1, one), std::invalid_argument);   // b = 0
  EXPECT_THROW(construction_x(c1, even, two), std::invalid_argument); // rank gap 1, dim C3 = 2
  EXPECT_THROW(construction_x(even, c1, one), std::invalid_argument); // not nested that way
  GenMatrix other = GenMatrix::from_rows(f2, {{1, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0, 1}});
  EXPECT_THROW(construction_x(c1, other, two), std::invalid_argument); // not a subcode
  GenMatrix g3 = GenMatrix::from_rows(Field::of(3), {{1}});
  EXPECT_THROW(construction_x(c1, even, g3), std::invalid_argument);  // field mismatch
}

TEST(SupercodesAndSubcodes, DivisorLatticeMoves) {
  // g = (x+1)(x^3+x+1) of degree 4 in x^7-1; h = x^3+x^2+1 is irreducible
  Poly g = Poly(f2, {1, 1}) * Poly(f2, {1, 1, 0, 1});
  QCSpec spec = make_qc_spec(f2, 7, g, {Poly::one(f2), Poly(f2, {0, 1})});
  ASSERT_EQ(spec.dim(), 3);

  auto supers = qc_supercodes(spec, 1);
  ASSERT_EQ(supers.size(), 1u);
  EXPECT_EQ(supers[0].g, Poly(f2, {1, 1, 0, 1}));
  EXPECT_EQ(supers[0].dim(), 4);
  EXPECT_TRUE(is_subspace(build_qc_matrix(spec), build_qc_matrix(supers[0])));

  EXPECT_TRUE(qc_supercodes(spec, 2).empty());  // no degree-2 divisor of g
  auto top = qc_supercodes(spec, 4);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].g, Poly::one(f2));

  EXPECT_TRUE(qc_subcodes(spec, 1).empty());  // h has no degree-1 factor
  EXPECT_TRUE(qc_subcodes(spec, 3).empty());  // would leave dimension 0
}

TEST(SupercodesAndSubcodes, SubcodeReducesTupleModNewCheck) {
  Poly g(f2, {1, 1, 0, 1});  // k = 4, h = (x+1)(x^3+x^2+1)
  QCSpec spec = make_qc_spec(f2, 7, g, {Poly::x_pow(f2, 3), Poly::one(f2)});
  auto subs = qc_subcodes(spec, 1);
  ASSERT_EQ(subs.size(), 1u);
  EXPECT_EQ(subs[0].dim(), 3);
  EXPECT_EQ(subs[0].g, g * Poly(f2, {1, 1}));
  // x^3 mod (x^3+x^2+1) = x^2+1, and the generated code is unchanged by it
  EXPECT_EQ(subs[0].fs[0], Poly(f2, {1, 0, 1}));
  EXPECT_TRUE(is_subspace(build_qc_matrix(subs[0]), build_qc_matrix(spec)));

  auto subs3 = qc_subcodes(spec, 3);
  ASSERT_EQ(subs3.size(), 1u);
  EXPECT_EQ(subs3[0].dim(), 1);
}

TEST(SupercodesAndSubcodes, DishonestDivisorsAreSkipped) {
  // every f is divisible by x+1, so removing that factor from g does not
  // enlarge the code; the claimed dimension would be wrong
  Poly g = Poly(f2, {1, 1}) * Poly(f2, {1, 1, 0, 1});
  QCSpec spec = make_qc_spec(f2, 7, g, {Poly(f2, {1, 1}), Poly(f2, {1, 1})});
  EXPECT_TRUE(qc_supercodes(spec, 1).empty());

  // removing the cubic factor still works
  auto supers = qc_supercodes(spec, 3);
  ASSERT_EQ(supers.size(), 1u);
  EXPECT_EQ(supers[0].g, Poly(f2, {1, 1}));
  EXPECT_EQ(rank(build_qc_matrix(supers[0])), 6u);
}

TEST(SupercodesAndSubcodes, MultisetDivisorNotDuplicated) {
  // g = (x+1)^2 inside x^4-1 = (x+1)^4 over GF(2)
  Poly g = Poly(f2, {1, 1}) * Poly(f2, {1, 1});
  QCSpec spec = make_qc_spec(f2, 4, g, {Poly::one(f2), Poly(f2, {0, 1})});
  auto supers = qc_supercodes(spec, 1);
  ASSERT_EQ(supers.size(), 1u);
  EXPECT_EQ(supers[0].g, Poly(f2, {1, 1}));
}

TEST(Modify, ShortenDropsRankOfRestriction) {
  GenMatrix h = hamming74();
  ModifyResult r = modify(h, "shorten", {0});
  EXPECT_EQ(r.mat.cols(), 6u);
  EXPECT_EQ(r.mat.rows(), 3u);
  EXPECT_TRUE(r.changed);
  EXPECT_EQ(min_distance_exact(r.mat).weight, 3);

  // a code with an identically-zero coordinate keeps its dimension
  GenMatrix padded = GenMatrix::from_rows(f2, {{1, 0, 1, 0}, {0, 1, 1, 0}});
  ModifyResult same_k = modify(padded, "shorten", {3});
  EXPECT_EQ(same_k.mat.rows(), 2u);
  EXPECT_EQ(same_k.mat.cols(), 3u);

  GenMatrix rep = GenMatrix::from_rows(f2, {{1, 1, 1, 1, 1}});
  EXPECT_THROW(modify(rep, "shorten", {2}), std::invalid_argument);
  EXPECT_THROW(modify(h, "shorten", {7}), std::invalid_argument);
  EXPECT_THROW(modify(h, "shorten", {}), std::invalid_argument);
}

TEST(Modify, PunctureDeletesCoordinates) {
  GenMatrix rep = GenMatrix::from_rows(f2, {{1, 1, 1, 1, 1}});
  ModifyResult r = modify(rep, "puncture", {2});
  EXPECT_EQ(r.mat.cols(), 4u);
  EXPECT_EQ(r.mat.rows(), 1u);
  EXPECT_EQ(min_distance_exact(r.mat).weight, 4);

  // puncturing can collapse a pivot
  GenMatrix m = GenMatrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}});
  ModifyResult c = modify(m, "puncture", {0, 1});
  EXPECT_EQ(c.mat.rows(), 1u);
  EXPECT_EQ(c.mat.cols(), 1u);
}

TEST(Modify, ExpurgateTakesEvenWeightSubcode) {
  GenMatrix h = hamming74();
  ModifyResult r = modify(h, "expurgate", {});
  EXPECT_TRUE(r.changed);
  EXPECT_EQ(r.mat.rows(), 3u);
  EXPECT_EQ(min_distance_exact(r.mat).weight, 4);
  for (size_t row = 0; row < r.mat.rows(); ++row) {
    int w = 0;
    for (size_t c = 0; c < r.mat.cols(); ++c) w += r.mat.at(row, c);
    EXPECT_EQ(w % 2, 0);
  }

  ModifyResult again = modify(r.mat, "expurgate", {});
  EXPECT_FALSE(again.changed);
  EXPECT_EQ(rank(again.mat), 3u);

  GenMatrix t = GenMatrix::from_rows(Field::of(3), {{1, 1, 1}});
  EXPECT_THROW(modify(t, "expurgate", {}), std::invalid_argument);
  GenMatrix rep = GenMatrix::from_rows(f2, {{1, 1, 1}});
  EXPECT_THROW(modify(rep, "expurgate", {}), std::invalid_argument);
  EXPECT_THROW(modify(h, "bend", {0}), std::invalid_argument);
}

TEST(Algorithm1, EmitsCatalogGluings) {
  // original: g = (x+1)(x^3+x+1), k = 3, n = 14; best b=1 supercode has k = 4
  Poly g = Poly(f2, {1, 1}) * Poly(f2, {1, 1, 0, 1});
  QCSpec spec = make_qc_spec(f2, 7, g, {Poly::one(f2), Poly(f2, {1, 1, 1})});
  std::vector<C3Code> catalog{
      C3Code{2, 1, 1, 1, {"1"}},
      C3Code{2, 2, 1, 2, {"11"}},
      C3Code{2, 3, 2, 2, {"110", "011"}},  // k = 2, filtered out for b = 1
      C3Code{3, 1, 1, 1, {"1"}},           // wrong field
  };
  auto recs = algorithm1(spec, 1, catalog, 100);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].n, 15);
  EXPECT_EQ(recs[0].k, 4);
  EXPECT_EQ(recs[1].n, 16);
  EXPECT_EQ(recs[1].k, 4);
  for (const auto& r : recs) {
    ASSERT_TRUE(r.cx);
    EXPECT_TRUE(r.d_exact);
    const CodeRecord& c1 = *r.cx->c1;
    const CodeRecord& c2 = *r.cx->c2;
    EXPECT_EQ(c1.k, 4);
    EXPECT_EQ(c2.k, 3);
    // distance sandwich with everything exact
    EXPECT_GE(c2.d, r.d);
    EXPECT_LE(std::min(c2.d, c1.d + r.cx->c3.d), r.d);
  }

  // length cap: only the [1,1,1] gluing fits
  auto capped = algorithm1(spec, 1, catalog, 15);
  ASSERT_EQ(capped.size(), 1u);
  EXPECT_EQ(capped[0].n, 15);

  // no degree-2 divisor of g
  EXPECT_TRUE(algorithm1(spec, 2, catalog, 100).empty());

  auto wide = algorithm1(spec, 4, catalog, 100);
  EXPECT_TRUE(wide.empty());  // catalog has no k = 4 entry
}

TEST(Algorithm1, SubDirectionKeepsInputDimension) {
  // g = x^3+x+1 gives h = (x+1)(x^3+x^2+1), so a b=1 subcode exists
  QCSpec spec = make_qc_spec(f2, 7, Poly(f2, {1, 1, 0, 1}),
                             {Poly::one(f2), Poly(f2, {0, 1})});
  std::vector<C3Code> catalog{
      C3Code{2, 1, 1, 1, {"1"}},
      C3Code{2, 2, 1, 2, {"11"}},
  };
  auto recs = algorithm1_sub(spec, 1, catalog, 100);
  ASSERT_EQ(recs.size(), 2u);
  for (const auto& r : recs) {
    EXPECT_EQ(r.k, 4);  // dimension of the input is kept
    ASSERT_TRUE(r.cx);
    EXPECT_TRUE(r.d_exact);
    const CodeRecord& c1 = *r.cx->c1;
    const CodeRecord& c2 = *r.cx->c2;
    EXPECT_EQ(c1.k, 4);
    EXPECT_EQ(c2.k, 3);
    EXPECT_GE(c2.d, r.d);
    EXPECT_LE(std::min(c2.d, c1.d + r.cx->c3.d), r.d);
  }
  EXPECT_EQ(recs[0].n, 15);
  EXPECT_EQ(recs[1].n, 16);

  // h has factors of degree 1 and 3 only
  EXPECT_TRUE(algorithm1_sub(spec, 2, catalog, 100).empty());
}
