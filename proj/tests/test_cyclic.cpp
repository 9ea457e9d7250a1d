#include <gtest/gtest.h>

#include <random>

#include "qcforge/cyclic.hpp"
#include "qcforge/distance.hpp"

using namespace qcforge;

namespace {

TEST(Cyclic, PartitionBookkeeping) {
  CosetPartition p = CosetPartition::make(2, 7);
  ASSERT_EQ(p.cosets.size(), 3u);
  EXPECT_EQ(p.coset_of[0], 0);
  EXPECT_EQ(p.coset_of[1], 1);
  EXPECT_EQ(p.coset_of[2], 1);
  EXPECT_EQ(p.coset_of[4], 1);
  EXPECT_EQ(p.coset_of[3], 2);
  EXPECT_EQ(p.coset_of[6], 2);
}

TEST(Cyclic, MultiplierImageIsAGroupAction) {
  CosetPartition p = CosetPartition::make(2, 15);
  std::mt19937_64 rng(1);
  auto units = units_mod(15);
  for (int iter = 0; iter < 50; ++iter) {
    CosetMultiset ms;
    ms.mult.resize(p.cosets.size());
    for (auto& m : ms.mult) m = unsigned(rng() % 2);
    // identity
    EXPECT_EQ(multiplier_image(p, ms, 1), ms);
    // compatibility: (ab) . ms = a . (b . ms)
    int a = units[rng() % units.size()];
    int b = units[rng() % units.size()];
    EXPECT_EQ(multiplier_image(p, multiplier_image(p, ms, b), a),
              multiplier_image(p, ms, (a * b) % 15));
  }
  CosetMultiset ms;
  ms.mult.assign(p.cosets.size(), 1);
  EXPECT_THROW(multiplier_image(p, ms, 3), std::invalid_argument);  // 3 | 15
}

TEST(Cyclic, CanonicalRepresentativeIsLeastAndIdempotent) {
  CosetPartition p = CosetPartition::make(2, 7);
  CosetMultiset ms;
  ms.mult = {0, 1, 0};  // only the coset {1,2,4}
  CanonicalImage canon = canonical_multiset(p, ms);
  // Multiplier 3 sends {1,2,4} to {3,6,5}, whose multiplicity vector
  // (0,0,1) sorts before (0,1,0).
  EXPECT_EQ(canon.ms.mult, (std::vector<unsigned>{0, 0, 1}));
  EXPECT_EQ(canon.multiplier, 3);
  // Idempotent.
  EXPECT_EQ(canonical_multiset(p, canon.ms).ms, canon.ms);
  EXPECT_EQ(canonical_multiset(p, canon.ms).multiplier, 1);
  // Never larger than any image.
  for (int a : units_mod(7)) {
    CosetMultiset img = multiplier_image(p, ms, a);
    EXPECT_FALSE(img < canon.ms);
  }
}

TEST(Cyclic, EnumerateLengthSevenBinary) {
  ClassEnumeration e = enumerate_class_reps(Field::of(2), 7);
  // Orbits of the 8 divisor multisets: the two cubics fuse, the zero code is
  // filtered out, leaving dimensions 7, 6, 4, 3, 1.
  ASSERT_EQ(e.classes.size(), 5u);
  std::vector<int> dims;
  for (const auto& c : e.classes) dims.push_back(c.dim);
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<int>{1, 3, 4, 6, 7}));
  EXPECT_EQ(e.merges.size(), 2u);
  // Dimension 4 representative is the lex-least multiset of the two-cubic
  // orbit, the one attached to coset {3,5,6}.
  for (const auto& c : e.classes)
    if (c.dim == 4) {
      EXPECT_EQ(c.ms.mult, (std::vector<unsigned>{0, 0, 1}));
      EXPECT_EQ(c.gen, Poly(Field::of(2), {1, 0, 1, 1}));  // 1 + x^2 + x^3
    }
  // Generator times check always rebuilds x^n - 1.
  for (const auto& c : e.classes)
    EXPECT_EQ(c.gen * c.check, xn_minus_one(Field::of(2), 7));
}

TEST(Cyclic, EnumerateCharacteristicPowerLength) {
  // n = 4 = 2^2 over GF(2): only (x+1)^e, e = 0..3 after filtering.
  ClassEnumeration e = enumerate_class_reps(Field::of(2), 4);
  EXPECT_EQ(e.n_prime, 1);
  EXPECT_EQ(e.t, 2);
  ASSERT_EQ(e.classes.size(), 4u);
  EXPECT_TRUE(e.merges.empty());
  for (const auto& c : e.classes) EXPECT_EQ(c.dim, 4 - c.gen.degree());
}

TEST(Cyclic, EnumerateMixedLength) {
  // n = 6 over GF(2): n' = 3, t = 1; multiplicities 0..2 on two cosets.
  ClassEnumeration e = enumerate_class_reps(Field::of(2), 6);
  EXPECT_EQ(e.n_prime, 3);
  EXPECT_EQ(e.t, 1);
  EXPECT_EQ(e.classes.size(), 8u);  // 9 multisets minus the zero code
  EXPECT_TRUE(e.merges.empty());    // both units fix both cosets mod 3
}

TEST(Cyclic, EnumerateTernaryLengthEight) {
  // Cosets of 3 mod 8: {0}, {1,3}, {2,6}, {4}, {5,7}.  The multiplier 5
  // swaps {1,3} with {5,7} and fixes the rest, so orbit counting gives
  // 2*2*2*3 = 24 multisets, minus the zero code.
  ClassEnumeration e = enumerate_class_reps(Field::of(3), 8);
  EXPECT_EQ(e.partition.cosets.size(), 5u);
  EXPECT_EQ(e.classes.size(), 23u);
  EXPECT_EQ(e.merges.size(), 32u - 24u);
  // Every merge event must verifiably map home.
  for (const auto& m : e.merges) {
    EXPECT_EQ(multiplier_image(e.partition, m.from, m.multiplier), m.to);
    EXPECT_TRUE(m.to < m.from);
  }
}

TEST(Cyclic, ClassFilterRestrictsDimensions) {
  ClassFilter filt;
  filt.k_min = 3;
  filt.k_max = 6;
  ClassEnumeration e = enumerate_class_reps(Field::of(2), 7, filt);
  for (const auto& c : e.classes) {
    EXPECT_GE(c.dim, 3);
    EXPECT_LE(c.dim, 6);
  }
  ASSERT_EQ(e.classes.size(), 3u);  // dims 6, 4, 3
}

TEST(Cyclic, CodeFromGenerator) {
  const Field& f = Field::of(2);
  Poly g(f, {1, 1, 0, 1});  // 1 + x + x^3
  CyclicCode code = cyclic_code_from_gen(g, 7);
  EXPECT_EQ(code.dim, 4);
  EXPECT_EQ(code.gen * code.check, xn_minus_one(f, 7));
  GenMatrix m = code.generator_matrix();
  EXPECT_EQ(m.rows(), 4u);
  EXPECT_EQ(m.cols(), 7u);
  EXPECT_EQ(rank(m), 4u);
  EXPECT_EQ(min_distance_exact(m).weight, 3);  // Hamming again

  // Non-divisors are rejected.
  EXPECT_THROW(cyclic_code_from_gen(Poly(f, {1, 1, 1}), 7), std::invalid_argument);
  // Scalar multiples normalize to the same monic generator.
  const Field& f3 = Field::of(3);
  Poly g3(f3, {2, 2});  // 2(1 + x)
  CyclicCode c3 = cyclic_code_from_gen(g3, 8);
  EXPECT_EQ(c3.gen, Poly(f3, {1, 1}));
}

TEST(Cyclic, MembershipAndShiftInvariance) {
  std::mt19937_64 rng(9);
  for (int q : {2, 3, 5}) {
    const Field& f = Field::of(q);
    int n = q == 2 ? 15 : 8;
    ClassEnumeration e = enumerate_class_reps(f, n);
    for (const auto& cls : e.classes) {
      CyclicCode code = cyclic_code_from_gen(cls.gen, n);
      GenMatrix m = code.generator_matrix();
      // Random codewords are members, and so are their cyclic shifts.
      for (int iter = 0; iter < 20; ++iter) {
        std::vector<uint8_t> word(size_t(n), 0);
        for (size_t r = 0; r < m.rows(); ++r) {
          uint8_t coef = uint8_t(rng() % uint64_t(q));
          for (size_t c = 0; c < m.cols(); ++c)
            word[c] = f.add(word[c], f.mul(coef, m.at(r, c)));
        }
        EXPECT_TRUE(is_codeword(word, code));
        std::vector<uint8_t> shifted(size_t(n), 0);
        for (int i = 0; i < n; ++i) shifted[size_t((i + 1) % n)] = word[size_t(i)];
        EXPECT_TRUE(is_codeword(shifted, code));
      }
    }
  }
  // Negative case: a word outside the Hamming code.
  const Field& f2 = Field::of(2);
  CyclicCode ham = cyclic_code_from_gen(Poly(f2, {1, 1, 0, 1}), 7);
  std::vector<uint8_t> w{1, 0, 0, 0, 0, 0, 0};
  EXPECT_FALSE(is_codeword(w, ham));
}

TEST(Cyclic, EnumeratedLengthsAccountForEveryMultiset) {
  // classes (unfiltered) + merges = total number of multisets.
  for (auto [q, n] : {std::pair{2, 15}, {2, 21}, {3, 13}, {5, 12}}) {
    const Field& f = Field::of(q);
    ClassFilter all;
    all.k_min = 0;
    ClassEnumeration e = enumerate_class_reps(f, n, all);
    CoprimeSplit sp = split_by_characteristic(n, f.characteristic());
    size_t total = 1;
    unsigned cap = 1;
    for (int i = 0; i < sp.t; ++i) cap *= unsigned(f.characteristic());
    for (size_t i = 0; i < e.partition.cosets.size(); ++i) total *= size_t(cap) + 1;
    EXPECT_EQ(e.classes.size() + e.merges.size(), total) << "q=" << q << " n=" << n;
  }
}

}  // namespace
