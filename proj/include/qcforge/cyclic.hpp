#pragma once

// Cyclic codes of length n over GF(q), and their enumeration up to
// multiplier equivalence.
//
// Write n = n' * p^t with p the characteristic and gcd(n', p) = 1.  A cyclic
// code corresponds to a divisor of x^n - 1, i.e. to a choice of multiplicity
// 0..p^t for each irreducible factor of x^n' - 1, i.e. for each cyclotomic
// coset of q mod n'.  A multiplier w -> a*w (gcd(a, n') = 1) permutes the
// cosets and carries multiplicities along; codes in the same orbit are
// coordinate permutations of each other, so only one representative per
// orbit is worth searching.  The representative is the orbit member whose
// multiplicity vector is lexicographically smallest (cosets ordered by their
// smallest member).

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "qcforge/factor.hpp"
#include "qcforge/field.hpp"
#include "qcforge/matrix.hpp"
#include "qcforge/poly.hpp"

namespace qcforge {

struct CosetPartition {
  int n_prime = 1;
  std::vector<std::vector<int>> cosets;  // sorted, listed by smallest member
  std::vector<int> coset_of;             // residue -> index into cosets

  static CosetPartition make(int q, int n_prime) {
    CosetPartition p;
    p.n_prime = n_prime;
    p.cosets = cyclotomic_cosets(q, n_prime);
    p.coset_of.assign(size_t(n_prime), -1);
    for (size_t i = 0; i < p.cosets.size(); ++i)
      for (int w : p.cosets[i]) p.coset_of[size_t(w)] = int(i);
    return p;
  }
};

// Multiplicity per coset, aligned with CosetPartition::cosets.
struct CosetMultiset {
  std::vector<unsigned> mult;

  friend bool operator==(const CosetMultiset& a, const CosetMultiset& b) {
    return a.mult == b.mult;
  }
  friend bool operator<(const CosetMultiset& a, const CosetMultiset& b) {
    return a.mult < b.mult;
  }
};

// Image of a multiset under the multiplier w -> a*w mod n'.
inline CosetMultiset multiplier_image(const CosetPartition& p, const CosetMultiset& ms, int a) {
  if (p.n_prime > 1 && std::gcd(a, p.n_prime) != 1)
    throw std::invalid_argument("multiplier must be a unit");
  CosetMultiset img;
  img.mult.assign(ms.mult.size(), 0);
  for (size_t i = 0; i < p.cosets.size(); ++i) {
    int w = p.cosets[i][0];
    int target = p.coset_of[size_t((int64_t(a) * w) % p.n_prime)];
    img.mult[size_t(target)] = ms.mult[i];
  }
  return img;
}

inline std::vector<int> units_mod(int n) {
  if (n == 1) return {1};  // trivial group, 1 acts as the identity
  std::vector<int> us;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) us.push_back(a);
  return us;
}

struct CanonicalImage {
  CosetMultiset ms;
  int multiplier;  // smallest unit reaching the lex-least image
};

inline CanonicalImage canonical_multiset(const CosetPartition& p, const CosetMultiset& ms) {
  CanonicalImage best{ms, 1};
  for (int a : units_mod(p.n_prime)) {
    CosetMultiset img = multiplier_image(p, ms, a);
    if (img < best.ms) best = {std::move(img), a};
  }
  return best;
}

struct CyclicCode {
  const Field* field = nullptr;
  int length = 0;
  Poly gen;    // monic divisor of x^n - 1
  Poly check;  // (x^n - 1) / gen
  int dim = 0;

  // k x n circulant matrix: row i holds the coefficients of x^i * gen.
  GenMatrix generator_matrix() const {
    GenMatrix m(*field, size_t(dim), size_t(length));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= gen.degree(); ++j) m.at(size_t(i), size_t(i + j)) = gen.coeff(j);
    return m;
  }
};

inline CyclicCode cyclic_code_from_gen(const Poly& g, int n) {
  if (g.is_zero()) throw std::invalid_argument("generator must be nonzero");
  const Field& f = g.field();
  Poly mono = make_monic(g);
  Poly modulus = xn_minus_one(f, n);
  DivModResult dm = divmod(modulus, mono);
  if (!dm.rem.is_zero()) throw std::invalid_argument("generator does not divide x^n - 1");
  return CyclicCode{&f, n, mono, dm.quot, n - mono.degree()};
}

// Membership: a length-n word is in the code iff its polynomial is a
// multiple of the generator.
inline bool is_codeword(std::span<const uint8_t> v, const CyclicCode& code) {
  if (int(v.size()) != code.length) throw std::invalid_argument("word length mismatch");
  Poly p(*code.field, std::vector<uint8_t>(v.begin(), v.end()));
  return p.is_zero() || divides(code.gen, p);
}

struct CyclicClass {
  CosetMultiset ms;
  Poly gen;
  Poly check;
  int dim = 0;
};

struct MergeEvent {
  CosetMultiset from;
  CosetMultiset to;  // canonical representative of the orbit
  int multiplier;    // unit a with image(from, a) = to
};

struct ClassFilter {
  int k_min = 1;  // the zero code is skipped by default
  int k_max = INT_MAX;
};

struct ClassEnumeration {
  const Field* field = nullptr;
  int n = 0;
  int n_prime = 1;
  int t = 0;
  CosetPartition partition;
  std::vector<CyclicClass> classes;   // canonical representatives, in counter order
  std::vector<MergeEvent> merges;     // every non-canonical multiset, mapped home
};

// Walks every multiplicity vector in mixed-radix counter order (coset 0 is
// the fastest digit) and keeps one representative per multiplier orbit.
inline ClassEnumeration enumerate_class_reps(const Field& f, int n, ClassFilter filter = {}) {
  ClassEnumeration out;
  out.field = &f;
  out.n = n;
  CoprimeSplit sp = split_by_characteristic(n, f.characteristic());
  out.n_prime = sp.n_prime;
  out.t = sp.t;
  out.partition = CosetPartition::make(f.q(), sp.n_prime);
  unsigned max_mult = 1;
  for (int i = 0; i < sp.t; ++i) max_mult *= unsigned(f.characteristic());

  RootOfUnity root = primitive_root_of_unity(f, sp.n_prime);
  std::vector<Poly> factors;
  factors.reserve(out.partition.cosets.size());
  for (const auto& coset : out.partition.cosets) factors.push_back(minimal_poly(coset, root));

  size_t nc = out.partition.cosets.size();
  CosetMultiset ms;
  ms.mult.assign(nc, 0);
  Poly modulus = xn_minus_one(f, n);
  for (;;) {
    CanonicalImage canon = canonical_multiset(out.partition, ms);
    if (canon.ms == ms) {
      int deg = 0;
      for (size_t i = 0; i < nc; ++i) deg += int(ms.mult[i]) * factors[i].degree();
      int k = n - deg;
      if (k >= filter.k_min && k <= filter.k_max) {
        Poly g = Poly::one(f);
        for (size_t i = 0; i < nc; ++i)
          for (unsigned e = 0; e < ms.mult[i]; ++e) g = g * factors[i];
        out.classes.push_back({ms, g, divmod(modulus, g).quot, k});
      }
    } else {
      out.merges.push_back({ms, canon.ms, canon.multiplier});
    }
    // next multiset
    size_t pos = 0;
    while (pos < nc && ms.mult[pos] == max_mult) ms.mult[pos++] = 0;
    if (pos == nc) break;
    ++ms.mult[pos];
  }
  return out;
}

}  // namespace qcforge
