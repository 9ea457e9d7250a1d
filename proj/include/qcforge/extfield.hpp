#pragma once

// Extension fields GF(q^e) over the small base fields.
//
// Elements are coefficient vectors of length e in the power basis of a fixed
// monic irreducible defining polynomial.  When no defining polynomial is
// given, the lexicographically smallest one is chosen: candidates
// x^e + c_{e-1} x^{e-1} + ... + c_0 are tried in the order given by reading
// (c_0, c_1, ...) as base-q digits of an increasing counter, least
// significant digit first, and the first irreducible wins.  That makes the
// tower reproducible across runs and machines.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcforge/field.hpp"
#include "qcforge/poly.hpp"

namespace qcforge {

// Rabin's criterion: f of degree e is irreducible over GF(q) iff
// x^(q^e) = x (mod f) and gcd(x^(q^(e/r)) - x, f) = 1 for every prime r | e.
inline bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.degree() == 0) return false;
  int e = f.degree();
  if (e == 1) return true;
  const Field& base = f.field();
  uint64_t q = uint64_t(base.q());

  // q-th power Frobenius iterated j times sends x to x^(q^j) mod f.
  auto frobenius = [&](Poly t, int times) {
    for (int i = 0; i < times; ++i) t = pow_mod(t, q, f);
    return t;
  };

  Poly x = Poly::x(base);
  if (frobenius(x, e) != x % f) return false;
  for (int r = 2; r <= e; ++r) {
    if (e % r != 0) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) { prime = false; break; }
    if (!prime) continue;
    Poly u = frobenius(x, e / r) - x;
    if (u.is_zero() || gcd(u, f).degree() > 0) return false;
  }
  return true;
}

class ExtField {
public:
  using Elem = std::vector<uint8_t>;

  ExtField(const Field& base, int degree)
      : base_(&base), e_(degree), defining_(find_defining(base, degree)) {
    init_order();
  }

  ExtField(const Field& base, Poly defining)
      : base_(&base), e_(defining.degree()), defining_(std::move(defining)) {
    if (!(defining_.field() == base)) throw std::invalid_argument("defining polynomial field mismatch");
    if (defining_.leading() != 1) throw std::invalid_argument("defining polynomial must be monic");
    if (!is_irreducible(defining_)) throw std::invalid_argument("defining polynomial is reducible");
    init_order();
  }

  const Field& base() const { return *base_; }
  int degree() const { return e_; }
  uint64_t order() const { return order_; }
  const Poly& defining() const { return defining_; }

  Elem zero() const { return Elem(size_t(e_), 0); }
  Elem one() const { return from_base(1); }
  Elem from_base(uint8_t c) const {
    Elem v(size_t(e_), 0);
    v[0] = c;
    return v;
  }

  // Element whose coordinates are the base-q digits of index (digit i is the
  // coefficient of the i-th basis power).  Used to enumerate the field.
  Elem element(uint64_t index) const {
    Elem v(size_t(e_), 0);
    uint64_t q = uint64_t(base_->q());
    for (int i = 0; i < e_ && index > 0; ++i) {
      v[size_t(i)] = uint8_t(index % q);
      index /= q;
    }
    if (index > 0) throw std::invalid_argument("element index out of range");
    return v;
  }

  bool is_zero(const Elem& a) const {
    for (uint8_t c : a)
      if (c != 0) return false;
    return true;
  }
  bool is_one(const Elem& a) const { return a == one(); }

  std::optional<uint8_t> as_base(const Elem& a) const {
    for (size_t i = 1; i < a.size(); ++i)
      if (a[i] != 0) return std::nullopt;
    return a[0];
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(size_t(e_), 0);
    for (int i = 0; i < e_; ++i) r[size_t(i)] = base_->add(a[size_t(i)], b[size_t(i)]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(size_t(e_), 0);
    for (int i = 0; i < e_; ++i) r[size_t(i)] = base_->sub(a[size_t(i)], b[size_t(i)]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(size_t(e_), 0);
    for (int i = 0; i < e_; ++i) r[size_t(i)] = base_->neg(a[size_t(i)]);
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    // Schoolbook product, then reduction by the defining polynomial.
    std::vector<uint8_t> prod(size_t(2 * e_ - 1), 0);
    for (int i = 0; i < e_; ++i) {
      uint8_t ai = a[size_t(i)];
      if (ai == 0) continue;
      for (int j = 0; j < e_; ++j)
        prod[size_t(i + j)] = base_->add(prod[size_t(i + j)], base_->mul(ai, b[size_t(j)]));
    }
    for (int i = 2 * e_ - 2; i >= e_; --i) {
      uint8_t c = prod[size_t(i)];
      if (c == 0) continue;
      prod[size_t(i)] = 0;
      // x^i = x^(i-e) * (x^e mod defining); x^e = -(lower part of defining).
      for (int j = 0; j < e_; ++j) {
        uint8_t d = defining_.coeff(j);
        if (d != 0)
          prod[size_t(i - e_ + j)] = base_->sub(prod[size_t(i - e_ + j)], base_->mul(c, d));
      }
    }
    prod.resize(size_t(e_));
    return prod;
  }

  Elem pow(Elem a, uint64_t n) const {
    Elem r = one();
    while (n > 0) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

private:
  static Poly find_defining(const Field& base, int degree) {
    if (degree <= 0) throw std::invalid_argument("extension degree must be positive");
    uint64_t q = uint64_t(base.q());
    // q^degree candidates for the low coefficients; the search virtually
    // always ends after a few dozen tries.
    for (uint64_t v = 0;; ++v) {
      std::vector<uint8_t> c(size_t(degree) + 1, 0);
      uint64_t rest = v;
      for (int i = 0; i < degree; ++i) {
        c[size_t(i)] = uint8_t(rest % q);
        rest /= q;
      }
      if (rest > 0) throw std::runtime_error("no irreducible polynomial found");
      c[size_t(degree)] = 1;
      Poly cand(base, std::move(c));
      if (is_irreducible(cand)) return cand;
    }
  }

  void init_order() {
    order_ = 1;
    for (int i = 0; i < e_; ++i) {
      if (order_ > UINT64_MAX / uint64_t(base_->q()))
        throw std::overflow_error("field order exceeds 64 bits");
      order_ *= uint64_t(base_->q());
    }
  }

  const Field* base_;
  int e_;
  Poly defining_;
  uint64_t order_ = 0;
};

}  // namespace qcforge
