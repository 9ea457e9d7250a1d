#pragma once

// Dense univariate polynomials over a small field.
//
// Coefficients are stored in ascending powers with no trailing zeros, so the
// zero polynomial stores nothing and degree() is only defined for nonzero
// input.  Polynomials are immutable values; arithmetic lives in free
// functions.  Ordering (operator<) is the canonical tie-break order used
// everywhere deterministic output matters: lower degree first, then the
// coefficient vector compared from the constant term up.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcforge/field.hpp"

namespace qcforge {

class Poly {
public:
  explicit Poly(const Field& f) : f_(&f) {}

  Poly(const Field& f, std::vector<uint8_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (uint8_t c : c_)
      if (!f.valid(c)) throw std::invalid_argument("coefficient out of range");
    trim();
  }

  static Poly constant(const Field& f, uint8_t c) { return Poly(f, {c}); }
  static Poly one(const Field& f) { return constant(f, 1); }
  static Poly x(const Field& f) { return Poly(f, {0, 1}); }
  static Poly x_pow(const Field& f, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::vector<uint8_t> c(size_t(e) + 1, 0);
    c.back() = 1;
    return Poly(f, std::move(c));
  }

  const Field& field() const { return *f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const {
    if (c_.empty()) throw std::logic_error("degree of zero polynomial");
    return int(c_.size()) - 1;
  }
  uint8_t coeff(int i) const {
    return (i >= 0 && size_t(i) < c_.size()) ? c_[size_t(i)] : 0;
  }
  uint8_t leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<uint8_t>& coeffs() const { return c_; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    require_same_field(*a.f_, *b.f_);
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return a.c_ < b.c_;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const Field* f_;
  std::vector<uint8_t> c_;
};

inline Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  std::vector<uint8_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(int(i)), b.coeff(int(i)));
  return Poly(f, std::move(c));
}

inline Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  std::vector<uint8_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(int(i)), b.coeff(int(i)));
  return Poly(f, std::move(c));
}

inline Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<uint8_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    uint8_t ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(ai, b.coeffs()[j]));
  }
  return Poly(f, std::move(c));
}

inline Poly scale(const Poly& a, uint8_t s) {
  const Field& f = a.field();
  std::vector<uint8_t> c(a.coeffs());
  for (auto& ci : c) ci = f.mul(ci, s);
  return Poly(f, std::move(c));
}

struct DivModResult {
  Poly quot;
  Poly rem;
};

inline DivModResult divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<uint8_t> rem(a.coeffs());
  int db = b.degree();
  if (a.is_zero() || a.degree() < db) return {Poly(f), a};
  std::vector<uint8_t> quot(size_t(a.degree() - db) + 1, 0);
  uint8_t lead_inv = f.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    uint8_t r = rem[size_t(i)];
    if (r == 0) continue;
    uint8_t qc = f.mul(r, lead_inv);
    quot[size_t(i - db)] = qc;
    for (int j = 0; j <= db; ++j)
      rem[size_t(i - db + j)] = f.sub(rem[size_t(i - db + j)], f.mul(qc, b.coeff(j)));
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

inline bool divides(const Poly& a, const Poly& b) {
  return (b % a).is_zero();
}

inline Poly make_monic(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("cannot scale zero polynomial to monic");
  if (a.leading() == 1) return a;
  return scale(a, a.field().inv(a.leading()));
}

// Monic gcd; gcd(0, 0) is rejected.
inline Poly gcd(Poly a, Poly b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly pow_mod(Poly base, uint64_t e, const Poly& m) {
  const Field& f = base.field();
  Poly result = Poly::one(f) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

inline uint8_t eval(const Poly& p, uint8_t at) {
  const Field& f = p.field();
  uint8_t acc = 0;
  for (size_t i = p.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, at), p.coeffs()[i]);
  return acc;
}

// x^n - 1, the modulus of every circulant construction here.
inline Poly xn_minus_one(const Field& f, int n) {
  if (n <= 0) throw std::invalid_argument("length must be positive");
  std::vector<uint8_t> c(size_t(n) + 1, 0);
  c[0] = f.neg(1);
  c.back() = 1;
  return Poly(f, std::move(c));
}

inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    uint8_t c = p.coeff(i);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << int(c);
    if (i > 0 && c != 1) os << "*";
    if (i == 1) os << "x";
    if (i > 1) os << "x^" << i;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << to_string(p);
}

}  // namespace qcforge
