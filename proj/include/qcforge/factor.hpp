#pragma once

// Factorization of x^n - 1 over a small field, via cyclotomic cosets and
// minimal polynomials of roots of unity.
//
// Write n = n' * p^t with p the field characteristic and gcd(n', p) = 1.
// Then x^n - 1 = (x^n' - 1)^(p^t), and the irreducible factors of x^n' - 1
// are the minimal polynomials g_S(x) = prod_{w in S} (x - beta^w) of the
// cyclotomic cosets S of q modulo n', where beta is a primitive n'-th root
// of unity living in GF(q^e), e = ord_{n'}(q).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qcforge/extfield.hpp"
#include "qcforge/field.hpp"
#include "qcforge/poly.hpp"

namespace qcforge {

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; int64_t(p) * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Smallest k >= 1 with a^k = 1 (mod n).  Requires gcd(a, n) = 1 and n >= 1.
inline int multiplicative_order(int a, int n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  if (n == 1) return 1;
  a %= n;
  if (a < 0) a += n;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("order undefined: arguments not coprime");
  int k = 1;
  int64_t v = a;
  while (v != 1) {
    v = (v * a) % n;
    ++k;
    if (k > n) throw std::logic_error("order computation ran away");
  }
  return k;
}

struct CoprimeSplit {
  int n_prime;  // part of n coprime to the characteristic
  int t;        // n = n_prime * p^t
};

inline CoprimeSplit split_by_characteristic(int n, int p) {
  if (n <= 0) throw std::invalid_argument("length must be positive");
  int t = 0;
  while (n % p == 0) {
    n /= p;
    ++t;
  }
  return {n, t};
}

// Cosets {w, wq, wq^2, ...} mod n', each sorted, listed by smallest member.
inline std::vector<std::vector<int>> cyclotomic_cosets(int q, int n_prime) {
  if (n_prime < 1) throw std::invalid_argument("modulus must be positive");
  if (std::gcd(q, n_prime) != 1)
    throw std::invalid_argument("field order must be coprime to the modulus");
  std::vector<bool> seen(size_t(n_prime), false);
  std::vector<std::vector<int>> cosets;
  for (int w = 0; w < n_prime; ++w) {
    if (seen[size_t(w)]) continue;
    std::vector<int> coset;
    int v = w;
    do {
      seen[size_t(v)] = true;
      coset.push_back(v);
      v = int((int64_t(v) * q) % n_prime);
    } while (v != w);
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

struct RootOfUnity {
  ExtField field;
  ExtField::Elem beta;  // primitive n'-th root of unity
  int n_prime;
};

// Checks that a has multiplicative order exactly n in its field.
inline bool has_order(const ExtField& F, const ExtField::Elem& a, int n) {
  if (F.is_zero(a)) return false;
  if (!F.is_one(F.pow(a, uint64_t(n)))) return false;
  for (int r : prime_divisors(n))
    if (F.is_one(F.pow(a, uint64_t(n / r)))) return false;
  return true;
}

inline RootOfUnity primitive_root_of_unity(const Field& f, int n_prime) {
  if (n_prime < 1) throw std::invalid_argument("root order must be positive");
  if (n_prime == 1) {
    ExtField F(f, 1);
    ExtField::Elem one = F.one();
    return {std::move(F), std::move(one), 1};
  }
  if (std::gcd(f.q(), n_prime) != 1)
    throw std::invalid_argument("no primitive root: order shares a factor with q");
  int e = multiplicative_order(f.q() % n_prime, n_prime);
  ExtField F(f, e);
  uint64_t cofactor = (F.order() - 1) / uint64_t(n_prime);
  // Raise candidates to the cofactor power until one lands on an element of
  // exact order n'.  Candidates come in the deterministic element order.
  for (uint64_t idx = 1; idx < F.order(); ++idx) {
    ExtField::Elem beta = F.pow(F.element(idx), cofactor);
    if (has_order(F, beta, n_prime)) return {std::move(F), std::move(beta), n_prime};
  }
  throw std::logic_error("primitive root search exhausted the field");
}

// Minimal polynomial prod_{w in coset} (x - beta^w), which always has
// coefficients in the base field.
inline Poly minimal_poly(const std::vector<int>& coset, const RootOfUnity& root) {
  const ExtField& F = root.field;
  std::vector<ExtField::Elem> acc{F.one()};  // ascending coefficients
  for (int w : coset) {
    ExtField::Elem r = F.pow(root.beta, uint64_t(((w % root.n_prime) + root.n_prime) % root.n_prime));
    std::vector<ExtField::Elem> next(acc.size() + 1, F.zero());
    for (size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], acc[i]);
      next[i] = F.sub(next[i], F.mul(acc[i], r));
    }
    acc = std::move(next);
  }
  std::vector<uint8_t> coeffs(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) {
    auto c = F.as_base(acc[i]);
    if (!c) throw std::logic_error("minimal polynomial left the base field");
    coeffs[i] = *c;
  }
  return Poly(root.field.base(), std::move(coeffs));
}

struct PolyFactor {
  Poly p;
  int multiplicity;
};

// Irreducible factorization of x^n - 1, sorted in canonical poly order.
inline std::vector<PolyFactor> factor_xn_minus_1(const Field& f, int n) {
  auto [n_prime, t] = split_by_characteristic(n, f.characteristic());
  int mult = n / n_prime;  // p^t
  RootOfUnity root = primitive_root_of_unity(f, n_prime);
  std::vector<PolyFactor> factors;
  for (const auto& coset : cyclotomic_cosets(f.q(), n_prime))
    factors.push_back({minimal_poly(coset, root), mult});
  std::sort(factors.begin(), factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return a.p < b.p; });
  return factors;
}

// Multiplicity of each irreducible factor of x^m - 1 inside g.  Errors out
// unless g divides x^m - 1 (that check comes free: the factor degrees must
// account for all of deg g).
inline std::vector<PolyFactor> factor_divisor(const Poly& g, int m) {
  if (g.is_zero()) throw std::invalid_argument("zero polynomial is not a divisor");
  const Field& f = g.field();
  std::vector<PolyFactor> out;
  int accounted = 0;
  Poly gm = make_monic(g);
  for (const auto& [p, max_mult] : factor_xn_minus_1(f, m)) {
    int e = 0;
    while (e < max_mult && divides(p, gm)) {
      gm = gm / p;
      ++e;
    }
    if (e > 0) {
      accounted += e * p.degree();
      out.push_back({p, e});
    }
  }
  if (accounted != g.degree())
    throw std::invalid_argument("polynomial does not divide x^m - 1");
  return out;
}

// All monic products of the given factors (respecting multiplicities) with
// total degree exactly b, in canonical order.
inline std::vector<Poly> divisors_of_degree(const std::vector<PolyFactor>& factors, int b) {
  const Field* f = factors.empty() ? nullptr : &factors[0].p.field();
  std::vector<Poly> out;
  std::vector<Poly> stack;
  auto dfs = [&](auto&& self, size_t i, int remaining, const Poly& acc) -> void {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    if (i >= factors.size()) return;
    Poly cur = acc;
    for (int e = 0; e <= factors[i].multiplicity; ++e) {
      if (e > 0) {
        if (factors[i].p.degree() * e > remaining) break;
        cur = cur * factors[i].p;
      }
      self(self, i + 1, remaining - factors[i].p.degree() * e, cur);
    }
  };
  if (b == 0) {
    if (f) out.push_back(Poly::one(*f));
    return out;
  }
  if (!f) return out;
  dfs(dfs, 0, b, Poly::one(*f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcforge
