#pragma once

// 1-generator quasi-cyclic codes in ASR form: the generator tuple is
// (f_1 g, ..., f_ell g) over F_q[x]/(x^m - 1), giving a code of length m*ell
// and dimension m - deg g. The distance bound d_qc >= ell * d_cyclic holds
// whenever every f_i is a unit mod h = (x^m - 1)/g.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcforge/codec.hpp"
#include "qcforge/cyclic.hpp"
#include "qcforge/field.hpp"
#include "qcforge/matrix.hpp"
#include "qcforge/poly.hpp"
#include "qcforge/records.hpp"

namespace qcforge {

struct QCSpec {
  const Field* field = nullptr;
  int m = 0;
  int ell = 0;
  Poly g;
  Poly h;  // cofactor, g * h = x^m - 1
  std::vector<Poly> fs;

  int dim() const { return m - g.degree(); }
  int length() const { return m * ell; }

  // true when every f is a reduced unit mod h, the hypothesis under which
  // the ell * d_cyclic distance bound (theorem1_check) is guaranteed
  bool strict_asr() const {
    for (const auto& f : fs) {
      if (f.is_zero() || f.degree() >= h.degree()) return false;
      Poly d = gcd(f, h);
      if (d.degree() != 0) return false;
    }
    return true;
  }
};

namespace detail {

inline void check_spec_structure(const Field& f, int m, const Poly& g,
                                 const std::vector<Poly>& fs) {
  if (m < 1) throw std::invalid_argument("block length m must be positive");
  if (fs.empty()) throw std::invalid_argument("QC spec needs at least one f polynomial");
  if (g.is_zero() || !(g.field() == f)) throw std::invalid_argument("bad generator polynomial");
  if (g.leading() != 1) throw std::invalid_argument("generator must be monic");
  Poly modulus = xn_minus_one(f, m);
  if (!divides(g, modulus)) throw std::invalid_argument("generator must divide x^m - 1");
  if (g.degree() >= m) throw std::invalid_argument("generator leaves no dimension");
  const int h_deg = m - g.degree();
  for (const auto& fi : fs) {
    if (!(fi.field() == f)) throw std::invalid_argument("f polynomial over wrong field");
    if (!fi.is_zero() && fi.degree() >= h_deg)
      throw std::invalid_argument("f polynomial degree must be below deg h = " + std::to_string(h_deg));
  }
}

}  // namespace detail

// Strict constructor: enforces the ASR hypotheses gcd(f_i, h) = 1.
inline QCSpec make_qc_spec(const Field& f, int m, const Poly& g, std::vector<Poly> fs) {
  detail::check_spec_structure(f, m, g, fs);
  Poly h = xn_minus_one(f, m) / g;
  for (const auto& fi : fs) {
    if (fi.is_zero()) throw std::invalid_argument("f polynomial must be nonzero");
    if (gcd(fi, h).degree() != 0)
      throw std::invalid_argument("f polynomial shares a factor with the check polynomial");
  }
  return QCSpec{&f, m, int(fs.size()), g, std::move(h), std::move(fs)};
}

// Normalizes an arbitrary generator tuple (p_1, ..., p_ell) to ASR shape.
// Each p_i is reduced mod x^m - 1; g is the monic gcd of the reduced tuple
// together with x^m - 1, and f_i = p_i / g. The resulting code always has
// rank m - deg g: a combining polynomial a kills every block iff (x^m-1)/g
// divides a, and no nonzero a of degree < m - deg g can. Individual f_i may
// share factors with h; only the joint gcd is trivial.
inline QCSpec qc_spec_from_tuple(const Field& f, int m, const std::vector<Poly>& tuple) {
  if (m < 1) throw std::invalid_argument("block length m must be positive");
  if (tuple.empty()) throw std::invalid_argument("empty generator tuple");
  Poly modulus = xn_minus_one(f, m);
  std::vector<Poly> reduced;
  reduced.reserve(tuple.size());
  Poly g = modulus;
  bool any = false;
  for (const auto& p : tuple) {
    if (!(p.field() == f)) throw std::invalid_argument("tuple polynomial over wrong field");
    Poly r = p % modulus;
    if (!r.is_zero()) {
      g = gcd(g, r);
      any = true;
    }
    reduced.push_back(std::move(r));
  }
  if (!any) throw std::invalid_argument("tuple generates the zero code");
  std::vector<Poly> fs;
  fs.reserve(reduced.size());
  for (const auto& r : reduced) fs.push_back(r.is_zero() ? Poly(f) : r / g);
  Poly h = modulus / g;
  return QCSpec{&f, m, int(fs.size()), std::move(g), std::move(h), std::move(fs)};
}

// Row i carries x^i * f_j * g mod x^m - 1 in block j. Rank is always dim().
inline GenMatrix build_qc_matrix(const QCSpec& spec) {
  detail::check_spec_structure(*spec.field, spec.m, spec.g, spec.fs);
  const Field& f = *spec.field;
  const int m = spec.m;
  const int k = spec.dim();
  Poly modulus = xn_minus_one(f, m);
  if (!(spec.g * spec.h == modulus)) throw std::invalid_argument("check polynomial does not match");

  std::vector<std::vector<uint8_t>> blocks;  // base coefficient vector per block
  blocks.reserve(spec.fs.size());
  for (const auto& fi : spec.fs) {
    Poly base = (fi * spec.g) % modulus;
    std::vector<uint8_t> v(size_t(m), 0);
    for (size_t c = 0; c < base.coeffs().size(); ++c) v[c] = base.coeffs()[c];
    blocks.push_back(std::move(v));
  }

  GenMatrix out(f, size_t(k), size_t(spec.length()));
  for (int i = 0; i < k; ++i)
    for (size_t j = 0; j < blocks.size(); ++j)
      for (int c = 0; c < m; ++c)
        out.at(size_t(i), j * size_t(m) + size_t((c + i) % m)) = blocks[j][size_t(c)];
  return out;
}

// Draws each f_i uniformly over polynomials of degree < deg h, rejecting
// non-units mod h. Deterministic for a fixed seed.
inline QCSpec asr_sample(const CyclicCode& code, int ell, uint64_t seed) {
  if (ell < 2) throw std::invalid_argument("asr_sample needs ell >= 2");
  if (code.dim < 1) throw std::invalid_argument("cyclic code must have positive dimension");
  const Field& f = *code.field;
  const unsigned q = unsigned(f.q());
  const int h_deg = code.check.degree();
  std::mt19937_64 rng(seed);
  std::vector<Poly> fs;
  fs.reserve(size_t(ell));
  for (int i = 0; i < ell; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000000) throw std::logic_error("unit sampling failed to terminate");
      std::vector<uint8_t> c(size_t(h_deg), 0);
      for (auto& v : c) v = uint8_t(rng() % q);
      Poly cand(f, std::move(c));
      if (cand.is_zero()) continue;
      if (gcd(cand, code.check).degree() == 0) {
        fs.push_back(std::move(cand));
        break;
      }
    }
  }
  return make_qc_spec(f, code.length, code.gen, std::move(fs));
}

inline bool theorem1_check(const QCSpec& spec, int d_cyclic, int d_qc) {
  return d_qc >= spec.ell * d_cyclic;
}

// Rebuilds the QC spec a ledger record describes. Both provenance kinds go
// through tuple normalization, so a record whose printed g is not the true
// joint gcd comes back with the honest generator (and a different dim for
// verification to flag).
inline QCSpec qc_spec_from_record(const CodeRecord& r) {
  if (r.prov != Provenance::qc && r.prov != Provenance::qc_tuple)
    throw std::invalid_argument("record has no QC generator payload");
  const Field& f = Field::of(r.q);
  std::vector<Poly> tuple;
  tuple.reserve(r.fs.size());
  if (r.prov == Provenance::qc) {
    Poly g = decode_gen(r.g, f);
    for (const auto& s : r.fs) tuple.push_back(decode_gen(s, f) * g);
  } else {
    for (const auto& s : r.fs) tuple.push_back(decode_gen(s, f));
  }
  return qc_spec_from_tuple(f, r.m, tuple);
}

}  // namespace qcforge
