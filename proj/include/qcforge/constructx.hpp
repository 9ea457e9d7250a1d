#pragma once

// Construction X and friends: glue a third code onto the coset space between
// a nested code pair, walk a QC code up or down its divisor lattice, and the
// three table modifications (shorten, puncture, expurgate).

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcforge/distance.hpp"
#include "qcforge/factor.hpp"
#include "qcforge/matrix.hpp"
#include "qcforge/qc.hpp"
#include "qcforge/records.hpp"

namespace qcforge {

// [[G1* G3], [G2 0]] where G1* extends C2's basis to C1. Row i of the
// extension pairs with row i of C3, realizing the coset-representative
// pairing without enumerating cosets.
inline GenMatrix construction_x(const GenMatrix& c1, const GenMatrix& c2, const GenMatrix& c3) {
  require_same_field(c1.field(), c2.field());
  require_same_field(c1.field(), c3.field());
  if (c1.cols() != c2.cols()) throw std::invalid_argument("C1 and C2 must share a length");
  size_t k1 = rank(c1), k2 = rank(c2), b = rank(c3);
  if (b != c3.rows()) throw std::invalid_argument("C3 generator must have full rank");
  if (k1 <= k2) throw std::invalid_argument("C2 must be a proper subcode of C1");
  if (k1 - k2 != b) throw std::invalid_argument("rank gap between C1 and C2 must equal dim C3");
  GenMatrix ext = extend_basis(c2, c1);  // b rows, also validates containment

  const Field& f = c1.field();
  size_t n1 = c1.cols(), n3 = c3.cols();
  GenMatrix out(f, k1, n1 + n3);
  for (size_t r = 0; r < b; ++r) {
    for (size_t c = 0; c < n1; ++c) out.at(r, c) = ext.at(r, c);
    for (size_t c = 0; c < n3; ++c) out.at(r, n1 + c) = c3.at(r, c);
  }
  for (size_t r = 0; r < k2; ++r)
    for (size_t c = 0; c < n1; ++c) out.at(b + r, c) = c2.at(r, c);
  return out;
}

namespace detail {

// Degree-b products of the irreducible factors of g, as a divisor multiset
// (no duplicate divisors when factors repeat).
inline std::vector<Poly> degree_b_divisors(const Poly& g, int m, int b) {
  auto factors = factor_divisor(g, m);
  return divisors_of_degree(factors, b);
}

// A derived spec only counts if its tuple's joint gcd really is the claimed
// generator; otherwise the stated dimension would be a lie and the divisor is
// dropped.
inline bool joint_gcd_matches(const QCSpec& spec) {
  std::vector<Poly> tuple;
  tuple.reserve(spec.fs.size());
  for (const auto& fi : spec.fs) tuple.push_back(fi * spec.g);
  QCSpec norm = qc_spec_from_tuple(*spec.field, spec.m, tuple);
  return norm.g == spec.g;
}

}  // namespace detail

// Supercodes: divide a degree-b factor out of g, keep the same f tuple.
inline std::vector<QCSpec> qc_supercodes(const QCSpec& spec, int b) {
  if (b < 1) throw std::invalid_argument("b must be positive");
  const Field& f = *spec.field;
  std::vector<QCSpec> out;
  for (const auto& p : detail::degree_b_divisors(spec.g, spec.m, b)) {
    if (p.degree() != b) continue;  // skips the trivial divisor when b = 0 never happens; guard anyway
    Poly gp = spec.g / p;
    QCSpec cand{&f, spec.m, spec.ell, gp, xn_minus_one(f, spec.m) / gp, spec.fs};
    if (!detail::joint_gcd_matches(cand)) continue;
    out.push_back(std::move(cand));
  }
  return out;
}

// Subcodes: multiply a degree-b factor of h into g. The f tuple is reduced
// mod the new check polynomial h'' = h/p, which leaves the generated code
// unchanged: f = a*h'' + r means f*g*p = a*(x^m-1) + r*g*p.
inline std::vector<QCSpec> qc_subcodes(const QCSpec& spec, int b) {
  if (b < 1) throw std::invalid_argument("b must be positive");
  const Field& f = *spec.field;
  std::vector<QCSpec> out;
  for (const auto& p : detail::degree_b_divisors(spec.h, spec.m, b)) {
    if (spec.g.degree() + b >= spec.m) continue;  // no dimension left
    Poly gp = spec.g * make_monic(p);
    Poly hp = spec.h / p;
    std::vector<Poly> fs;
    fs.reserve(spec.fs.size());
    for (const auto& fi : spec.fs) fs.push_back(fi % hp);
    QCSpec cand{&f, spec.m, spec.ell, std::move(gp), std::move(hp), std::move(fs)};
    if (!detail::joint_gcd_matches(cand)) continue;
    out.push_back(std::move(cand));
  }
  return out;
}

struct ModifyResult {
  GenMatrix mat;
  bool changed;  // false only for expurgating an already even-weight code
};

namespace detail {

inline GenMatrix drop_columns(const GenMatrix& g, const std::set<size_t>& gone) {
  std::vector<std::vector<uint8_t>> rows;
  rows.reserve(g.rows());
  for (size_t r = 0; r < g.rows(); ++r) {
    std::vector<uint8_t> row;
    row.reserve(g.cols() - gone.size());
    for (size_t c = 0; c < g.cols(); ++c)
      if (!gone.count(c)) row.push_back(g.at(r, c));
    rows.push_back(std::move(row));
  }
  return GenMatrix::from_rows(g.field(), rows);
}

inline GenMatrix row_basis(const GenMatrix& g) {
  RrefResult rr = rref(g);
  if (rr.rank == 0) throw std::invalid_argument("zero matrix has no row basis");
  std::vector<std::vector<uint8_t>> rows;
  for (size_t r = 0; r < rr.rank; ++r) {
    std::vector<uint8_t> row(g.cols());
    for (size_t c = 0; c < g.cols(); ++c) row[c] = rr.mat.at(r, c);
    rows.push_back(std::move(row));
  }
  return GenMatrix::from_rows(g.field(), rows);
}

// Basis of {x : M x = 0} via the free columns of rref(M).
inline std::vector<std::vector<uint8_t>> nullspace(const GenMatrix& m) {
  const Field& f = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::vector<uint8_t>> out;
  for (size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<uint8_t> v(m.cols(), 0);
    v[fc] = 1;
    for (size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = f.neg(rr.mat.at(r, fc));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// positions are 0-indexed here; the CLI converts from the 1-indexed surface.
inline ModifyResult modify(const GenMatrix& g, const std::string& method,
                           const std::vector<int>& positions) {
  const Field& f = g.field();

  if (method == "expurgate") {
    if (f.q() != 2) throw std::invalid_argument("expurgation is defined over GF(2)");
    GenMatrix basis = detail::row_basis(g);
    std::vector<size_t> odd;
    for (size_t r = 0; r < basis.rows(); ++r) {
      int w = 0;
      for (size_t c = 0; c < basis.cols(); ++c) w += basis.at(r, c);
      if (w % 2 == 1) odd.push_back(r);
    }
    if (odd.empty()) return ModifyResult{basis, false};
    if (basis.rows() == 1) throw std::invalid_argument("expurgation empties the code");
    const size_t r0 = odd[0];
    std::set<size_t> odd_set(odd.begin(), odd.end());
    std::vector<std::vector<uint8_t>> rows;
    for (size_t r = 0; r < basis.rows(); ++r) {
      if (r == r0) continue;
      std::vector<uint8_t> row(basis.cols());
      for (size_t c = 0; c < basis.cols(); ++c)
        row[c] = odd_set.count(r) ? f.add(basis.at(r, c), basis.at(r0, c)) : basis.at(r, c);
      rows.push_back(std::move(row));
    }
    return ModifyResult{GenMatrix::from_rows(f, rows), true};
  }

  std::set<size_t> gone;
  for (int p : positions) {
    if (p < 0 || size_t(p) >= g.cols())
      throw std::invalid_argument("position " + std::to_string(p + 1) + " out of range");
    gone.insert(size_t(p));
  }
  if (gone.empty()) throw std::invalid_argument(method + " needs at least one position");

  if (method == "puncture") {
    return ModifyResult{detail::row_basis(detail::drop_columns(g, gone)), true};
  }

  if (method == "shorten") {
    GenMatrix basis = detail::row_basis(g);
    // constraint matrix: one row per shortened position, one column per basis row
    GenMatrix cons(f, gone.size(), basis.rows());
    size_t idx = 0;
    for (size_t p : gone) {
      for (size_t r = 0; r < basis.rows(); ++r) cons.at(idx, r) = basis.at(r, p);
      ++idx;
    }
    auto combos = detail::nullspace(cons);
    if (combos.empty()) throw std::invalid_argument("shortening empties the code");
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& x : combos) {
      std::vector<uint8_t> word(basis.cols(), 0);
      for (size_t r = 0; r < basis.rows(); ++r)
        for (size_t c = 0; c < basis.cols(); ++c)
          word[c] = f.add(word[c], f.mul(x[r], basis.at(r, c)));
      std::vector<uint8_t> kept;
      kept.reserve(word.size() - gone.size());
      for (size_t c = 0; c < word.size(); ++c)
        if (!gone.count(c)) kept.push_back(word[c]);
      rows.push_back(std::move(kept));
    }
    return ModifyResult{GenMatrix::from_rows(f, rows), true};
  }

  throw std::invalid_argument("unknown modification '" + method + "'");
}

// Algorithm: take the joint-gcd generator of the spec, climb to the best
// degree-b supercode, and glue every catalog code of dimension b onto the
// pair. Supercode quality is judged by exact minimum distance when the
// enlarged dimension fits the enumeration budget; otherwise the canonical
// smallest generator stands in and all emitted distances are bound-only.
inline std::vector<CodeRecord> algorithm1(const QCSpec& spec_in, int b,
                                          const std::vector<C3Code>& catalog, int max_len,
                                          DistanceOptions dopts = {}) {
  const Field& f = *spec_in.field;
  // renormalize so g really is the gcd of the generator tuple
  std::vector<Poly> tuple;
  for (const auto& fi : spec_in.fs) tuple.push_back(fi * spec_in.g);
  QCSpec spec = qc_spec_from_tuple(f, spec_in.m, tuple);

  std::vector<QCSpec> supers = qc_supercodes(spec, b);
  if (supers.empty()) return {};
  std::sort(supers.begin(), supers.end(),
            [](const QCSpec& a, const QCSpec& c) { return a.g < c.g; });

  const int budget = dopts.budget > 0 ? dopts.budget : default_distance_budget(f);
  const int k = spec.dim();
  const int k1 = k + b;
  const bool within = k1 <= budget;

  GenMatrix g2 = build_qc_matrix(spec);
  int d2 = 0;
  bool d2_exact = k <= budget;
  if (d2_exact) d2 = min_distance_exact(g2, dopts).weight;

  // pick the best supercode
  size_t best = 0;
  int best_d1 = 0;
  std::vector<GenMatrix> mats;
  mats.reserve(supers.size());
  for (size_t i = 0; i < supers.size(); ++i) {
    mats.push_back(build_qc_matrix(supers[i]));
    if (within) {
      int d1 = min_distance_exact(mats.back(), dopts).weight;
      if (d1 > best_d1) {
        best_d1 = d1;
        best = i;
      }
    }
  }
  const QCSpec& c1 = supers[best];
  const GenMatrix& g1 = mats[best];

  auto spec_record = [&](const QCSpec& s, int d, bool exact) {
    CodeRecord r;
    r.q = f.q();
    r.n = s.length();
    r.k = s.dim();
    r.d = std::max(1, d);
    r.d_exact = exact;
    r.prov = Provenance::qc;
    r.m = s.m;
    r.ell = s.ell;
    r.g = encode_gen(s.g);
    for (const auto& fi : s.fs) r.fs.push_back(encode_gen(fi));
    r.timestamp = now_timestamp();
    return r;
  };

  std::vector<CodeRecord> out;
  for (const auto& c3 : catalog) {
    if (c3.q != f.q() || c3.k != b) continue;
    if (spec.length() + c3.n > max_len) continue;
    GenMatrix gx = construction_x(g1, g2, c3.matrix());

    CodeRecord r;
    r.q = f.q();
    r.n = spec.length() + c3.n;
    r.k = k1;
    if (within) {
      r.d = min_distance_exact(gx, dopts).weight;
      r.d_exact = true;
    } else {
      // d >= min{d2, d1 + d3} and d1 >= 1 always
      r.d = d2_exact ? std::max(1, std::min(d2, 1 + c3.d)) : 1;
      r.d_exact = false;
    }
    r.prov = Provenance::cx;
    r.cx = std::make_shared<CxComponents>();
    r.cx->c1 = std::make_shared<CodeRecord>(spec_record(c1, within ? best_d1 : 1, within));
    r.cx->c2 = std::make_shared<CodeRecord>(spec_record(spec, d2, d2_exact));
    r.cx->c3 = c3;
    r.timestamp = now_timestamp();
    out.push_back(std::move(r));
  }
  return out;
}

// Subcode-direction counterpart: the input code stays on top of the pair and
// a degree-b subcode takes the C2 slot, so the glued code keeps the input's
// dimension while its length grows by the catalog code's.
inline std::vector<CodeRecord> algorithm1_sub(const QCSpec& spec_in, int b,
                                              const std::vector<C3Code>& catalog, int max_len,
                                              DistanceOptions dopts = {}) {
  const Field& f = *spec_in.field;
  std::vector<Poly> tuple;
  for (const auto& fi : spec_in.fs) tuple.push_back(fi * spec_in.g);
  QCSpec spec = qc_spec_from_tuple(f, spec_in.m, tuple);

  std::vector<QCSpec> subs = qc_subcodes(spec, b);
  if (subs.empty()) return {};
  std::sort(subs.begin(), subs.end(),
            [](const QCSpec& a, const QCSpec& c) { return a.g < c.g; });

  const int budget = dopts.budget > 0 ? dopts.budget : default_distance_budget(f);
  const int k = spec.dim();
  const bool within = k <= budget;  // the output has the input's dimension

  GenMatrix g1 = build_qc_matrix(spec);
  int d1 = 0;
  if (within) d1 = min_distance_exact(g1, dopts).weight;

  // pick the subcode with the best distance; its dimension k-b may fit the
  // budget even when k does not
  size_t best = 0;
  int best_d2 = 0;
  const bool d2_exact = k - b <= budget;
  std::vector<GenMatrix> mats;
  mats.reserve(subs.size());
  for (size_t i = 0; i < subs.size(); ++i) {
    mats.push_back(build_qc_matrix(subs[i]));
    if (d2_exact) {
      int d2 = min_distance_exact(mats.back(), dopts).weight;
      if (d2 > best_d2) {
        best_d2 = d2;
        best = i;
      }
    }
  }
  const QCSpec& c2 = subs[best];
  const GenMatrix& g2 = mats[best];

  auto spec_record = [&](const QCSpec& s, int d, bool exact) {
    CodeRecord r;
    r.q = f.q();
    r.n = s.length();
    r.k = s.dim();
    r.d = std::max(1, d);
    r.d_exact = exact;
    r.prov = Provenance::qc;
    r.m = s.m;
    r.ell = s.ell;
    r.g = encode_gen(s.g);
    for (const auto& fi : s.fs) r.fs.push_back(encode_gen(fi));
    r.timestamp = now_timestamp();
    return r;
  };

  std::vector<CodeRecord> out;
  for (const auto& c3 : catalog) {
    if (c3.q != f.q() || c3.k != b) continue;
    if (spec.length() + c3.n > max_len) continue;
    GenMatrix gx = construction_x(g1, g2, c3.matrix());

    CodeRecord r;
    r.q = f.q();
    r.n = spec.length() + c3.n;
    r.k = k;
    if (within) {
      r.d = min_distance_exact(gx, dopts).weight;
      r.d_exact = true;
    } else {
      r.d = d2_exact ? std::max(1, std::min(best_d2, 1 + c3.d)) : 1;
      r.d_exact = false;
    }
    r.prov = Provenance::cx;
    r.cx = std::make_shared<CxComponents>();
    r.cx->c1 = std::make_shared<CodeRecord>(spec_record(spec, d1, within));
    r.cx->c2 = std::make_shared<CodeRecord>(spec_record(c2, best_d2, d2_exact));
    r.cx->c3 = c3;
    r.timestamp = now_timestamp();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qcforge
