#pragma once

// Dense matrices over a small field, plus the linear-algebra helpers the
// code constructions need: row reduction, dual (parity check) bases,
// subspace tests, basis extension and the property classifiers.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcforge/field.hpp"

namespace qcforge {

class GenMatrix {
public:
  GenMatrix(const Field& f, size_t rows, size_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static GenMatrix from_rows(const Field& f, const std::vector<std::vector<uint8_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
    GenMatrix m(f, rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (size_t c = 0; c < m.cols_; ++c) {
        if (!f.valid(rows[r][c])) throw std::invalid_argument("entry out of range");
        m.at(r, c) = rows[r][c];
      }
    }
    return m;
  }

  const Field& field() const { return *f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint8_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint8_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  const uint8_t* row(size_t r) const { return a_.data() + r * cols_; }
  uint8_t* row(size_t r) { return a_.data() + r * cols_; }
  std::span<const uint8_t> row_span(size_t r) const { return {row(r), cols_}; }

  friend bool operator==(const GenMatrix& a, const GenMatrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  const Field* f_;
  size_t rows_, cols_;
  std::vector<uint8_t> a_;
};

// Stack A on top of B.
inline GenMatrix vstack(const GenMatrix& a, const GenMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  GenMatrix m(a.field(), a.rows() + b.rows(), a.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (size_t r = 0; r < b.rows(); ++r)
    for (size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
  return m;
}

// Place A and B side by side.
inline GenMatrix hstack(const GenMatrix& a, const GenMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
  GenMatrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
  }
  return m;
}

struct RrefResult {
  GenMatrix mat;                // reduced row echelon form, zero rows kept
  size_t rank;
  std::vector<size_t> pivots;   // pivot column per nonzero row
};

inline RrefResult rref(const GenMatrix& in) {
  const Field& f = in.field();
  GenMatrix m = in;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    uint8_t inv = f.inv(m.at(r, c));
    for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      uint8_t s = m.at(i, c);
      if (s == 0) continue;
      for (size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(s, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline size_t rank(const GenMatrix& m) { return rref(m).rank; }

// True if v lies in the row space described by an rref.
inline bool in_row_space(const RrefResult& rr, std::span<const uint8_t> v) {
  const Field& f = rr.mat.field();
  if (v.size() != rr.mat.cols()) throw std::invalid_argument("vector length mismatch");
  std::vector<uint8_t> w(v.begin(), v.end());
  for (size_t i = 0; i < rr.rank; ++i) {
    uint8_t s = w[rr.pivots[i]];
    if (s == 0) continue;
    for (size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(s, rr.mat.at(i, j)));
  }
  for (uint8_t c : w)
    if (c != 0) return false;
  return true;
}

// True if every row of sub lies in the row space of sup.
inline bool is_subspace(const GenMatrix& sub, const GenMatrix& sup) {
  require_same_field(sub.field(), sup.field());
  if (sub.cols() != sup.cols()) throw std::invalid_argument("ambient lengths differ");
  RrefResult rr = rref(sup);
  for (size_t r = 0; r < sub.rows(); ++r)
    if (!in_row_space(rr, sub.row_span(r))) return false;
  return true;
}

// Basis of the null space of the row space of G: an (n - rank) x n matrix H
// with G H^T = 0.  Input must have full row rank (it is a generator basis).
inline GenMatrix dual_basis(const GenMatrix& g) {
  const Field& f = g.field();
  RrefResult rr = rref(g);
  if (rr.rank != g.rows())
    throw std::invalid_argument("dual basis needs a full-rank generator matrix");
  size_t n = g.cols(), k = rr.rank;
  std::vector<bool> is_pivot(n, false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  if (free_cols.empty()) throw std::invalid_argument("full space has an empty dual basis");
  GenMatrix h(f, free_cols.size(), n);
  for (size_t i = 0; i < free_cols.size(); ++i) {
    size_t fc = free_cols[i];
    h.at(i, fc) = 1;
    // Solve <row_r, h_i> = 0 for the pivot coordinates.
    for (size_t r = 0; r < k; ++r) h.at(i, rr.pivots[r]) = f.neg(rr.mat.at(r, fc));
  }
  return h;
}

inline uint8_t dot(const Field& f, std::span<const uint8_t> a, std::span<const uint8_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: lengths differ");
  uint8_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

// G * G^T as a k x k matrix.
inline GenMatrix gram(const GenMatrix& g) {
  GenMatrix m(g.field(), g.rows(), g.rows());
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.rows(); ++j)
      m.at(i, j) = dot(g.field(), g.row_span(i), g.row_span(j));
  return m;
}

// Rows of `target` that extend the row space of `base` to the row space of
// `target`.  Requires base's row space to be contained in target's.
inline GenMatrix extend_basis(const GenMatrix& base, const GenMatrix& target) {
  require_same_field(base.field(), target.field());
  if (base.cols() != target.cols()) throw std::invalid_argument("ambient lengths differ");
  if (!is_subspace(base, target))
    throw std::invalid_argument("extend_basis: base is not contained in target");
  size_t have = rank(base), want = rank(target);
  std::vector<std::vector<uint8_t>> picked;
  GenMatrix acc = base;
  for (size_t r = 0; r < target.rows() && have + picked.size() < want; ++r) {
    RrefResult rr = rref(acc);
    if (in_row_space(rr, target.row_span(r))) continue;
    picked.emplace_back(target.row(r), target.row(r) + target.cols());
    acc = vstack(acc, GenMatrix::from_rows(acc.field(), {picked.back()}));
  }
  if (have + picked.size() != want)
    throw std::logic_error("extend_basis failed to reach the target rank");
  if (picked.empty()) throw std::invalid_argument("extend_basis: spaces coincide");
  return GenMatrix::from_rows(base.field(), picked);
}

struct PropertyFlags {
  bool self_orthogonal = false;  // C subset of C-dual
  bool dual_containing = false;  // C-dual subset of C
  bool lcd = false;              // C intersect C-dual = {0}
  bool reversible = false;       // coordinate reversal maps C onto itself
};

// Classifies via the Gram matrix G G^T: zero means self-orthogonal,
// nonsingular means linear complementary dual.  Requires full row rank.
inline PropertyFlags classify_properties(const GenMatrix& g) {
  RrefResult rr = rref(g);
  if (rr.rank != g.rows())
    throw std::invalid_argument("property classification needs a full-rank generator matrix");
  PropertyFlags flags;
  GenMatrix gr = gram(g);
  bool zero = true;
  for (size_t i = 0; i < gr.rows() && zero; ++i)
    for (size_t j = 0; j < gr.cols(); ++j)
      if (gr.at(i, j) != 0) {
        zero = false;
        break;
      }
  flags.self_orthogonal = zero;
  flags.lcd = rank(gr) == g.rows();
  // Dual-containing: every dual basis vector lies in the code.  Needs
  // dim(dual) <= dim(code), otherwise it cannot hold.
  size_t n = g.cols(), k = g.rows();
  if (n - k <= k && n > k)
    flags.dual_containing = is_subspace(dual_basis(g), g);
  else if (n == k)
    flags.dual_containing = true;  // dual is {0}
  GenMatrix rev(g.field(), g.rows(), g.cols());
  for (size_t r = 0; r < g.rows(); ++r)
    for (size_t c = 0; c < g.cols(); ++c) rev.at(r, c) = g.at(r, g.cols() - 1 - c);
  flags.reversible = is_subspace(rev, g);
  return flags;
}

}  // namespace qcforge
