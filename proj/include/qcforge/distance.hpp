#pragma once

// Exact minimum distance by message enumeration.
//
// GF(2) codewords are packed into 64-bit words (coordinate c sits in bit
// c % 64 of word c / 64, so coordinate 0 is bit 0 of word 0) and the
// messages are visited in Gray-code order: step i toggles generator row
// ctz(i), so every codeword costs one XOR pass plus a popcount pass.  For
// q > 2 an odometer walk over base-q message digits does the same job with
// one row addition per digit change; a wrap from q-1 back to 0 is also a
// +1 change, so the carry chain adds each wrapped row exactly once.
//
// Parallel runs split the message space into shards by fixing the top
// digits of the message.  Shards partition the space, and min() is
// order-free, so the result does not depend on the thread count or
// schedule.  Early-exit runs are sequential: which word trips the
// threshold first depends on walk order, and a single fixed walk keeps
// that reproducible.

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qcforge/field.hpp"
#include "qcforge/matrix.hpp"

namespace qcforge {

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(int k, int budget)
      : std::runtime_error("dimension " + std::to_string(k) +
                           " exceeds the enumeration budget " + std::to_string(budget)),
        k(k), budget(budget) {}
  int k;
  int budget;
};

// Largest dimension enumerated by default; q^k stays within ~2^31 steps.
inline int default_distance_budget(const Field& f) {
  switch (f.q()) {
    case 2: return 31;
    case 3: return 18;
    default: return 14;
  }
}

struct DistanceOptions {
  int early_exit = 0;        // stop at the first word of weight <= this; 0 = full walk
  unsigned threads = 1;      // worker count for full walks
  int budget = 0;            // dimension cap override; 0 = per-field default
  uint64_t check_interval = 0;  // testing hook: re-derive the codeword every N steps
};

struct DistanceResult {
  int weight = 0;
  bool exact = true;  // false when an early exit cut the walk short
};

// GF(2) generator rows in packed form.
struct PackedRows {
  size_t rows = 0, cols = 0, words = 0;
  std::vector<uint64_t> w;  // row-major, `words` words per row

  static PackedRows pack(const GenMatrix& g) {
    if (g.field().q() != 2) throw std::invalid_argument("packing is a GF(2) representation");
    PackedRows p;
    p.rows = g.rows();
    p.cols = g.cols();
    p.words = (g.cols() + 63) / 64;
    p.w.assign(p.rows * p.words, 0);
    for (size_t r = 0; r < p.rows; ++r)
      for (size_t c = 0; c < p.cols; ++c)
        if (g.at(r, c)) p.w[r * p.words + c / 64] |= uint64_t(1) << (c % 64);
    return p;
  }

  GenMatrix unpack(const Field& f) const {
    GenMatrix g(f, rows, cols);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c)
        g.at(r, c) = uint8_t((w[r * words + c / 64] >> (c % 64)) & 1);
    return g;
  }
};

namespace detail {

template <int W>
inline void xor_row(uint64_t* cw, const uint64_t* row) {
  for (int j = 0; j < W; ++j) cw[j] ^= row[j];
}

template <int W>
inline int word_weight(const uint64_t* cw) {
  int s = 0;
  for (int j = 0; j < W; ++j) s += std::popcount(cw[j]);
  return s;
}

inline void check_gray_state(const PackedRows& p, size_t k_low, uint64_t i,
                             const uint64_t* base, const uint64_t* cw, size_t words) {
  std::vector<uint64_t> expect(base, base + words);
  uint64_t mask = i ^ (i >> 1);  // Gray code of the step index
  for (size_t b = 0; b < k_low; ++b)
    if ((mask >> b) & 1)
      for (size_t j = 0; j < words; ++j) expect[j] ^= p.w[b * words + j];
  for (size_t j = 0; j < words; ++j)
    if (expect[j] != cw[j])
      throw std::logic_error("Gray walk drifted from its decoded position at step " +
                             std::to_string(i));
}

// Walk one shard: low k_low rows in Gray order on top of a fixed base
// combination.  count_base says whether the base itself is a message
// (every shard except the all-zero one).
template <int W>
inline int gray_shard_min(const PackedRows& p, size_t k_low, const uint64_t* base,
                          bool count_base, uint64_t check_interval) {
  uint64_t cw[W];
  for (int j = 0; j < W; ++j) cw[j] = base[j];
  int best = count_base ? word_weight<W>(cw) : INT_MAX;
  const uint64_t steps = uint64_t(1) << k_low;
  for (uint64_t i = 1; i < steps; ++i) {
    xor_row<W>(cw, p.w.data() + size_t(std::countr_zero(i)) * W);
    int wt = word_weight<W>(cw);
    if (wt < best) best = wt;
    if (check_interval != 0 && i % check_interval == 0)
      check_gray_state(p, k_low, i, base, cw, size_t(W));
  }
  return best;
}

inline int gray_shard_min_generic(const PackedRows& p, size_t k_low, const uint64_t* base,
                                  bool count_base, uint64_t check_interval) {
  size_t words = p.words;
  std::vector<uint64_t> cw(base, base + words);
  auto weight = [&] {
    int s = 0;
    for (uint64_t v : cw) s += std::popcount(v);
    return s;
  };
  int best = count_base ? weight() : INT_MAX;
  const uint64_t steps = uint64_t(1) << k_low;
  for (uint64_t i = 1; i < steps; ++i) {
    const uint64_t* row = p.w.data() + size_t(std::countr_zero(i)) * words;
    for (size_t j = 0; j < words; ++j) cw[j] ^= row[j];
    int wt = weight();
    if (wt < best) best = wt;
    if (check_interval != 0 && i % check_interval == 0)
      check_gray_state(p, k_low, i, base, cw.data(), words);
  }
  return best;
}

inline int run_gray_shard(const PackedRows& p, size_t k_low, const uint64_t* base,
                          bool count_base, uint64_t check_interval) {
  switch (p.words) {
    case 1: return gray_shard_min<1>(p, k_low, base, count_base, check_interval);
    case 2: return gray_shard_min<2>(p, k_low, base, count_base, check_interval);
    case 3: return gray_shard_min<3>(p, k_low, base, count_base, check_interval);
    case 4: return gray_shard_min<4>(p, k_low, base, count_base, check_interval);
    default: return gray_shard_min_generic(p, k_low, base, count_base, check_interval);
  }
}

inline DistanceResult gray_early_exit(const PackedRows& p, int threshold,
                                      uint64_t check_interval) {
  size_t k = p.rows, words = p.words;
  std::vector<uint64_t> cw(words, 0);
  std::vector<uint64_t> zero(words, 0);
  int best = INT_MAX;
  const uint64_t steps = uint64_t(1) << k;
  for (uint64_t i = 1; i < steps; ++i) {
    const uint64_t* row = p.w.data() + size_t(std::countr_zero(i)) * words;
    int wt = 0;
    for (size_t j = 0; j < words; ++j) {
      cw[j] ^= row[j];
      wt += std::popcount(cw[j]);
    }
    if (wt < best) {
      best = wt;
      if (best <= threshold) return {best, false};
    }
    if (check_interval != 0 && i % check_interval == 0)
      check_gray_state(p, k, i, zero.data(), cw.data(), words);
  }
  return {best, true};
}

// Shared driver over shards indexed 0 .. shard_count-1.
template <typename ShardFn>
inline int min_over_shards(uint64_t shard_count, unsigned threads, ShardFn shard_min) {
  if (threads <= 1 || shard_count == 1) {
    int best = INT_MAX;
    for (uint64_t s = 0; s < shard_count; ++s) {
      int v = shard_min(s);
      if (v < best) best = v;
    }
    return best;
  }
  std::atomic<uint64_t> next{0};
  std::vector<int> local(threads, INT_MAX);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (uint64_t s; (s = next.fetch_add(1)) < shard_count;) {
        int v = shard_min(s);
        if (v < local[t]) local[t] = v;
      }
    });
  }
  for (auto& th : pool) th.join();
  int best = INT_MAX;
  for (int v : local) best = std::min(best, v);
  return best;
}

inline int gf2_full_min(const PackedRows& p, const DistanceOptions& opts) {
  int k = int(p.rows);
  // Fix the top s message bits per shard; keep shards coarse enough that
  // the per-shard walk dominates.
  int s = 0;
  if (opts.threads > 1)
    while ((uint64_t(1) << s) < 4 * uint64_t(opts.threads) && s < k - 1 && s < 12) ++s;
  size_t k_low = size_t(k - s);
  uint64_t shard_count = uint64_t(1) << s;
  auto shard_min = [&](uint64_t shard) {
    std::vector<uint64_t> base(p.words, 0);
    for (int t = 0; t < s; ++t)
      if ((shard >> t) & 1)
        for (size_t j = 0; j < p.words; ++j) base[j] ^= p.w[(k_low + size_t(t)) * p.words + j];
    return run_gray_shard(p, k_low, base.data(), shard != 0, opts.check_interval);
  };
  return min_over_shards(shard_count, opts.threads, shard_min);
}

// q > 2: rows as byte vectors.  Each message digit steps through a fixed
// cycle of the field elements in which consecutive values differ by the
// addition of a single element (the delta), so every odometer step is one
// scaled-row addition.  For prime fields the cycle is 0,1,...,q-1 with
// delta 1 throughout.  GF(4)'s additive group is not cyclic, so its cycle
// is 0,1,b,a with deltas 1,a,1 and wrap delta a; additions there are plain
// XOR of the canonical 2-bit values.
struct ByteRows {
  int q = 0;
  bool xor_add = false;     // GF(4): canonical values add by XOR
  size_t rows = 0, cols = 0;
  std::vector<uint8_t> scaled;     // [scalar s][row r] blocks of `cols` bytes
  std::vector<uint8_t> cycle;      // digit visiting order, cycle[0] = 0
  std::vector<uint8_t> step_delta; // delta from cycle[i] to cycle[i+1 mod q]
  std::vector<uint8_t> cycle_pos;  // value -> index in cycle

  static ByteRows make(const GenMatrix& g) {
    const Field& f = g.field();
    ByteRows b;
    b.q = f.q();
    b.xor_add = b.q == 4;
    b.rows = g.rows();
    b.cols = g.cols();
    b.scaled.assign(size_t(b.q) * b.rows * b.cols, 0);
    for (int s = 1; s < b.q; ++s)
      for (size_t r = 0; r < b.rows; ++r)
        for (size_t c = 0; c < b.cols; ++c)
          b.scaled[(size_t(s) * b.rows + r) * b.cols + c] = f.mul(uint8_t(s), g.at(r, c));
    if (b.q == 4)
      b.cycle = {0, 1, 3, 2};
    else
      for (int v = 0; v < b.q; ++v) b.cycle.push_back(uint8_t(v));
    b.step_delta.resize(size_t(b.q));
    b.cycle_pos.resize(size_t(b.q));
    for (int i = 0; i < b.q; ++i) {
      uint8_t from = b.cycle[size_t(i)];
      uint8_t to = b.cycle[size_t((i + 1) % b.q)];
      b.step_delta[from] = f.sub(to, from);
      b.cycle_pos[from] = uint8_t(i);
    }
    return b;
  }

  const uint8_t* scaled_row(uint8_t s, size_t r) const {
    return scaled.data() + (size_t(s) * rows + r) * cols;
  }

  // cw += s * row_r for a nonzero scalar s.
  void add_scaled(std::vector<uint8_t>& cw, size_t r, uint8_t s) const {
    const uint8_t* row = scaled_row(s, r);
    if (xor_add) {
      for (size_t j = 0; j < cols; ++j) cw[j] ^= row[j];
    } else {
      uint8_t qq = uint8_t(q);
      for (size_t j = 0; j < cols; ++j) {
        uint8_t v = uint8_t(cw[j] + row[j]);
        cw[j] = v >= qq ? uint8_t(v - qq) : v;
      }
    }
  }

  uint8_t last_in_cycle() const { return cycle.back(); }
};

inline int byte_weight(const std::vector<uint8_t>& cw) {
  int s = 0;
  for (uint8_t v : cw) s += v != 0;
  return s;
}

inline void check_odometer_state(const ByteRows& b, const std::vector<uint8_t>& digits,
                                 const std::vector<uint8_t>& base_digits,
                                 const std::vector<uint8_t>& cw, uint64_t step) {
  std::vector<uint8_t> expect(b.cols, 0);
  for (size_t r = 0; r < digits.size(); ++r)
    if (digits[r] != 0) b.add_scaled(expect, r, digits[r]);
  for (size_t t = 0; t < base_digits.size(); ++t)
    if (base_digits[t] != 0) b.add_scaled(expect, digits.size() + t, base_digits[t]);
  if (expect != cw)
    throw std::logic_error("odometer walk drifted from its decoded position at step " +
                           std::to_string(step));
}

// Walk all q^k_low low-digit messages above a fixed top-digit combination.
inline int odometer_shard_min(const ByteRows& b, size_t k_low,
                              const std::vector<uint8_t>& base_digits, bool count_base,
                              int early_exit, bool* exact, uint64_t check_interval) {
  std::vector<uint8_t> cw(b.cols, 0);
  for (size_t t = 0; t < base_digits.size(); ++t)
    if (base_digits[t] != 0) b.add_scaled(cw, k_low + t, base_digits[t]);
  std::vector<uint8_t> digits(k_low, 0);
  int best = count_base ? byte_weight(cw) : INT_MAX;
  if (early_exit > 0 && best <= early_exit && best != INT_MAX) {
    *exact = false;
    return best;
  }
  uint64_t steps = 1;
  for (size_t i = 0; i < k_low; ++i) steps *= uint64_t(b.q);
  const uint8_t last = b.last_in_cycle();
  for (uint64_t i = 1; i < steps; ++i) {
    size_t pos = 0;
    while (digits[pos] == last) {
      // Wrap to the cycle start; the delta back to 0 is one more addition.
      b.add_scaled(cw, pos, b.step_delta[digits[pos]]);
      digits[pos] = 0;
      ++pos;
    }
    uint8_t cur = digits[pos];
    b.add_scaled(cw, pos, b.step_delta[cur]);
    digits[pos] = b.cycle[size_t(b.cycle_pos[cur] + 1)];
    int wt = byte_weight(cw);
    if (wt < best) {
      best = wt;
      if (early_exit > 0 && best <= early_exit) {
        *exact = false;
        return best;
      }
    }
    if (check_interval != 0 && i % check_interval == 0)
      check_odometer_state(b, digits, base_digits, cw, i);
  }
  return best;
}

inline int byte_full_min(const ByteRows& b, const DistanceOptions& opts) {
  int k = int(b.rows);
  int s = 0;
  uint64_t shard_count = 1;
  if (opts.threads > 1)
    while (shard_count < 4 * uint64_t(opts.threads) && s < k - 1 && shard_count * uint64_t(b.q) <= 4096) {
      shard_count *= uint64_t(b.q);
      ++s;
    }
  size_t k_low = size_t(k - s);
  bool exact = true;
  auto shard_min = [&](uint64_t shard) {
    std::vector<uint8_t> base_digits(size_t(s), 0);
    uint64_t rest = shard;
    for (int t = 0; t < s; ++t) {
      base_digits[size_t(t)] = uint8_t(rest % uint64_t(b.q));
      rest /= uint64_t(b.q);
    }
    return odometer_shard_min(b, k_low, base_digits, shard != 0, 0, &exact,
                              opts.check_interval);
  };
  return min_over_shards(shard_count, opts.threads, shard_min);
}

}  // namespace detail

// Exact minimum weight of the code spanned by the rows of G.  G must have
// full row rank with at least one row.  Throws BudgetExceeded when the
// dimension is beyond the enumeration budget.  With early_exit set, the
// walk stops at the first codeword of weight <= early_exit and the result
// is only an upper bound (exact = false).
inline DistanceResult min_distance_exact(const GenMatrix& g, const DistanceOptions& opts = {}) {
  const Field& f = g.field();
  if (g.rows() == 0) throw std::invalid_argument("distance of the zero code is undefined");
  int k = int(g.rows());
  int budget = opts.budget > 0 ? opts.budget : default_distance_budget(f);
  if (k > budget) throw BudgetExceeded(k, budget);
  if (double(k) * std::log2(double(f.q())) > 62.0)
    throw std::invalid_argument("message space exceeds 2^62 words");
  if (rank(g) != g.rows())
    throw std::invalid_argument("distance enumeration needs a full-rank generator matrix");

  if (f.q() == 2) {
    PackedRows p = PackedRows::pack(g);
    if (opts.early_exit > 0) return detail::gray_early_exit(p, opts.early_exit, opts.check_interval);
    return {detail::gf2_full_min(p, opts), true};
  }
  detail::ByteRows b = detail::ByteRows::make(g);
  if (opts.early_exit > 0) {
    bool exact = true;
    int wt = detail::odometer_shard_min(b, b.rows, {}, false, opts.early_exit, &exact,
                                        opts.check_interval);
    return {wt, exact};
  }
  return {detail::byte_full_min(b, opts), true};
}

}  // namespace qcforge
