#pragma once

// Seeded ASR search over cyclic classes. For each block length m the class
// representatives are enumerated, hopeless classes are pruned by the
// ell * d_cyclic bound against the target table, and surviving (class, ell)
// pairs are sampled on a worker pool. Every worker owns a sub-RNG derived
// from (master seed, m, class index, ell), so the emitted record set does not
// depend on the thread count.

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "qcforge/cyclic.hpp"
#include "qcforge/distance.hpp"
#include "qcforge/matrix.hpp"
#include "qcforge/qc.hpp"
#include "qcforge/records.hpp"

namespace qcforge {

struct SearchConfig {
  int q = 2;
  std::vector<int> ms;           // block lengths to search
  int ell_min = 2, ell_max = 2;  // index range
  int k_min = 1, k_max = INT_MAX;
  int samples = 10000;  // f-tuples per (class, ell)
  uint64_t seed = 0;
  std::string target_file;
  int threads = 1;
  int slack = 0;  // widens pruning: search classes with ell*d_cyclic >= target - slack
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& v, const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t dash = part.find('-', 1);  // allow a leading minus to fail validation below
    try {
      if (dash != std::string::npos) {
        int lo = std::stoi(part.substr(0, dash));
        int hi = std::stoi(part.substr(dash + 1));
        if (lo > hi) throw std::invalid_argument("empty range");
        for (int x = lo; x <= hi; ++x) out.push_back(x);
      } else {
        out.push_back(std::stoi(part));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value '" + part + "' for key '" + key + "'");
    }
  }
  return out;
}

}  // namespace detail

inline SearchConfig parse_search_config(std::istream& in) {
  SearchConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto strip = [](std::string s) {
      size_t b2 = s.find_first_not_of(" \t");
      if (b2 == std::string::npos) return std::string();
      size_t e2 = s.find_last_not_of(" \t");
      return s.substr(b2, e2 - b2 + 1);
    };
    key = strip(key);
    val = strip(val);
    if (key.empty() || val.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    try {
      if (key == "field") {
        cfg.q = std::stoi(val);
      } else if (key == "m") {
        cfg.ms = detail::parse_int_list(val, key);
      } else if (key == "ell") {
        auto r = detail::parse_int_list(val, key);
        cfg.ell_min = *std::min_element(r.begin(), r.end());
        cfg.ell_max = *std::max_element(r.begin(), r.end());
      } else if (key == "kmin") {
        cfg.k_min = std::stoi(val);
      } else if (key == "kmax") {
        cfg.k_max = std::stoi(val);
      } else if (key == "samples") {
        cfg.samples = std::stoi(val);
      } else if (key == "seed") {
        cfg.seed = std::stoull(val);
      } else if (key == "target_file") {
        cfg.target_file = val;
      } else if (key == "threads") {
        cfg.threads = std::stoi(val);
      } else if (key == "slack") {
        cfg.slack = std::stoi(val);
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::exception& ex) {
      std::string what = ex.what();
      if (what.find("sto") == 0) what = "bad number";
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + what);
    }
  }
  if (cfg.q < 2 || cfg.q > 5) throw std::invalid_argument("field must be 2, 3, 4, or 5");
  if (cfg.ell_min < 1) throw std::invalid_argument("ell must be >= 1");
  if (cfg.samples < 0) throw std::invalid_argument("samples must be >= 0");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (cfg.slack < 0) throw std::invalid_argument("slack must be >= 0");
  for (int m : cfg.ms)
    if (m < 1) throw std::invalid_argument("m must be positive");
  return cfg;
}

inline SearchConfig parse_search_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_search_config(in);
}

// Distance targets per (q, n, k): a record qualifies when d >= target.
class TargetTable {
 public:
  void note(int q, int n, int k, int d) {
    int& slot = best_[{q, n, k}];
    slot = std::max(slot, d);
  }

  int target_for(int q, int n, int k) const {
    auto it = best_.find({q, n, k});
    return it == best_.end() ? 0 : it->second;
  }

  size_t size() const { return best_.size(); }

  static TargetTable from_records(const std::vector<CodeRecord>& records) {
    TargetTable t;
    for (const auto& r : records) t.note(r.q, r.n, r.k, r.d);
    return t;
  }

  // plain text lines "q n k d"; '#' starts a comment
  static TargetTable from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    TargetTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      int q, n, k, d;
      if (!(ss >> q)) continue;  // blank
      if (!(ss >> n >> k >> d))
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'q n k d'");
      t.note(q, n, k, d);
    }
    return t;
  }

 private:
  std::map<std::tuple<int, int, int>, int> best_;
};

struct SearchSummary {
  std::vector<CodeRecord> records;
  std::vector<std::string> notices;
  uint64_t classes_seen = 0;
  uint64_t classes_pruned = 0;     // bound below target
  uint64_t classes_untargeted = 0; // no table entry for (q, n, k)
  uint64_t classes_over_budget = 0;
  uint64_t specs_sampled = 0;
};

namespace detail {

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 0x632be59bd9b4e019ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

struct SearchTask {
  int m;
  int class_idx;
  int ell;
  CyclicCode code;
  int d_cyclic;
  int target;
  uint64_t seed;
};

}  // namespace detail

inline SearchSummary asr_search(const SearchConfig& cfg, const TargetTable& targets) {
  if (cfg.q < 2 || cfg.q > 5) throw std::invalid_argument("field must be 2, 3, 4, or 5");
  if (cfg.ell_min < 2) throw std::invalid_argument("search needs ell >= 2");
  const Field& f = Field::of(cfg.q);
  const int budget = default_distance_budget(f);

  SearchSummary out;
  std::vector<detail::SearchTask> tasks;

  for (int m : cfg.ms) {
    ClassFilter filter{std::max(1, cfg.k_min), cfg.k_max};
    ClassEnumeration enumeration = enumerate_class_reps(f, m, filter);
    for (size_t ci = 0; ci < enumeration.classes.size(); ++ci) {
      const CyclicClass& cls = enumeration.classes[ci];
      ++out.classes_seen;
      if (cls.dim > budget) {
        ++out.classes_over_budget;
        continue;
      }
      CyclicCode code{&f, m, cls.gen, cls.check, cls.dim};
      int d_cyclic = min_distance_exact(code.generator_matrix()).weight;
      for (int ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
        int target = targets.target_for(cfg.q, m * ell, cls.dim);
        if (target == 0) {
          ++out.classes_untargeted;
          continue;
        }
        if (ell * d_cyclic < target - cfg.slack) {
          ++out.classes_pruned;
          continue;
        }
        uint64_t task_seed = detail::mix_seed(
            detail::mix_seed(detail::mix_seed(cfg.seed, uint64_t(m)), uint64_t(ci)),
            uint64_t(ell));
        tasks.push_back(detail::SearchTask{m, int(ci), ell, code, d_cyclic, target, task_seed});
      }
    }
  }

  std::vector<std::vector<CodeRecord>> slots(tasks.size());
  std::atomic<size_t> next{0};
  std::atomic<uint64_t> sampled{0};
  const std::string stamp = now_timestamp();  // one stamp per run keeps output stable

  auto worker = [&]() {
    for (;;) {
      size_t ti = next.fetch_add(1);
      if (ti >= tasks.size()) return;
      const detail::SearchTask& task = tasks[ti];
      std::mt19937_64 rng(task.seed);
      const int h_deg = task.code.check.degree();
      const unsigned q = unsigned(f.q());
      std::vector<CodeRecord> local;
      for (int s = 0; s < cfg.samples; ++s) {
        std::vector<Poly> fs;
        fs.reserve(size_t(task.ell));
        for (int i = 0; i < task.ell; ++i) {
          for (;;) {
            std::vector<uint8_t> c(size_t(h_deg), 0);
            for (auto& v : c) v = uint8_t(rng() % q);
            Poly cand(f, std::move(c));
            if (cand.is_zero()) continue;
            if (gcd(cand, task.code.check).degree() == 0) {
              fs.push_back(std::move(cand));
              break;
            }
          }
        }
        QCSpec spec{&f, task.m, task.ell, task.code.gen, task.code.check, std::move(fs)};
        GenMatrix mat = build_qc_matrix(spec);
        DistanceOptions dopts;
        dopts.early_exit = task.target - 1;
        DistanceResult dist = min_distance_exact(mat, dopts);
        sampled.fetch_add(1, std::memory_order_relaxed);
        if (!dist.exact) continue;  // a word below target was found

        CodeRecord r;
        r.q = cfg.q;
        r.n = spec.length();
        r.k = spec.dim();
        r.d = dist.weight;
        r.d_exact = true;
        PropertyFlags props = classify_properties(mat);
        if (props.lcd) r.properties.push_back("lcd");
        if (props.self_orthogonal) r.properties.push_back("self-orthogonal");
        if (props.dual_containing) r.properties.push_back("dual-containing");
        if (props.reversible) r.properties.push_back("reversible");
        r.prov = Provenance::qc;
        r.m = spec.m;
        r.ell = spec.ell;
        r.g = encode_gen(spec.g);
        for (const auto& fi : spec.fs) r.fs.push_back(encode_gen(fi));
        r.seed = task.seed;
        r.timestamp = stamp;
        r.source = "search";
        local.push_back(std::move(r));
      }
      slots[ti] = std::move(local);
    }
  };

  int nthreads = std::max(1, cfg.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(size_t(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::set<std::string> seen;
  for (auto& slot : slots)
    for (auto& r : slot)
      if (seen.insert(r.dedup_key()).second) out.records.push_back(std::move(r));
  out.specs_sampled = sampled.load();

  if (out.classes_over_budget > 0)
    out.notices.push_back(std::to_string(out.classes_over_budget) +
                          " class(es) skipped: dimension above the distance budget " +
                          std::to_string(budget));
  if (out.classes_pruned > 0)
    out.notices.push_back(std::to_string(out.classes_pruned) +
                          " (class, ell) pair(s) pruned by the ell*d_cyclic bound");
  if (out.classes_untargeted > 0)
    out.notices.push_back(std::to_string(out.classes_untargeted) +
                          " (class, ell) pair(s) had no target entry");
  return out;
}

}  // namespace qcforge
