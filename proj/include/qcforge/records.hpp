#pragma once

// Persistent code ledger. One record per line, JSON objects over a version
// header, append-friendly and diffable. A record carries the code parameters,
// measured property flags, and enough provenance to rebuild the code from
// scratch: a QC generator spec, a Construction X triple (with nested records),
// or a modification chain.

#include <cstdint>
#include <ctime>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcforge/codec.hpp"
#include "qcforge/field.hpp"
#include "qcforge/matrix.hpp"

namespace qcforge {

enum class Provenance { qc, qc_tuple, cx, mod };

inline std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::qc: return "qc";
    case Provenance::qc_tuple: return "qc-tuple";
    case Provenance::cx: return "cx";
    case Provenance::mod: return "mod";
  }
  throw std::logic_error("unreachable");
}

inline Provenance provenance_from_name(const std::string& s) {
  if (s == "qc") return Provenance::qc;
  if (s == "qc-tuple") return Provenance::qc_tuple;
  if (s == "cx") return Provenance::cx;
  if (s == "mod") return Provenance::mod;
  throw std::invalid_argument("unknown provenance kind '" + s + "'");
}

// Small explicit-generator code used as the C3 leg of Construction X.
struct C3Code {
  int q = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<std::string> rows;  // one coordinate string per generator row

  GenMatrix matrix() const {
    const Field& f = Field::of(q);
    std::vector<std::vector<uint8_t>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
      auto coords = decode_coords(r, f);
      if (int(coords.size()) != n) throw std::invalid_argument("C3 row length mismatch");
      out.push_back(std::move(coords));
    }
    if (int(out.size()) != k) throw std::invalid_argument("C3 row count mismatch");
    return GenMatrix::from_rows(f, out);
  }
};

struct CodeRecord;

struct CxComponents {
  std::shared_ptr<CodeRecord> c1;  // supercode
  std::shared_ptr<CodeRecord> c2;  // subcode
  C3Code c3;
};

struct Modification {
  std::string method;          // shorten | puncture | expurgate
  std::vector<int> positions;  // 1-indexed coordinates; empty for expurgate
  std::shared_ptr<CodeRecord> base;
};

struct CodeRecord {
  int q = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  bool d_exact = false;
  std::vector<std::string> properties;  // lcd, self-orthogonal, dual-containing, reversible
  Provenance prov = Provenance::qc;

  // QC payload. For prov == qc the tuple is (f_1 g, ..., f_ell g) with fs in
  // reduced form; for prov == qc-tuple fs holds the raw generator tuple as
  // printed and g is empty.
  int m = 0;
  int ell = 0;
  std::string g;
  std::vector<std::string> fs;

  std::shared_ptr<CxComponents> cx;
  std::shared_ptr<Modification> mod;

  uint64_t seed = 0;
  std::string timestamp;

  // corpus bookkeeping
  std::string source;   // where the row came from, e.g. a table tag
  bool suspect = false; // parameters recorded as printed but flagged dubious
  int k_alt = 0;        // alternate stated dimension, 0 when absent
  std::string pair;     // id tying sub/supercode rows together
  std::string role;     // sub | super, within a pair

  std::string dedup_key() const {
    std::string key = std::to_string(q) + "|" + std::to_string(n) + "|" + std::to_string(k) + "|" + g;
    for (const auto& f : fs) key += "|" + f;
    return key;
  }
};

inline std::string now_timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

namespace detail {

inline const std::set<std::string>& known_properties() {
  static const std::set<std::string> s{"lcd", "self-orthogonal", "dual-containing", "reversible"};
  return s;
}

inline nlohmann::json c3_to_json(const C3Code& c) {
  return nlohmann::json{{"q", c.q}, {"n", c.n}, {"k", c.k}, {"d", c.d}, {"rows", c.rows}};
}

inline C3Code c3_from_json(const nlohmann::json& j) {
  C3Code c;
  c.q = j.at("q").get<int>();
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<int>();
  c.d = j.at("d").get<int>();
  c.rows = j.at("rows").get<std::vector<std::string>>();
  c.matrix();  // validates field, alphabet, and shape
  return c;
}

}  // namespace detail

inline nlohmann::json record_to_json(const CodeRecord& r) {
  nlohmann::json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["d_exactness_flag"] = r.d_exact;
  j["properties"] = r.properties;
  j["provenance_kind"] = provenance_name(r.prov);
  if (r.prov == Provenance::qc || r.prov == Provenance::qc_tuple) {
    j["m"] = r.m;
    j["ell"] = r.ell;
    j["g_encoded"] = r.g;
    j["fs_encoded"] = r.fs;
  }
  if (r.cx) {
    j["cx_components"] = nlohmann::json{{"c1", record_to_json(*r.cx->c1)},
                                        {"c2", record_to_json(*r.cx->c2)},
                                        {"c3", detail::c3_to_json(r.cx->c3)}};
  }
  if (r.mod) {
    j["modification"] = nlohmann::json{{"method", r.mod->method},
                                       {"positions", r.mod->positions},
                                       {"base", record_to_json(*r.mod->base)}};
  }
  j["seed"] = r.seed;
  j["timestamp"] = r.timestamp;
  if (!r.source.empty()) j["source"] = r.source;
  if (r.suspect) j["suspect"] = true;
  if (r.k_alt != 0) j["k_alt"] = r.k_alt;
  if (!r.pair.empty()) j["pair"] = r.pair;
  if (!r.role.empty()) j["role"] = r.role;
  return j;
}

inline CodeRecord record_from_json(const nlohmann::json& j) {
  CodeRecord r;
  r.q = j.at("q").get<int>();
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.d = j.at("d").get<int>();
  if (r.q < 2 || r.q > 5) throw std::invalid_argument("q must be 2, 3, 4, or 5");
  if (r.n < 1 || r.k < 1 || r.d < 1) throw std::invalid_argument("n, k, d must be positive");
  if (r.k > r.n) throw std::invalid_argument("k exceeds n");
  r.d_exact = j.at("d_exactness_flag").get<bool>();
  r.properties = j.at("properties").get<std::vector<std::string>>();
  for (const auto& p : r.properties)
    if (!detail::known_properties().count(p)) throw std::invalid_argument("unknown property '" + p + "'");
  r.prov = provenance_from_name(j.at("provenance_kind").get<std::string>());

  const Field& f = Field::of(r.q);
  if (r.prov == Provenance::qc || r.prov == Provenance::qc_tuple) {
    r.m = j.at("m").get<int>();
    r.ell = j.at("ell").get<int>();
    if (r.m < 1 || r.ell < 1 || r.n != r.m * r.ell)
      throw std::invalid_argument("QC record needs n = m * ell");
    r.g = j.value("g_encoded", std::string());
    r.fs = j.at("fs_encoded").get<std::vector<std::string>>();
    if (int(r.fs.size()) != r.ell) throw std::invalid_argument("fs count must equal ell");
    if (r.prov == Provenance::qc && r.g.empty())
      throw std::invalid_argument("qc record needs a generator string");
    if (!r.g.empty()) decode_gen(r.g, f);
    for (const auto& s : r.fs) decode_gen(s, f);
  } else if (r.prov == Provenance::cx) {
    const auto& c = j.at("cx_components");
    auto comps = std::make_shared<CxComponents>();
    comps->c1 = std::make_shared<CodeRecord>(record_from_json(c.at("c1")));
    comps->c2 = std::make_shared<CodeRecord>(record_from_json(c.at("c2")));
    comps->c3 = detail::c3_from_json(c.at("c3"));
    r.cx = std::move(comps);
  } else {
    const auto& mj = j.at("modification");
    auto mod = std::make_shared<Modification>();
    mod->method = mj.at("method").get<std::string>();
    if (mod->method != "shorten" && mod->method != "puncture" && mod->method != "expurgate")
      throw std::invalid_argument("unknown modification method '" + mod->method + "'");
    mod->positions = mj.at("positions").get<std::vector<int>>();
    for (int p : mod->positions)
      if (p < 1) throw std::invalid_argument("positions are 1-indexed");
    mod->base = std::make_shared<CodeRecord>(record_from_json(mj.at("base")));
    r.mod = std::move(mod);
  }

  r.seed = j.value("seed", uint64_t(0));
  r.timestamp = j.value("timestamp", std::string());
  r.source = j.value("source", std::string());
  r.suspect = j.value("suspect", false);
  r.k_alt = j.value("k_alt", 0);
  r.pair = j.value("pair", std::string());
  r.role = j.value("role", std::string());
  return r;
}

inline constexpr const char* kRecordsHeader = "#qcforge-records v1";

struct LoadResult {
  std::vector<CodeRecord> records;
  std::vector<std::string> notices;  // duplicate skips and the like
};

inline LoadResult load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  LoadResult out;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!header_seen && line.rfind("#qcforge-records", 0) == 0) header_seen = true;
      continue;
    }
    if (!header_seen)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": missing '#qcforge-records v1' header before data");
    try {
      CodeRecord r = record_from_json(nlohmann::json::parse(line));
      if (!seen.insert(r.dedup_key()).second) {
        out.notices.push_back(path + ":" + std::to_string(lineno) + ": duplicate record [" +
                              std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                              std::to_string(r.d) + "]_" + std::to_string(r.q) + " skipped");
        continue;
      }
      out.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// Same as load_records but collects per-line failures instead of throwing on
// the first one, so a verification pass can report every bad line.
struct LenientLoadResult {
  std::vector<CodeRecord> records;
  std::vector<std::string> notices;
  std::vector<std::pair<int, std::string>> errors;  // line number, message
};

inline LenientLoadResult load_records_lenient(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  LenientLoadResult out;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!header_seen && line.rfind("#qcforge-records", 0) == 0) header_seen = true;
      continue;
    }
    if (!header_seen) {
      out.errors.emplace_back(lineno, "missing '#qcforge-records v1' header before data");
      header_seen = true;  // report once, then treat the rest as data
    }
    try {
      CodeRecord r = record_from_json(nlohmann::json::parse(line));
      if (!seen.insert(r.dedup_key()).second) {
        out.notices.push_back(path + ":" + std::to_string(lineno) + ": duplicate record [" +
                              std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                              std::to_string(r.d) + "]_" + std::to_string(r.q) + " skipped");
        continue;
      }
      out.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      out.errors.emplace_back(lineno, e.what());
    }
  }
  return out;
}

inline void save_records(const std::vector<CodeRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << kRecordsHeader << "\n";
  for (const auto& r : records) out << record_to_json(r).dump() << "\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

inline void append_records(const std::vector<CodeRecord>& records, const std::string& path) {
  bool fresh = false;
  {
    std::ifstream probe(path);
    fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (fresh) out << kRecordsHeader << "\n";
  for (const auto& r : records) out << record_to_json(r).dump() << "\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

// C3 catalog: plain whitespace format, one code per line:
//   q n k d row_1 ... row_k
inline constexpr const char* kC3Header = "#qcforge-c3 v1";

inline std::vector<C3Code> load_c3_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<C3Code> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    C3Code c;
    if (!(ss >> c.q >> c.n >> c.k >> c.d))
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'q n k d rows...'");
    std::string row;
    while (ss >> row) c.rows.push_back(row);
    try {
      c.matrix();
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline void save_c3_catalog(const std::vector<C3Code>& catalog, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << kC3Header << "\n";
  for (const auto& c : catalog) {
    out << c.q << " " << c.n << " " << c.k << " " << c.d;
    for (const auto& r : c.rows) out << " " << r;
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace qcforge
