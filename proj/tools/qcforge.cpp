#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcforge/codec.hpp"
#include "qcforge/constructx.hpp"
#include "qcforge/cyclic.hpp"
#include "qcforge/records.hpp"
#include "qcforge/search.hpp"
#include "qcforge/verify.hpp"

using namespace qcforge;

namespace {

int resolve_threads(int cli_value) {
  if (cli_value > 0) return cli_value;
  if (const char* env = std::getenv("QCFORGE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // caller decides the final fallback
}

void write_structured_report(const std::string& path, const VerifyReport& report) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& e : report.entries) out << verify_entry_to_json(e).dump() << "\n";
  nlohmann::json s;
  s["summary"] = {{"confirmed", report.confirmed},
                  {"bound-only", report.bound_only},
                  {"mismatch", report.mismatches},
                  {"suspect-mismatch", report.suspect_mismatches},
                  {"parse-error", report.parse_errors}};
  out << s.dump() << "\n";
}

std::string coeffs_csv(const Poly& p) {
  std::ostringstream os;
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << int(c[i]);
  return os.str();
}

std::string params(const CodeRecord& r) {
  return "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) +
         "]_" + std::to_string(r.q);
}

int run_cosets(int q, int n) {
  const Field& f = Field::of(q);
  ClassEnumeration en = enumerate_class_reps(f, n);
  std::cout << "q=" << q << " n=" << n << " n'=" << en.n_prime << " t=" << en.t << "\n";
  for (const auto& coset : en.partition.cosets) {
    std::cout << "{";
    for (size_t i = 0; i < coset.size(); ++i) std::cout << (i ? "," : "") << coset[i];
    std::cout << "}\n";
  }
  return 0;
}

int run_partition(int q, int n, int kmin, int kmax) {
  const Field& f = Field::of(q);
  ClassFilter filter;
  if (kmin > 0) filter.k_min = kmin;
  if (kmax > 0) filter.k_max = kmax;
  ClassEnumeration en = enumerate_class_reps(f, n, filter);
  std::cout << "q=" << q << " n=" << n << " n'=" << en.n_prime << " t=" << en.t << "\n";
  for (const auto& cls : en.classes)
    std::cout << "[" << n << "," << cls.dim << "] g=" << encode_gen(cls.gen) << "  ("
              << to_string(cls.gen) << ")\n";
  std::cout << en.classes.size() << " class(es) up to multiplier equivalence, "
            << en.merges.size() << " multiset(s) merged away\n";
  std::cout << "the zero code [" << n << ",0] is never listed\n";
  return 0;
}

TargetTable default_targets(const std::string& data_dir) {
  CorpusBundle corpus = load_corpus(data_dir);
  std::vector<CodeRecord> all = corpus.qc_rows;
  all.insert(all.end(), corpus.tuple_rows.begin(), corpus.tuple_rows.end());
  return TargetTable::from_records(all);
}

int run_search(const std::string& config_path, const std::string& ledger,
               const std::string& data_dir, int cli_threads) {
  SearchConfig cfg = parse_search_config_file(config_path);
  int t = resolve_threads(cli_threads);
  if (t > 0) cfg.threads = t;  // command line or environment beats the config

  TargetTable targets = cfg.target_file.empty() ? default_targets(data_dir)
                                                : TargetTable::from_file(cfg.target_file);
  std::cout << "targets: " << targets.size() << " parameter triple(s)\n";

  SearchSummary s = asr_search(cfg, targets);
  std::cout << "classes seen: " << s.classes_seen << "  pruned: " << s.classes_pruned
            << "  untargeted: " << s.classes_untargeted
            << "  over budget: " << s.classes_over_budget << "\n";
  std::cout << "specs sampled: " << s.specs_sampled << "\n";
  for (const auto& n : s.notices) std::cout << "note: " << n << "\n";
  for (const auto& r : s.records) std::cout << "found " << params(r) << " g=" << r.g << "\n";
  std::cout << s.records.size() << " record(s)";
  if (!s.records.empty()) {
    append_records(s.records, ledger);
    std::cout << " appended to " << ledger;
  }
  std::cout << "\n";
  return 0;
}

int run_verify(const std::string& file, const VerifyOptions& opts, bool strict,
               const std::string& report_path) {
  VerifyReport rep = verify_file(file, opts);
  print_report(std::cout, rep);
  if (!report_path.empty()) write_structured_report(report_path, rep);
  return rep.ok(strict) ? 0 : 1;
}

int run_reproduce(int table_id, const std::string& data_dir, const VerifyOptions& opts,
                  bool strict, const std::string& report_path) {
  CorpusBundle corpus = load_corpus(data_dir);
  VerifyReport rep = reproduce(table_id, corpus, opts);
  print_report(std::cout, rep);
  if (!report_path.empty()) write_structured_report(report_path, rep);
  return rep.ok(strict) ? 0 : 1;
}

int run_constx(const std::string& file, size_t index, int b, const std::string& direction,
               int max_len, const std::string& out_path, const std::string& data_dir,
               const DistanceOptions& dopts) {
  LoadResult loaded = load_records(file);
  if (index >= loaded.records.size())
    throw std::runtime_error("record index " + std::to_string(index) + " out of range (file has " +
                             std::to_string(loaded.records.size()) + ")");
  const CodeRecord& r = loaded.records[index];
  if (r.prov != Provenance::qc && r.prov != Provenance::qc_tuple) {
    std::cerr << "unsupported provenance '" << provenance_name(r.prov)
              << "': constx needs a quasi-cyclic record\n";
    return 2;
  }
  QCSpec spec = qc_spec_from_record(r);
  std::vector<C3Code> catalog = load_c3_catalog(data_dir + "/c3-catalog.records");

  std::vector<CodeRecord> recs = direction == "sub"
                                     ? algorithm1_sub(spec, b, catalog, max_len, dopts)
                                     : algorithm1(spec, b, catalog, max_len, dopts);
  bool violated = false;
  for (const auto& rec : recs) {
    const CodeRecord& c1 = *rec.cx->c1;
    const CodeRecord& c2 = *rec.cx->c2;
    std::cout << params(rec) << (rec.d_exact ? " (exact)" : " (bound)") << "  from " << params(c1)
              << " / " << params(c2) << " / [" << rec.cx->c3.n << "," << rec.cx->c3.k << ","
              << rec.cx->c3.d << "]\n";
    if (rec.d_exact && c1.d_exact && c2.d_exact) {
      int lower = std::min(c2.d, c1.d + rec.cx->c3.d);
      bool ok = c2.d >= rec.d && rec.d >= lower;
      std::cout << "  sandwich " << c2.d << " >= " << rec.d << " >= " << lower
                << (ok ? " holds" : " VIOLATED") << "\n";
      if (!ok) violated = true;
    } else {
      std::cout << "  sandwich not fully computable at this budget\n";
    }
  }
  if (recs.empty()) std::cout << "nothing to emit for b=" << b << "\n";
  if (!out_path.empty() && !recs.empty()) {
    append_records(recs, out_path);
    std::cout << recs.size() << " record(s) appended to " << out_path << "\n";
  }
  return violated ? 1 : 0;
}

int run_modify(const std::string& file, size_t index, const std::string& method,
               const std::vector<int>& positions, const std::string& out_path,
               const VerifyOptions& vopts) {
  LoadResult loaded = load_records(file);
  if (index >= loaded.records.size())
    throw std::runtime_error("record index " + std::to_string(index) + " out of range (file has " +
                             std::to_string(loaded.records.size()) + ")");
  const CodeRecord& base = loaded.records[index];
  GenMatrix mat = rebuild_matrix(base);

  std::vector<int> pos0;
  for (int p : positions) {
    if (p < 1 || p > int(mat.cols()))
      throw std::runtime_error("position " + std::to_string(p) + " outside 1.." +
                               std::to_string(mat.cols()));
    pos0.push_back(p - 1);
  }
  ModifyResult res = modify(mat, method, pos0);
  if (!res.changed) std::cout << "note: the code was already even-weight, nothing changed\n";

  CodeRecord out;
  out.q = base.q;
  out.n = int(res.mat.cols());
  out.k = int(res.mat.rows());
  const Field& f = res.mat.field();
  int budget = vopts.budget > 0 ? vopts.budget : default_distance_budget(f);
  if (out.k <= budget) {
    DistanceOptions dd;
    dd.threads = vopts.threads;
    out.d = min_distance_exact(res.mat, dd).weight;
    out.d_exact = true;
  } else {
    out.d = 1;
    out.d_exact = false;
  }
  out.prov = Provenance::mod;
  out.mod = std::make_shared<Modification>();
  out.mod->method = method;
  out.mod->positions = positions;
  out.mod->base = std::make_shared<CodeRecord>(base);
  out.seed = base.seed;
  out.timestamp = now_timestamp();

  std::cout << method << " -> " << params(out) << (out.d_exact ? " (exact)" : " (d unknown)")
            << "\n";
  if (!out_path.empty()) {
    append_records({out}, out_path);
    std::cout << "record appended to " << out_path << "\n";
  }
  return 0;
}

int run_decode_gen(int q, const std::string& digits) {
  Poly p = decode_gen(digits, Field::of(q));
  std::cout << to_string(p) << "\n";
  std::cout << "coeffs: " << coeffs_csv(p) << "\n";
  return 0;
}

int run_encode_gen(int q, const std::string& csv) {
  const Field& f = Field::of(q);
  std::vector<uint8_t> coeffs;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int v;
    try {
      v = std::stoi(part);
    } catch (const std::exception&) {
      throw std::runtime_error("bad coefficient '" + part + "'");
    }
    if (v < 0 || v >= f.q())
      throw std::runtime_error("coefficient " + std::to_string(v) + " outside the field");
    coeffs.push_back(uint8_t(v));
  }
  if (coeffs.empty()) throw std::runtime_error("empty coefficient list");
  std::cout << encode_gen(Poly(f, coeffs)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-cyclic code toolkit: enumerate, search, construct, verify"};
  app.require_subcommand(1);

  int threads = 0;
  int budget = 0;
  std::string data_dir = QCFORGE_SOURCE_DATA_DIR;
  app.add_option("--threads", threads,
                 "worker threads; falls back to QCFORGE_THREADS, then 1");
  app.add_option("--budget", budget, "dimension cap for exact distance enumeration");
  app.add_option("--data-dir", data_dir, "directory with the shipped corpus files");

  int q = 2, n = 7;
  auto* cosets = app.add_subcommand("cosets", "print the cyclotomic cosets behind length n");
  cosets->fallthrough();
  cosets->add_option("--q", q, "field size (2..5)")->required();
  cosets->add_option("--n", n, "code length")->required()->check(CLI::PositiveNumber);

  int kmin = 0, kmax = 0;
  auto* partition = app.add_subcommand("partition", "list cyclic classes up to equivalence");
  partition->fallthrough();
  partition->add_option("--q", q, "field size (2..5)")->required();
  partition->add_option("--n", n, "code length")->required()->check(CLI::PositiveNumber);
  partition->add_option("--kmin", kmin, "smallest dimension to list");
  partition->add_option("--kmax", kmax, "largest dimension to list");

  std::string config_path, ledger = "qcforge-ledger.records";
  auto* search = app.add_subcommand("search", "seeded sampling search over cyclic classes");
  search->fallthrough();
  search->add_option("config", config_path, "key=value search configuration")
      ->required()
      ->check(CLI::ExistingFile);
  search->add_option("--ledger", ledger, "records file to append finds to");

  std::string records_path, report_path;
  bool strict = false;
  auto* verify = app.add_subcommand("verify", "re-check every record in a file");
  verify->fallthrough();
  verify->add_option("records", records_path, "records file to verify")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_flag("--strict", strict, "count mismatches on suspect records too");
  verify->add_option("--report", report_path, "also write a line-delimited structured report");

  int table_id = 0;
  auto* repro = app.add_subcommand("reproduce", "rebuild and verify one published table");
  repro->fallthrough();
  repro->add_option("table", table_id, "table number 1..7")->required();
  repro->add_flag("--strict", strict, "count mismatches on suspect records too");
  repro->add_option("--report", report_path, "also write a line-delimited structured report");

  size_t index = 0;
  int b = 1, max_len = 300;
  std::string direction = "super", out_path;
  auto* constx = app.add_subcommand("constx", "glue catalog codes onto a sub/supercode pair");
  constx->fallthrough();
  constx->add_option("records", records_path, "records file holding the starting code")
      ->required()
      ->check(CLI::ExistingFile);
  constx->add_option("--index", index, "which record to start from (0-based)");
  constx->add_option("--b", b, "degree of the generator divisor to move")
      ->check(CLI::PositiveNumber);
  constx->add_option("--direction", direction, "climb to a supercode or drop to a subcode")
      ->check(CLI::IsMember({"super", "sub"}));
  constx->add_option("--max-len", max_len, "skip gluings beyond this total length");
  constx->add_option("--out", out_path, "append emitted records here");

  std::string method;
  std::vector<int> positions;
  auto* mod = app.add_subcommand("modify", "shorten, puncture, or expurgate a record's code");
  mod->fallthrough();
  mod->add_option("records", records_path, "records file holding the code")
      ->required()
      ->check(CLI::ExistingFile);
  mod->add_option("--index", index, "which record to modify (0-based)");
  mod->add_option("--method", method, "shorten | puncture | expurgate")
      ->required()
      ->check(CLI::IsMember({"shorten", "puncture", "expurgate"}));
  mod->add_option("--positions", positions, "1-indexed coordinates")->delimiter(',');
  mod->add_option("--out", out_path, "append the resulting record here");

  std::string gen_arg;
  auto* dec = app.add_subcommand("decode-gen", "digit string to polynomial");
  dec->fallthrough();
  dec->add_option("--q", q, "field size (2..5)")->required();
  dec->add_option("digits", gen_arg, "encoded generator")->required();

  auto* enc = app.add_subcommand("encode-gen", "comma-separated coefficients to digit string");
  enc->fallthrough();
  enc->add_option("--q", q, "field size (2..5)")->required();
  enc->add_option("coeffs", gen_arg, "coefficients, constant term first, e.g. 1,0,1,1,1")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    VerifyOptions vopts;
    vopts.budget = budget;
    int t = resolve_threads(threads);
    vopts.threads = t > 0 ? t : 1;
    DistanceOptions dopts;
    dopts.budget = budget;
    dopts.threads = vopts.threads;

    if (*cosets) return run_cosets(q, n);
    if (*partition) return run_partition(q, n, kmin, kmax);
    if (*search) return run_search(config_path, ledger, data_dir, threads);
    if (*verify) return run_verify(records_path, vopts, strict, report_path);
    if (*repro) return run_reproduce(table_id, data_dir, vopts, strict, report_path);
    if (*constx)
      return run_constx(records_path, index, b, direction, max_len, out_path, data_dir, dopts);
    if (*mod) return run_modify(records_path, index, method, positions, out_path, vopts);
    if (*dec) return run_decode_gen(q, gen_arg);
    if (*enc) return run_encode_gen(q, gen_arg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand
}
