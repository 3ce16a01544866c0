// bench: command line frontend for the benchmark-function suite.
// Links the shared C API; local parsing/presentation only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bench.h"
#include "json.hpp"

namespace {

constexpr const char* kAuditCachePath = "bench_audit_cache.json";

struct CString {
  char* ptr = nullptr;
  ~CString() { bench_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void die(bench_status st) {
  std::cerr << "error: " << bench_last_error() << "\n";
  std::exit(st == BENCH_E_INTERNAL ? 2 : 1);
}

int resolve(const bench_catalog* cat, const std::string& key) {
  int index = 0;
  bench_status st = bench_lookup(cat, key.c_str(), &index);
  if (st != BENCH_OK) die(st);
  return index;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      std::cerr << "error: malformed coordinate '" << item << "'\n";
      std::exit(1);
    }
  }
  if (out.empty()) {
    std::cerr << "error: empty point\n";
    std::exit(1);
  }
  return out;
}

std::pair<double, double> parse_range(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) {
    std::cerr << "error: range must look like a:b, got '" << text << "'\n";
    std::exit(1);
  }
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    std::cerr << "error: malformed range '" << text << "'\n";
    std::exit(1);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(1);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(1);
  }
  out << content;
}

std::string fmt(double v) {
  char buf[32];
  bench_format_double(v, buf, sizeof(buf));
  return buf;
}

// Aggregates record statuses per function and merges them into the audit
// cache consumed by `info`.
void merge_audit_cache(const std::string& report_json) {
  nlohmann::json cache = nlohmann::json::object();
  {
    std::ifstream in(kAuditCachePath);
    if (in) {
      try {
        in >> cache;
      } catch (...) {
        cache = nlohmann::json::object();
      }
    }
  }
  nlohmann::json report = nlohmann::json::parse(report_json);
  auto rank = [](const std::string& s) {
    if (s == "discrepant") return 3;
    if (s == "corrected") return 2;
    if (s == "verified") return 1;
    return 0;
  };
  std::map<int, std::string> status;
  for (const auto& rec : report) {
    int fn = rec["fn"].get<int>();
    std::string st = rec["status"].get<std::string>();
    auto it = status.find(fn);
    if (it == status.end() || rank(st) > rank(it->second)) status[fn] = st;
  }
  for (const auto& [fn, st] : status) cache[std::to_string(fn)] = st;
  std::ofstream out(kAuditCachePath);
  out << cache.dump(2) << "\n";
}

std::optional<std::string> cached_audit_status(int fn) {
  std::ifstream in(kAuditCachePath);
  if (!in) return std::nullopt;
  try {
    nlohmann::json cache;
    in >> cache;
    auto it = cache.find(std::to_string(fn));
    if (it == cache.end()) return std::nullopt;
    return it->get<std::string>();
  } catch (...) {
    return std::nullopt;
  }
}

int cmd_list(const bench_catalog* cat, const nlohmann::json& criteria, const std::string& format) {
  CString indices;
  bench_status st = bench_filter(cat, criteria.dump().c_str(), &indices.ptr);
  if (st != BENCH_OK) die(st);
  std::set<int> keep;
  for (const auto& v : nlohmann::json::parse(indices.str())) keep.insert(v.get<int>());

  if (format == "json") {
    std::string out = "[";
    bool first = true;
    for (int fn : keep) {
      CString rec;
      if (bench_spec_json(cat, fn, &rec.ptr) != BENCH_OK) die(BENCH_E_INTERNAL);
      if (!first) out += ",";
      out += rec.str();
      first = false;
    }
    out += "]\n";
    std::cout << out;
    return 0;
  }
  CString full;
  if (bench_catalog_export(cat, "csv", &full.ptr) != BENCH_OK) die(BENCH_E_INTERNAL);
  std::stringstream ss(full.str());
  std::string line;
  std::getline(ss, line);
  if (format == "csv") {
    std::cout << line << "\n";
    while (std::getline(ss, line)) {
      int fn = std::atoi(line.c_str());
      if (keep.count(fn)) std::cout << line << "\n";
    }
    return 0;
  }
  if (format == "table") {
    std::printf("%5s  %-28s %s\n", "index", "slug", "name");
    for (int fn : keep) {
      CString rec;
      if (bench_spec_json(cat, fn, &rec.ptr) != BENCH_OK) die(BENCH_E_INTERNAL);
      nlohmann::json j = nlohmann::json::parse(rec.str());
      std::printf("%5d  %-28s %s\n", fn, j["slug"].get<std::string>().c_str(),
                  j["name"].get<std::string>().c_str());
    }
    return 0;
  }
  std::cerr << "error: unknown format '" << format << "'\n";
  return 1;
}

int cmd_info(const bench_catalog* cat, const std::string& key) {
  int fn = resolve(cat, key);
  CString rec;
  if (bench_spec_json(cat, fn, &rec.ptr) != BENCH_OK) die(BENCH_E_INTERNAL);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(rec.str());
  if (auto st = cached_audit_status(fn)) j["audit"] = *st + " (cached)";
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark function suite"};
  app.require_subcommand(1);

  bench_catalog* cat = bench_catalog_create();
  if (!cat) {
    std::cerr << "error: " << bench_last_error() << "\n";
    return 2;
  }

  // list
  auto* list = app.add_subcommand("list", "list catalog entries matching the given predicates");
  std::string l_modality, l_separability, l_continuity, l_differentiability, l_scalability;
  int l_dimension = 0;
  std::string l_format = "table";
  list->add_option("--modality", l_modality, "unimodal|multimodal|unstated");
  list->add_option("--separability", l_separability,
                   "separable|partially-separable|non-separable|unstated");
  list->add_option("--continuity", l_continuity, "continuous|discontinuous|unstated");
  list->add_option("--differentiability", l_differentiability,
                   "differentiable|non-differentiable|unstated");
  list->add_option("--scalability", l_scalability, "scalable|non-scalable|unstated");
  list->add_option("--dimension", l_dimension, "match fixed-dimension functions of this size");
  list->add_option("--format", l_format, "json|csv|table");

  // info
  auto* info = app.add_subcommand("info", "show one catalog entry");
  std::string i_key;
  info->add_option("id", i_key, "function index or slug")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
  std::string e_key, e_point, e_noise = "suppress";
  std::uint64_t e_seed = 0;
  eval->add_option("id", e_key)->required();
  eval->add_option("--point", e_point, "comma separated coordinates")->required();
  eval->add_option("--seed", e_seed, "noise seed");
  eval->add_option("--noise", e_noise, "sample|suppress");

  // grid
  auto* grid = app.add_subcommand("grid", "export a 2-D landscape lattice as CSV");
  std::string g_key, g_x1, g_x2, g_out;
  int g_resolution = 0;
  grid->add_option("id", g_key)->required();
  grid->add_option("--x1", g_x1, "a:b range for the first axis (default: bounds)");
  grid->add_option("--x2", g_x2, "a:b range for the second axis (default: bounds)");
  grid->add_option("--resolution", g_resolution, "nodes per axis (>= 2)")->required();
  grid->add_option("--out", g_out, "output path")->required();

  // check
  auto* check = app.add_subcommand("check", "audit claimed optima");
  std::string c_key, c_format = "json", c_expected;
  bool c_all = false;
  double c_tol = 0;
  check->add_option("id", c_key, "function index or slug");
  check->add_flag("--all", c_all, "audit the whole catalog");
  check->add_option("--tol", c_tol, "override the per-claim tolerance");
  check->add_option("--format", c_format, "json|csv");
  check->add_option("--expected-errata", c_expected, "expected-errata JSON file");

  // probe
  auto* probe = app.add_subcommand("probe", "empirical additive-separability probe");
  std::string p_key;
  int p_dim = 0, p_samples = 0;
  std::uint64_t p_seed = 0;
  double p_tol = 0;
  probe->add_option("id", p_key)->required();
  probe->add_option("--dim", p_dim, "probe dimension (default: catalog default)");
  probe->add_option("--samples", p_samples, "sample count (default 64)");
  probe->add_option("--seed", p_seed, "probe seed");
  probe->add_option("--tol", p_tol, "relative interaction tolerance (default 1e-6)");

  // run
  auto* run = app.add_subcommand("run", "run an optimizer manifest");
  std::string r_manifest, r_out;
  run->add_option("--manifest", r_manifest, "manifest JSON file")->required();
  run->add_option("--out", r_out, "results path (.json or .csv; default: stdout JSON)");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "export the full catalog");
  std::string k_format = "json";
  catalog_cmd->add_option("--format", k_format, "json|csv")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 1;
  }

  try {
    if (*list) {
      nlohmann::json criteria = nlohmann::json::object();
      if (!l_modality.empty()) criteria["modality"] = l_modality;
      if (!l_separability.empty()) criteria["separability"] = l_separability;
      if (!l_continuity.empty()) criteria["continuity"] = l_continuity;
      if (!l_differentiability.empty()) criteria["differentiability"] = l_differentiability;
      if (!l_scalability.empty()) criteria["scalability"] = l_scalability;
      if (l_dimension > 0) criteria["dimension"] = l_dimension;
      return cmd_list(cat, criteria, l_format);
    }
    if (*info) return cmd_info(cat, i_key);
    if (*eval) {
      int fn = resolve(cat, e_key);
      std::vector<double> x = parse_point(e_point);
      if (e_noise != "sample" && e_noise != "suppress") {
        std::cerr << "error: --noise must be sample or suppress\n";
        return 1;
      }
      double value = 0;
      bench_status st = bench_evaluate(
          cat, fn, x.data(), static_cast<int>(x.size()), e_seed,
          e_noise == "sample" ? BENCH_NOISE_SAMPLE : BENCH_NOISE_SUPPRESS, &value);
      if (st != BENCH_OK) die(st);
      std::cout << fmt(value) << "\n";
      return 0;
    }
    if (*grid) {
      int fn = resolve(cat, g_key);
      double lo[2], hi[2];
      if (bench_dimension_ok(cat, fn, 2) != BENCH_OK) die(BENCH_E_DIMENSION);
      if (bench_bounds(cat, fn, 2, lo, hi) != BENCH_OK) die(BENCH_E_INTERNAL);
      double x1a = lo[0], x1b = hi[0], x2a = lo[1], x2b = hi[1];
      if (!g_x1.empty()) std::tie(x1a, x1b) = parse_range(g_x1);
      if (!g_x2.empty()) std::tie(x2a, x2b) = parse_range(g_x2);
      CString csv;
      bench_status st = bench_grid_csv(cat, fn, x1a, x1b, x2a, x2b, g_resolution, &csv.ptr);
      if (st != BENCH_OK) die(st);
      write_file(g_out, csv.str());
      return 0;
    }
    if (*check) {
      if (c_all != c_key.empty()) {
        std::cerr << "error: pass either a function or --all\n";
        return 1;
      }
      if (c_format != "json" && c_format != "csv") {
        std::cerr << "error: --format must be json or csv\n";
        return 1;
      }
      CString report, report_json;
      int scope_fn = 0;
      if (c_all) {
        if (bench_audit_all(cat, c_tol, c_format.c_str(), &report.ptr) != BENCH_OK)
          die(BENCH_E_INTERNAL);
        if (bench_audit_all(cat, c_tol, "json", &report_json.ptr) != BENCH_OK)
          die(BENCH_E_INTERNAL);
      } else {
        scope_fn = resolve(cat, c_key);
        bench_status st = bench_check_minimum(cat, scope_fn, c_tol, c_format.c_str(), &report.ptr);
        if (st != BENCH_OK) die(st);
        st = bench_check_minimum(cat, scope_fn, c_tol, "json", &report_json.ptr);
        if (st != BENCH_OK) die(st);
      }
      std::cout << report.str();
      merge_audit_cache(report_json.str());

      // Exit 0 only when the discrepant set (inside the audited scope)
      // matches the expectations.
      std::set<int> expected;
      if (!c_expected.empty()) {
        nlohmann::json doc = nlohmann::json::parse(read_file(c_expected));
        for (const auto& e : doc) expected.insert(e["fn"].get<int>());
      }
      std::set<int> discrepant;
      {
        nlohmann::json recs = nlohmann::json::parse(report_json.str());
        for (const auto& r : recs)
          if (r["status"] == "discrepant") discrepant.insert(r["fn"].get<int>());
      }
      bool ok = true;
      for (int fn : discrepant)
        if (!expected.count(fn)) {
          std::cerr << "unexpected discrepant: f" << fn << "\n";
          ok = false;
        }
      for (int fn : expected) {
        if (!c_all && fn != scope_fn) continue;
        if (!discrepant.count(fn)) {
          std::cerr << "expected discrepant missing: f" << fn << "\n";
          ok = false;
        }
      }
      return ok ? 0 : 1;
    }
    if (*probe) {
      int fn = resolve(cat, p_key);
      CString out;
      bench_status st = bench_separability_probe(cat, fn, p_dim, p_samples, p_seed, p_tol, &out.ptr);
      if (st != BENCH_OK) die(st);
      std::cout << out.str();
      return 0;
    }
    if (*run) {
      std::string manifest = read_file(r_manifest);
      std::string format = "json";
      if (r_out.size() >= 4 && r_out.substr(r_out.size() - 4) == ".csv") format = "csv";
      CString results, summary;
      bench_status st =
          bench_run_manifest(cat, manifest.c_str(), format.c_str(), &results.ptr, &summary.ptr);
      if (st != BENCH_OK) die(st);
      if (r_out.empty())
        std::cout << results.str();
      else
        write_file(r_out, results.str());
      std::cerr << summary.str();
      return 0;
    }
    if (*catalog_cmd) {
      if (k_format != "json" && k_format != "csv") {
        std::cerr << "error: --format must be json or csv\n";
        return 1;
      }
      CString out;
      if (bench_catalog_export(cat, k_format.c_str(), &out.ptr) != BENCH_OK) die(BENCH_E_INTERNAL);
      std::cout << out.str();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
