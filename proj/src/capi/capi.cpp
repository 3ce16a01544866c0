#include "bench.h"

#include <cstring>
#include <string>

#include "core/calculus.hpp"
#include "core/evaluate.hpp"
#include "core/grid.hpp"
#include "core/optimize.hpp"
#include "core/registry.hpp"
#include "core/textio.hpp"
#include "core/verify.hpp"
#include "json.hpp"

namespace {

thread_local std::string g_last_error;

bench_status map_code(bench::ErrorCode code) {
  switch (code) {
    case bench::ErrorCode::UnknownFunction: return BENCH_E_UNKNOWN_FUNCTION;
    case bench::ErrorCode::DimensionMismatch: return BENCH_E_DIMENSION;
    case bench::ErrorCode::DomainError: return BENCH_E_DOMAIN;
    case bench::ErrorCode::InvalidArgument: return BENCH_E_INVALID;
    case bench::ErrorCode::NonFiniteResult: return BENCH_E_NONFINITE;
    case bench::ErrorCode::IoError: return BENCH_E_IO;
  }
  return BENCH_E_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
bench_status guarded(Fn&& fn) {
  try {
    fn();
    return BENCH_OK;
  } catch (const bench::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BENCH_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return BENCH_E_INTERNAL;
  }
}

const bench::Catalog* unwrap(const bench_catalog* cat) {
  return reinterpret_cast<const bench::Catalog*>(cat);
}

const bench::FunctionSpec& spec_of(const bench_catalog* cat, int index) {
  return unwrap(cat)->by_index(index);
}

}  // namespace

extern "C" {

const char* bench_version(void) { return "1.0.0"; }

const char* bench_last_error(void) { return g_last_error.c_str(); }

void bench_string_free(char* s) { delete[] s; }

bench_catalog* bench_catalog_create(void) {
  try {
    // the shared immutable catalog; the handle does not own it
    return reinterpret_cast<bench_catalog*>(const_cast<bench::Catalog*>(&bench::catalog()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

void bench_catalog_free(bench_catalog*) {}

int bench_catalog_size(const bench_catalog* cat) { return unwrap(cat)->size(); }

bench_status bench_lookup(const bench_catalog* cat, const char* key, int* index_out) {
  return guarded([&] {
    if (!key || !index_out) throw bench::Error(bench::ErrorCode::InvalidArgument, "null argument");
    *index_out = unwrap(cat)->lookup(key).index;
  });
}

bench_status bench_spec_json(const bench_catalog* cat, int index, char** json_out) {
  return guarded([&] {
    const auto& f = spec_of(cat, index);
    *json_out = dup_string(unwrap(cat)->spec_json(f));
  });
}

bench_status bench_catalog_export(const bench_catalog* cat, const char* format, char** out) {
  return guarded([&] { *out = dup_string(unwrap(cat)->export_catalog(format)); });
}

bench_status bench_filter(const bench_catalog* cat, const char* criteria_json, char** out) {
  return guarded([&] {
    nlohmann::json doc = nlohmann::json::parse(criteria_json ? criteria_json : "{}");
    bench::FilterCriteria c;
    auto parse_enum = [&doc](const char* key, auto parse) {
      using T = decltype(parse(std::string{}));
      std::optional<T> r;
      if (doc.contains(key)) r = parse(doc[key].template get<std::string>());
      return r;
    };
    c.continuity = parse_enum("continuity", [](const std::string& s) {
      if (s == "continuous") return bench::Continuity::Continuous;
      if (s == "discontinuous") return bench::Continuity::Discontinuous;
      if (s == "unstated") return bench::Continuity::Unstated;
      throw bench::Error(bench::ErrorCode::InvalidArgument, "bad continuity value '" + s + "'");
    });
    c.differentiability = parse_enum("differentiability", [](const std::string& s) {
      if (s == "differentiable") return bench::Differentiability::Differentiable;
      if (s == "non-differentiable") return bench::Differentiability::NonDifferentiable;
      if (s == "unstated") return bench::Differentiability::Unstated;
      throw bench::Error(bench::ErrorCode::InvalidArgument,
                         "bad differentiability value '" + s + "'");
    });
    c.separability = parse_enum("separability", [](const std::string& s) {
      if (s == "separable") return bench::Separability::Separable;
      if (s == "partially-separable") return bench::Separability::PartiallySeparable;
      if (s == "non-separable") return bench::Separability::NonSeparable;
      if (s == "unstated") return bench::Separability::Unstated;
      throw bench::Error(bench::ErrorCode::InvalidArgument, "bad separability value '" + s + "'");
    });
    c.scalability = parse_enum("scalability", [](const std::string& s) {
      if (s == "scalable") return bench::ScalabilityFlag::Scalable;
      if (s == "non-scalable") return bench::ScalabilityFlag::NonScalable;
      if (s == "unstated") return bench::ScalabilityFlag::Unstated;
      throw bench::Error(bench::ErrorCode::InvalidArgument, "bad scalability value '" + s + "'");
    });
    c.modality = parse_enum("modality", [](const std::string& s) {
      if (s == "unimodal") return bench::Modality::Unimodal;
      if (s == "multimodal") return bench::Modality::Multimodal;
      if (s == "unstated") return bench::Modality::Unstated;
      throw bench::Error(bench::ErrorCode::InvalidArgument, "bad modality value '" + s + "'");
    });
    if (doc.contains("dimension")) c.fixed_dimension = doc["dimension"].get<int>();

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const bench::FunctionSpec* f : unwrap(cat)->filter(c)) arr.push_back(f->index);
    *out = dup_string(arr.dump());
  });
}

bench_status bench_default_dimension(const bench_catalog* cat, int index, int* dim_out) {
  return guarded([&] { *dim_out = spec_of(cat, index).dimension.audit_dimension(); });
}

bench_status bench_dimension_ok(const bench_catalog* cat, int index, int dim) {
  return guarded([&] {
    if (!spec_of(cat, index).dimension.accepts(dim))
      throw bench::Error(bench::ErrorCode::DimensionMismatch, "dimension not accepted");
  });
}

bench_status bench_bounds(const bench_catalog* cat, int index, int dim, double* lower,
                          double* upper) {
  return guarded([&] {
    const auto& f = spec_of(cat, index);
    for (int i = 0; i < dim; ++i) {
      lower[i] = f.bounds.lower_at(i);
      upper[i] = f.bounds.upper_at(i);
    }
  });
}

bench_status bench_evaluate(const bench_catalog* cat, int index, const double* x, int dim,
                            uint64_t seed, bench_noise noise, double* value_out) {
  return guarded([&] {
    bench::EvalContext ctx;
    ctx.seed = seed;
    ctx.noise = noise == BENCH_NOISE_SAMPLE ? bench::NoisePolicy::Sample
                                            : bench::NoisePolicy::Suppress;
    *value_out = bench::evaluate(spec_of(cat, index),
                                 std::span<const double>(x, static_cast<size_t>(dim)), ctx);
  });
}

bench_status bench_evaluate_batch(const bench_catalog* cat, int index, const double* xs,
                                  int npoints, int dim, uint64_t seed, bench_noise noise,
                                  double* values_out, int* statuses_out) {
  return guarded([&] {
    std::vector<std::vector<double>> points(static_cast<size_t>(npoints));
    for (int i = 0; i < npoints; ++i)
      points[static_cast<size_t>(i)].assign(xs + static_cast<size_t>(i) * dim,
                                            xs + static_cast<size_t>(i + 1) * dim);
    bench::EvalContext ctx;
    ctx.seed = seed;
    ctx.noise = noise == BENCH_NOISE_SAMPLE ? bench::NoisePolicy::Sample
                                            : bench::NoisePolicy::Suppress;
    bench::BatchResult r = bench::evaluate_batch(spec_of(cat, index), points, ctx);
    for (int i = 0; i < npoints; ++i) {
      values_out[i] = r.values[static_cast<size_t>(i)];
      if (statuses_out) statuses_out[i] = r.ok[static_cast<size_t>(i)] ? BENCH_OK : BENCH_E_DOMAIN;
    }
  });
}

bench_status bench_fd_gradient(const bench_catalog* cat, int index, const double* x, int dim,
                               double step, double* grad_out) {
  return guarded([&] {
    bench::FDScheme scheme;
    if (step > 0) scheme.step = step;
    auto g = bench::fd_gradient(spec_of(cat, index),
                                std::span<const double>(x, static_cast<size_t>(dim)), scheme);
    for (int i = 0; i < dim; ++i) grad_out[i] = g[static_cast<size_t>(i)];
  });
}

bench_status bench_stationarity(const bench_catalog* cat, int index, const double* x, int dim,
                                double* residual_out) {
  return guarded([&] {
    *residual_out = bench::stationarity_residual(
        spec_of(cat, index), std::span<const double>(x, static_cast<size_t>(dim)));
  });
}

bench_status bench_separability_probe(const bench_catalog* cat, int index, int dimension,
                                      int samples, uint64_t seed, double tol, char** out) {
  return guarded([&] {
    const auto& f = spec_of(cat, index);
    int dim = dimension > 0 ? dimension : f.dimension.audit_dimension();
    int n = samples > 0 ? samples : 64;
    double t = tol > 0 ? tol : 1e-6;
    bench::SeparabilityVerdict v = bench::separability_probe(f, dim, n, seed, t);
    nlohmann::ordered_json j;
    j["fn"] = f.index;
    j["slug"] = f.slug;
    j["dim"] = dim;
    j["samples"] = v.samples;
    j["seed"] = seed;
    j["tolerance"] = t;
    j["verdict"] = bench::to_string(v.verdict);
    j["evidence"] = v.evidence;
    *out = dup_string(j.dump() + "\n");
  });
}

bench_status bench_check_minimum(const bench_catalog* cat, int index, double tol,
                                 const char* format, char** out) {
  return guarded([&] {
    const auto& f = spec_of(cat, index);
    bench::AuditReport report;
    report.records = bench::check_minimum(f, tol);
    bool any_d = false, any_c = false, any_v = false;
    for (const auto& r : report.records) {
      any_d |= r.status == bench::AuditStatus::Discrepant;
      any_c |= r.status == bench::AuditStatus::Corrected;
      any_v |= r.status == bench::AuditStatus::Verified;
    }
    auto st = bench::AuditStatus::Unverifiable;
    if (any_d) st = bench::AuditStatus::Discrepant;
    else if (any_c) st = bench::AuditStatus::Corrected;
    else if (any_v) st = bench::AuditStatus::Verified;
    report.function_status[f.index] = st;
    report.summary.records = static_cast<int>(report.records.size());
    std::string fmt = format ? format : "json";
    if (fmt == "json") *out = dup_string(bench::audit_report_json(report));
    else if (fmt == "csv") *out = dup_string(bench::audit_report_csv(report));
    else throw bench::Error(bench::ErrorCode::InvalidArgument, "unknown format '" + fmt + "'");
  });
}

bench_status bench_audit_all(const bench_catalog* cat, double tol, const char* format,
                             char** out) {
  (void)cat;
  return guarded([&] {
    bench::AuditReport report = bench::audit_all(tol);
    std::string fmt = format ? format : "json";
    if (fmt == "json") *out = dup_string(bench::audit_report_json(report));
    else if (fmt == "csv") *out = dup_string(bench::audit_report_csv(report));
    else throw bench::Error(bench::ErrorCode::InvalidArgument, "unknown format '" + fmt + "'");
  });
}

bench_status bench_errata_ledger(const bench_catalog* cat, double tol, char** out) {
  (void)cat;
  return guarded([&] {
    bench::AuditReport report = bench::audit_all(tol);
    *out = dup_string(bench::errata_ledger_json(report));
  });
}

bench_status bench_check_expected(const bench_catalog* cat, double tol,
                                  const char* expected_json, int* match_out, char** diff_out) {
  (void)cat;
  return guarded([&] {
    bench::AuditReport report = bench::audit_all(tol);
    std::string diff;
    bool ok = bench::matches_expected_errata(report, expected_json ? expected_json : "[]", &diff);
    *match_out = ok ? 1 : 0;
    if (diff_out) *diff_out = dup_string(diff);
  });
}

bench_status bench_grid_csv(const bench_catalog* cat, int index, double x1_lo, double x1_hi,
                            double x2_lo, double x2_hi, int resolution, char** out) {
  return guarded([&] {
    *out = dup_string(
        bench::grid_csv(spec_of(cat, index), x1_lo, x1_hi, x2_lo, x2_hi, resolution));
  });
}

bench_status bench_run_manifest(const bench_catalog* cat, const char* manifest_json,
                                const char* format, char** results_out, char** summary_out) {
  (void)cat;
  return guarded([&] {
    bench::Manifest m = bench::parse_manifest(manifest_json ? manifest_json : "{}");
    bench::SuiteResult r = bench::run_suite(m);
    std::string fmt = format ? format : "json";
    if (fmt == "json") *results_out = dup_string(bench::results_json(r.runs));
    else if (fmt == "csv") *results_out = dup_string(bench::results_csv(r.runs));
    else throw bench::Error(bench::ErrorCode::InvalidArgument, "unknown format '" + fmt + "'");
    if (summary_out) *summary_out = dup_string(r.summary_table);
  });
}

void bench_format_double(double value, char* buf, size_t buflen) {
  std::string s = bench::format_double(value);
  std::snprintf(buf, buflen, "%s", s.c_str());
}

}  // extern "C"
