#include "core/verify.hpp"

#include <cmath>
#include <set>

#include "core/calculus.hpp"
#include "core/evaluate.hpp"
#include "core/neldermead.hpp"
#include "core/textio.hpp"
#include "json.hpp"

namespace bench {

using ordered_json = nlohmann::ordered_json;

std::string to_string(AuditStatus v) {
  switch (v) {
    case AuditStatus::Verified: return "verified";
    case AuditStatus::Corrected: return "corrected";
    case AuditStatus::Discrepant: return "discrepant";
    default: return "unverifiable";
  }
}

namespace {

NelderMeadResult refine(const FunctionSpec& f, const std::vector<double>& start) {
  size_t n = start.size();
  std::vector<double> lo(n), hi(n), step(n);
  for (size_t i = 0; i < n; ++i) {
    lo[i] = f.bounds.lower_at(static_cast<int>(i));
    hi[i] = f.bounds.upper_at(static_cast<int>(i));
    step[i] = 1e-2 * (hi[i] - lo[i]);
  }
  NelderMeadOptions opts;
  opts.max_iterations = 200;
  opts.initial_step = step;
  auto objective = [&f](std::span<const double> x) {
    EvalContext ctx;  // Suppress
    return evaluate(f, x, ctx);
  };
  return nelder_mead_minimize(objective, start, lo, hi, opts);
}

AuditRecord audit_location(const FunctionSpec& f, const KnownOptimum& opt,
                           const std::vector<double>& point, double tol) {
  AuditRecord rec;
  rec.fn = f.index;
  rec.point = point;
  rec.family = opt.family;
  rec.has_claimed = opt.has_value;
  rec.claimed = opt.has_value ? opt.value : std::nan("");
  rec.evaluated = std::nan("");
  rec.residual = std::nan("");
  rec.refined = std::nan("");
  rec.stationarity = std::nan("");
  rec.note = opt.note;

  EvalContext ctx;  // Suppress
  try {
    rec.evaluated = evaluate(f, point, ctx);
  } catch (const Error& e) {
    rec.status = AuditStatus::Unverifiable;
    rec.note = rec.note.empty() ? e.what() : rec.note + "; " + e.what();
    return rec;
  }

  NelderMeadResult r = refine(f, point);
  rec.refined_point = r.best_point;
  rec.refined = std::min(r.best_value, rec.evaluated);
  try {
    rec.stationarity = stationarity_residual(f, rec.refined_point);
  } catch (const Error&) {
    // kinks and domain edges leave the field unavailable
  }

  if (!opt.has_value) {
    rec.status = AuditStatus::Unverifiable;
    return rec;
  }
  rec.residual = std::fabs(rec.evaluated - rec.claimed);
  double improvement = std::max(0.0, rec.evaluated - rec.refined);
  bool pass = rec.residual <= tol && improvement <= tol;
  if (pass)
    rec.status = opt.corrected ? AuditStatus::Corrected : AuditStatus::Verified;
  else
    rec.status = AuditStatus::Discrepant;
  return rec;
}

}  // namespace

std::vector<AuditRecord> check_minimum(const FunctionSpec& f, double tol) {
  std::vector<AuditRecord> records;
  for (const KnownOptimum& opt : f.optima) {
    double use_tol = tol > 0 ? tol : opt.value_tolerance;
    if (opt.locations.empty()) {
      AuditRecord rec;
      rec.fn = f.index;
      rec.family = opt.family;
      rec.has_claimed = opt.has_value;
      rec.claimed = opt.has_value ? opt.value : std::nan("");
      rec.evaluated = std::nan("");
      rec.residual = std::nan("");
      rec.refined = std::nan("");
      rec.stationarity = std::nan("");
      rec.status = AuditStatus::Unverifiable;
      rec.note = opt.note;
      records.push_back(std::move(rec));
      continue;
    }
    for (const auto& point : opt.locations) records.push_back(audit_location(f, opt, point, use_tol));
  }
  return records;
}

AuditReport audit_all(double tol) {
  AuditReport report;
  for (const FunctionSpec& f : catalog().entries()) {
    bool concrete = false;
    for (const KnownOptimum& o : f.optima)
      if (o.has_value && !o.locations.empty()) concrete = true;
    if (concrete) report.summary.functions_with_concrete_claims++;

    std::vector<AuditRecord> recs = check_minimum(f, tol);
    bool any_discrepant = false, any_corrected = false, any_verified = false;
    for (AuditRecord& r : recs) {
      switch (r.status) {
        case AuditStatus::Verified: report.summary.verified++; any_verified = true; break;
        case AuditStatus::Corrected: report.summary.corrected++; any_corrected = true; break;
        case AuditStatus::Discrepant: report.summary.discrepant++; any_discrepant = true; break;
        default: report.summary.unverifiable++; break;
      }
      report.records.push_back(std::move(r));
    }
    AuditStatus fn_status = AuditStatus::Unverifiable;
    if (any_discrepant) fn_status = AuditStatus::Discrepant;
    else if (any_corrected) fn_status = AuditStatus::Corrected;
    else if (any_verified) fn_status = AuditStatus::Verified;
    report.function_status[f.index] = fn_status;
  }
  report.summary.records = static_cast<int>(report.records.size());
  return report;
}

namespace {

ordered_json record_json(const AuditRecord& r) {
  ordered_json j;
  j["fn"] = r.fn;
  if (r.point.empty())
    j["point"] = nullptr;
  else
    j["point"] = r.point;
  if (r.has_claimed)
    j["claimed"] = r.claimed;
  else
    j["claimed"] = nullptr;
  j["evaluated"] = std::isnan(r.evaluated) ? ordered_json() : ordered_json(r.evaluated);
  j["residual"] = std::isnan(r.residual) ? ordered_json() : ordered_json(r.residual);
  j["refined"] = std::isnan(r.refined) ? ordered_json() : ordered_json(r.refined);
  j["stationarity"] =
      std::isnan(r.stationarity) ? ordered_json() : ordered_json(r.stationarity);
  j["status"] = to_string(r.status);
  j["note"] = r.note;
  return j;
}

std::string join_point(const std::vector<double>& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ';';
    s += format_double(p[i]);
  }
  return s;
}

}  // namespace

std::string audit_report_json(const AuditReport& report) {
  ordered_json arr = ordered_json::array();
  for (const AuditRecord& r : report.records) arr.push_back(record_json(r));
  return arr.dump() + "\n";
}

std::string audit_report_csv(const AuditReport& report) {
  std::string out = "fn,point,claimed,evaluated,residual,refined,stationarity,status,note\n";
  for (const AuditRecord& r : report.records) {
    out += std::to_string(r.fn);
    out += ',';
    out += csv_quote(join_point(r.point));
    out += ',';
    out += r.has_claimed ? format_double(r.claimed) : "";
    out += ',';
    out += std::isnan(r.evaluated) ? "" : format_double(r.evaluated);
    out += ',';
    out += std::isnan(r.residual) ? "" : format_double(r.residual);
    out += ',';
    out += std::isnan(r.refined) ? "" : format_double(r.refined);
    out += ',';
    out += std::isnan(r.stationarity) ? "" : format_double(r.stationarity);
    out += ',';
    out += to_string(r.status);
    out += ',';
    out += csv_quote(r.note);
    out += '\n';
  }
  return out;
}

std::string errata_ledger_json(const AuditReport& report) {
  const Catalog& cat = catalog();
  ordered_json ledger;
  ordered_json discrepant = ordered_json::array();
  ordered_json corrected = ordered_json::array();
  for (const FunctionSpec& f : cat.entries()) {
    AuditStatus st = report.function_status.at(f.index);
    if (st != AuditStatus::Discrepant && st != AuditStatus::Corrected) continue;
    ordered_json entry;
    entry["fn"] = f.index;
    entry["slug"] = f.slug;
    entry["policy"] = "as-printed";
    for (const KnownOptimum& o : f.optima)
      if (o.corrected) entry["policy"] = "canonical-form";
    ordered_json findings = ordered_json::array();
    for (const AuditRecord& r : report.records) {
      if (r.fn != f.index) continue;
      if (r.status != AuditStatus::Discrepant && r.status != AuditStatus::Corrected) continue;
      ordered_json g;
      g["point"] = r.point.empty() ? ordered_json() : ordered_json(r.point);
      g["claimed"] = r.has_claimed ? ordered_json(r.claimed) : ordered_json();
      g["evaluated"] = std::isnan(r.evaluated) ? ordered_json() : ordered_json(r.evaluated);
      g["refined"] = std::isnan(r.refined) ? ordered_json() : ordered_json(r.refined);
      g["status"] = to_string(r.status);
      if (!r.note.empty()) g["note"] = r.note;
      findings.push_back(g);
    }
    entry["findings"] = findings;
    if (st == AuditStatus::Discrepant)
      discrepant.push_back(entry);
    else
      corrected.push_back(entry);
  }
  ledger["discrepant"] = discrepant;
  ledger["corrected"] = corrected;

  ordered_json notes = ordered_json::array();
  for (const FunctionSpec& f : cat.entries()) {
    std::string text = f.note;
    for (const KnownOptimum& o : f.optima) {
      if (o.note.empty()) continue;
      if (!text.empty()) text += "; ";
      text += o.note;
    }
    if (text.empty()) continue;
    ordered_json n;
    n["fn"] = f.index;
    n["slug"] = f.slug;
    n["note"] = text;
    notes.push_back(n);
  }
  ledger["notes"] = notes;
  return ledger.dump() + "\n";
}

bool matches_expected_errata(const AuditReport& report, const std::string& expected_json,
                             std::string* diff) {
  nlohmann::json doc = nlohmann::json::parse(expected_json);
  if (!doc.is_array()) throw Error(ErrorCode::InvalidArgument, "expected-errata must be an array");
  std::set<int> expected;
  for (const auto& e : doc) {
    if (!e.contains("fn")) throw Error(ErrorCode::InvalidArgument, "expected-errata entry lacks fn");
    expected.insert(e["fn"].get<int>());
  }
  std::set<int> actual;
  for (const auto& [fn, st] : report.function_status)
    if (st == AuditStatus::Discrepant) actual.insert(fn);

  std::string d;
  for (int fn : actual)
    if (!expected.count(fn)) d += "unexpected discrepant: f" + std::to_string(fn) + "\n";
  for (int fn : expected)
    if (!actual.count(fn)) d += "expected discrepant missing: f" + std::to_string(fn) + "\n";
  if (diff) *diff = d;
  return d.empty();
}

}  // namespace bench
