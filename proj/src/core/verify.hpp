#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/registry.hpp"

namespace bench {

enum class AuditStatus { Verified, Corrected, Discrepant, Unverifiable };

std::string to_string(AuditStatus v);

struct AuditRecord {
  int fn = 0;
  std::vector<double> point;  // claimed location; empty when none printed
  std::string family;
  bool has_claimed = false;
  double claimed = 0.0;
  double evaluated = 0.0;  // NaN when not evaluable
  double residual = 0.0;   // NaN when not comparable
  std::vector<double> refined_point;
  double refined = 0.0;       // NaN when refinement did not run
  double stationarity = 0.0;  // projected FD residual at the refined point; NaN if unavailable
  AuditStatus status = AuditStatus::Unverifiable;
  std::string note;
};

struct AuditSummary {
  int functions_with_concrete_claims = 0;
  int records = 0;
  int verified = 0;
  int corrected = 0;
  int discrepant = 0;
  int unverifiable = 0;
};

struct AuditReport {
  std::vector<AuditRecord> records;                // ordered by function index
  std::map<int, AuditStatus> function_status;      // aggregated per function
  AuditSummary summary;
};

// Audits every claimed optimum of one function. tol <= 0 selects the
// per-claim default tolerance. Refinement: bounded Nelder-Mead from the
// claimed point, 200 iterations, simplex scale 1e-2 of the box width.
std::vector<AuditRecord> check_minimum(const FunctionSpec& f, double tol = 0);

// Full-catalog audit; deterministic and ordered by index.
AuditReport audit_all(double tol = 0);

std::string audit_report_json(const AuditReport& report);
std::string audit_report_csv(const AuditReport& report);

// Machine-readable ledger of all Corrected and Discrepant entries plus the
// static interpretation notes carried by the registry.
std::string errata_ledger_json(const AuditReport& report);

// True iff the Discrepant function set of `report` equals the set listed in
// an expected-errata document (JSON array of {fn, reason}); mismatches are
// written to `diff`.
bool matches_expected_errata(const AuditReport& report, const std::string& expected_json,
                             std::string* diff);

}  // namespace bench
