#include <cmath>
#include <set>

#include "core/registry.hpp"
#include "core/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bench;

TEST_CASE("beale audits clean") {
  auto recs = check_minimum(catalog().lookup("beale"));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].residual == 0.0);
  CHECK(recs[0].status == AuditStatus::Verified);
}

TEST_CASE("egg holder is discrepant: the printed value has the wrong sign") {
  auto recs = check_minimum(catalog().lookup("egg-holder"));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].status == AuditStatus::Discrepant);
  CHECK(recs[0].evaluated < -900);
  CHECK(recs[0].claimed > 900);
}

TEST_CASE("cross-in-tray verifies at all four printed minima") {
  auto recs = check_minimum(catalog().lookup("cross-in-tray"));
  REQUIRE(recs.size() == 4);
  for (const auto& r : recs) {
    CHECK(r.residual <= 1e-6);
    CHECK(r.status == AuditStatus::Verified);
  }
}

TEST_CASE("alpine 2: refinement exposes the printed point as a maximizer") {
  auto recs = check_minimum(catalog().lookup("alpine-2"));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].status == AuditStatus::Discrepant);
  CHECK(recs[0].refined < recs[0].evaluated - 1.0);
}

TEST_CASE("exact-zero golden points audit with residual exactly zero") {
  const Catalog& cat = catalog();
  for (int fn : {10, 20, 29, 65, 70, 105, 138, 139, 149}) {
    CAPTURE(fn);
    auto recs = check_minimum(cat.by_index(fn));
    REQUIRE(!recs.empty());
    for (const auto& r : recs) CHECK(r.residual == 0.0);
  }
}

TEST_CASE("value-only and symbolic claims are unverifiable") {
  for (const char* slug : {"cola", "dolan", "deb-1", "trid-6", "powell-sum"}) {
    CAPTURE(slug);
    auto recs = check_minimum(catalog().lookup(slug));
    REQUIRE(!recs.empty());
    for (const auto& r : recs) CHECK(r.status == AuditStatus::Unverifiable);
  }
  // a singular claimed point surfaces as unverifiable with a note
  auto rump = check_minimum(catalog().lookup("rump"));
  REQUIRE(rump.size() == 1);
  CHECK(rump[0].status == AuditStatus::Unverifiable);
  CHECK(!rump[0].note.empty());
}

TEST_CASE("parsopoulos: all twelve sampled family representatives verify") {
  auto recs = check_minimum(catalog().lookup("parsopoulos"));
  REQUIRE(recs.size() == 12);
  for (const auto& r : recs) CHECK(r.status == AuditStatus::Verified);
}

TEST_CASE("the oracle never verifies when refinement improves beyond tolerance") {
  AuditReport report = audit_all();
  for (const AuditRecord& r : report.records) {
    if (r.status != AuditStatus::Verified && r.status != AuditStatus::Corrected) continue;
    CAPTURE(r.fn);
    double improvement = std::max(0.0, r.evaluated - r.refined);
    CHECK(improvement <= 1e-2);  // bounded by the loosest tolerance tier
  }
}

TEST_CASE("full audit is deterministic and finds the anchored discrepancies") {
  AuditReport a = audit_all();
  AuditReport b = audit_all();
  CHECK(audit_report_json(a) == audit_report_json(b));
  CHECK(audit_report_csv(a) == audit_report_csv(b));

  for (int fn : {7, 53, 96, 116, 141, 54})
    CHECK(a.function_status.at(fn) == AuditStatus::Discrepant);

  int concrete = 0;
  for (const FunctionSpec& f : catalog().entries()) {
    bool has = false;
    for (const KnownOptimum& o : f.optima)
      if (o.has_value && !o.locations.empty()) has = true;
    if (has) ++concrete;
  }
  CHECK(a.summary.functions_with_concrete_claims == concrete);
  CHECK(a.summary.records == static_cast<int>(a.records.size()));
}

TEST_CASE("errata ledger is valid JSON and carries the duplication notes") {
  AuditReport report = audit_all();
  std::string ledger = errata_ledger_json(report);
  auto doc = nlohmann::json::parse(ledger);  // throws if invalid
  CHECK(nlohmann::json::parse(doc.dump()) == doc);

  bool has_dup_125 = false, has_dup_14 = false;
  for (const auto& note : doc["notes"]) {
    int fn = note["fn"].get<int>();
    std::string text = note["note"].get<std::string>();
    if (fn == 126 && text.find("duplicate of f125") != std::string::npos) has_dup_125 = true;
    if (fn == 15 && text.find("Biggs EXP5") != std::string::npos) has_dup_14 = true;
  }
  CHECK(has_dup_125);
  CHECK(has_dup_14);

  std::set<int> ledger_discrepant;
  for (const auto& e : doc["discrepant"]) ledger_discrepant.insert(e["fn"].get<int>());
  for (const auto& [fn, st] : report.function_status)
    CHECK(ledger_discrepant.count(fn) == (st == AuditStatus::Discrepant ? 1u : 0u));
}

TEST_CASE("expected-errata comparison") {
  AuditReport report = audit_all();
  nlohmann::json expected = nlohmann::json::array();
  for (const auto& [fn, st] : report.function_status)
    if (st == AuditStatus::Discrepant) expected.push_back({{"fn", fn}, {"reason", "x"}});
  std::string diff;
  CHECK(matches_expected_errata(report, expected.dump(), &diff));
  CHECK(diff.empty());

  expected.erase(expected.begin());
  CHECK_FALSE(matches_expected_errata(report, expected.dump(), &diff));
  CHECK(diff.find("unexpected discrepant") != std::string::npos);

  expected.push_back({{"fn", 10}, {"reason", "x"}});
  CHECK_FALSE(matches_expected_errata(report, expected.dump(), &diff));
  CHECK(diff.find("missing") != std::string::npos);
}

TEST_CASE("corrected entries keep their provenance notes") {
  const Catalog& cat = catalog();
  auto giunta = check_minimum(cat.lookup("giunta"));
  REQUIRE(giunta.size() == 1);
  CHECK(giunta[0].status == AuditStatus::Corrected);
  CHECK(giunta[0].note.find("0.060447") != std::string::npos);
  CHECK(giunta[0].residual <= 5e-4);

  auto helical = check_minimum(cat.lookup("helical-valley"));
  REQUIRE(helical.size() == 1);
  CHECK(helical[0].status == AuditStatus::Corrected);
  CHECK(helical[0].residual == 0.0);
}
