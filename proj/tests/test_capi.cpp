// Exercises the extern-C surface end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>

#include "bench.h"
#include "doctest.h"
#include "json.hpp"

namespace {

std::string take(char* p) {
  std::string s = p ? p : "";
  bench_string_free(p);
  return s;
}

}  // namespace

TEST_CASE("catalog handle and lookups") {
  bench_catalog* cat = bench_catalog_create();
  REQUIRE(cat != nullptr);
  CHECK(bench_catalog_size(cat) == 175);

  int idx = 0;
  CHECK(bench_lookup(cat, "sphere", &idx) == BENCH_OK);
  CHECK(idx == 137);
  CHECK(bench_lookup(cat, "105", &idx) == BENCH_OK);
  CHECK(idx == 105);
  CHECK(bench_lookup(cat, "nope", &idx) == BENCH_E_UNKNOWN_FUNCTION);
  CHECK(std::strlen(bench_last_error()) > 0);
  bench_catalog_free(cat);
}

TEST_CASE("evaluation through the C API") {
  bench_catalog* cat = bench_catalog_create();
  double x[4] = {0, 0, 0, 0};
  double v = 1;
  CHECK(bench_evaluate(cat, 137, x, 2, 0, BENCH_NOISE_SUPPRESS, &v) == BENCH_OK);
  CHECK(v == 0.0);
  CHECK(bench_evaluate(cat, 10, x, 3, 0, BENCH_NOISE_SUPPRESS, &v) == BENCH_E_DIMENSION);
  double sing[2] = {0, 0};
  CHECK(bench_evaluate(cat, 109, sing, 2, 0, BENCH_NOISE_SUPPRESS, &v) == BENCH_E_DOMAIN);

  double xs[6] = {0, 0, 1, 1, 2, 2};
  double vals[3];
  int st[3];
  CHECK(bench_evaluate_batch(cat, 137, xs, 3, 2, 0, BENCH_NOISE_SUPPRESS, vals, st) == BENCH_OK);
  CHECK(vals[0] == 0.0);
  CHECK(vals[1] == 2.0);
  CHECK(vals[2] == 8.0);
  CHECK(st[0] == BENCH_OK);
  bench_catalog_free(cat);
}

TEST_CASE("spec json, filter and export") {
  bench_catalog* cat = bench_catalog_create();
  char* out = nullptr;
  REQUIRE(bench_spec_json(cat, 150, &out) == BENCH_OK);
  auto spec = nlohmann::json::parse(take(out));
  CHECK(spec["slug"] == "trid-6");
  CHECK(spec["optima"][0]["value"] == -50.0);

  REQUIRE(bench_filter(cat, R"({"modality":"unimodal","separability":"separable",
                                "continuity":"discontinuous"})", &out) == BENCH_OK);
  auto hits = nlohmann::json::parse(take(out));
  std::set<int> set(hits.begin(), hits.end());
  for (int fn : {138, 139, 140, 141}) CHECK(set.count(fn) == 1);
  CHECK(bench_filter(cat, R"({"modality":"sideways"})", &out) == BENCH_E_INVALID);

  REQUIRE(bench_catalog_export(cat, "json", &out) == BENCH_OK);
  std::string a = take(out);
  REQUIRE(bench_catalog_export(cat, "json", &out) == BENCH_OK);
  CHECK(a == take(out));
  CHECK(nlohmann::json::parse(a).size() == 175);
  bench_catalog_free(cat);
}

TEST_CASE("gradient, stationarity and probe") {
  bench_catalog* cat = bench_catalog_create();
  double x[2] = {1, 2};
  double grad[2];
  REQUIRE(bench_fd_gradient(cat, 137, x, 2, 0, grad) == BENCH_OK);
  CHECK(std::fabs(grad[0] - 2) <= 1e-5);
  CHECK(std::fabs(grad[1] - 4) <= 1e-5);

  double origin[2] = {0, 0};
  double resid = 1;
  REQUIRE(bench_stationarity(cat, 137, origin, 2, &resid) == BENCH_OK);
  CHECK(resid <= 1e-6);

  char* out = nullptr;
  REQUIRE(bench_separability_probe(cat, 137, 0, 0, 1, 0, &out) == BENCH_OK);
  auto v = nlohmann::json::parse(take(out));
  CHECK(v["verdict"] == "additively-separable");
  REQUIRE(bench_separability_probe(cat, 71, 0, 0, 1, 0, &out) == BENCH_OK);
  CHECK(nlohmann::json::parse(take(out))["verdict"] == "non-separable");
  bench_catalog_free(cat);
}

TEST_CASE("audit and ledger through the C API") {
  bench_catalog* cat = bench_catalog_create();
  char* out = nullptr;
  REQUIRE(bench_check_minimum(cat, 10, 0, "json", &out) == BENCH_OK);
  auto recs = nlohmann::json::parse(take(out));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["status"] == "verified");
  CHECK(recs[0]["residual"] == 0.0);

  REQUIRE(bench_check_minimum(cat, 53, 0, "csv", &out) == BENCH_OK);
  CHECK(take(out).find("discrepant") != std::string::npos);

  REQUIRE(bench_errata_ledger(cat, 0, &out) == BENCH_OK);
  auto ledger = nlohmann::json::parse(take(out));
  CHECK(ledger.contains("discrepant"));
  CHECK(ledger.contains("corrected"));
  CHECK(ledger.contains("notes"));

  int match = -1;
  REQUIRE(bench_check_expected(cat, 0, "[]", &match, nullptr) == BENCH_OK);
  CHECK(match == 0);  // the catalog does contain discrepancies
  bench_catalog_free(cat);
}

TEST_CASE("grid bytes are stable") {
  bench_catalog* cat = bench_catalog_create();
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(bench_grid_csv(cat, 137, -1, 1, -1, 1, 3, &a) == BENCH_OK);
  REQUIRE(bench_grid_csv(cat, 137, -1, 1, -1, 1, 3, &b) == BENCH_OK);
  std::string sa = take(a), sb = take(b);
  CHECK(sa == sb);
  CHECK(sa.rfind("x1,x2,f\n", 0) == 0);
  CHECK(bench_grid_csv(cat, 130, 0, 1, 0, 1, 3, &a) == BENCH_E_DIMENSION);
  bench_catalog_free(cat);
}

TEST_CASE("manifest runs through the C API") {
  bench_catalog* cat = bench_catalog_create();
  char* results = nullptr;
  char* summary = nullptr;
  const char* manifest = R"({"functions":["sphere"],"optimizers":["random_search"],
                             "budget":100,"seeds":[0,1]})";
  REQUIRE(bench_run_manifest(cat, manifest, "json", &results, &summary) == BENCH_OK);
  auto runs = nlohmann::json::parse(take(results));
  CHECK(runs.size() == 2);
  CHECK(take(summary).find("f137") != std::string::npos);

  CHECK(bench_run_manifest(cat, R"({"functions":["nope"],"optimizers":["random_search"],
                                    "budget":10,"seeds":[1]})",
                           "json", &results, nullptr) == BENCH_E_INVALID);
  bench_catalog_free(cat);
}

TEST_CASE("format_double emits shortest round-trip text") {
  char buf[32];
  bench_format_double(0.0, buf, sizeof(buf));
  CHECK(std::string(buf) == "0");
  bench_format_double(0.1, buf, sizeof(buf));
  CHECK(std::string(buf) == "0.1");
  bench_format_double(std::nan(""), buf, sizeof(buf));
  CHECK(std::string(buf) == "nan");
  bench_format_double(-HUGE_VAL, buf, sizeof(buf));
  CHECK(std::string(buf) == "-inf");
}
