#include <cmath>

#include "core/evaluate.hpp"
#include "core/optimize.hpp"
#include "core/registry.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bench;

namespace {

void check_monotone(const RunResult& r) {
  for (size_t i = 1; i < r.trajectory.size(); ++i) {
    CHECK(r.trajectory[i].best_value <= r.trajectory[i - 1].best_value);
    CHECK(r.trajectory[i].evaluations > r.trajectory[i - 1].evaluations);
  }
}

}  // namespace

TEST_CASE("random search respects a budget of one") {
  RunResult r = random_search(catalog().lookup("sphere"), 2, Budget{1}, 3);
  CHECK(r.evaluations_used == 1);
  CHECK(r.best_point.size() == 2);
}

TEST_CASE("random search is seed-deterministic") {
  const FunctionSpec& f = catalog().lookup("griewank");
  RunResult a = random_search(f, 2, Budget{500}, 11);
  RunResult b = random_search(f, 2, Budget{500}, 11);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_point == b.best_point);
  CHECK(a.evaluations_used == b.evaluations_used);
  REQUIRE(a.trajectory.size() == b.trajectory.size());
  for (size_t i = 0; i < a.trajectory.size(); ++i)
    CHECK(a.trajectory[i].best_value == b.trajectory[i].best_value);
  RunResult c = random_search(f, 2, Budget{500}, 12);
  CHECK(a.best_value != c.best_value);
}

TEST_CASE("nelder-mead converges on the classic starts") {
  const FunctionSpec& beale = catalog().lookup("beale");
  std::vector<double> s1 = {2, 2};
  RunResult r1 = nelder_mead_run(beale, s1, Budget{2000});
  CHECK(r1.best_value <= 1e-6);
  CHECK(r1.evaluations_used <= 2000);

  const FunctionSpec& rosen = catalog().lookup("rosenbrock");
  std::vector<double> s2 = {-1.2, 1};
  RunResult r2 = nelder_mead_run(rosen, s2, Budget{5000});
  CHECK(r2.best_value <= 1e-6);
}

TEST_CASE("nelder-mead rejects starts outside the box") {
  const FunctionSpec& beale = catalog().lookup("beale");
  std::vector<double> outside = {10, 0};
  CHECK_THROWS_AS(nelder_mead_run(beale, outside, Budget{100}), Error);
}

TEST_CASE("differential evolution hits the ackley basin and stays deterministic") {
  const FunctionSpec& ackley = catalog().lookup("ackley-1");
  RunResult a = differential_evolution(ackley, 2, Budget{20000}, 0);
  RunResult b = differential_evolution(ackley, 2, Budget{20000}, 0);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_value <= 1e-3);
  CHECK(a.evaluations_used <= 20000);
  check_monotone(a);
}

TEST_CASE("differential evolution solves griewank in most seeds") {
  const FunctionSpec& griewank = catalog().lookup("griewank");
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    if (differential_evolution(griewank, 2, Budget{20000}, seed).best_value <= 1e-2) ++hits;
  CHECK(hits >= 16);  // at least 80% of seeds
}

TEST_CASE("differential evolution initializes inside asymmetric bounds") {
  // budget == population: only the initial sampling runs
  const FunctionSpec& adjiman = catalog().lookup("adjiman");
  RunResult r = differential_evolution(adjiman, 2, Budget{20}, 5);
  CHECK(r.evaluations_used == 20);
  CHECK(r.best_point[0] >= -1);
  CHECK(r.best_point[0] <= 2);
  CHECK(r.best_point[1] >= -1);
  CHECK(r.best_point[1] <= 1);
  CHECK_THROWS_AS(differential_evolution(adjiman, 2, Budget{10}, 5), Error);
}

TEST_CASE("stochastic runs sample the noise but score suppressed") {
  const FunctionSpec& quartic = catalog().lookup("quartic");
  RunResult r = random_search(quartic, 2, Budget{2000}, 1);
  // the sampled best value carries noise; the suppressed score does not
  EvalContext ctx;
  double clean = evaluate(quartic, r.best_point, ctx);
  CHECK(r.suppressed_value == clean);
  CHECK(r.best_value >= clean);
}

TEST_CASE("budget cap and monotone trajectories over randomized manifests") {
  const Catalog& cat = catalog();
  NoiseStream rng(2024, NoisePolicy::Sample);
  const char* optimizers[] = {"random_search", "nelder_mead", "differential_evolution"};
  for (int trial = 0; trial < 25; ++trial) {
    int fn = 1 + static_cast<int>(rng.next_uniform() * 175) % 175;
    const FunctionSpec& f = cat.by_index(fn);
    int dim = f.dimension.audit_dimension();
    long budget = 50 + static_cast<long>(rng.next_uniform() * 2000);
    const char* name = optimizers[static_cast<int>(rng.next_uniform() * 3) % 3];
    std::uint64_t seed = static_cast<std::uint64_t>(rng.next_uniform() * 1e6);
    CAPTURE(fn);
    CAPTURE(name);
    CAPTURE(budget);
    RunResult r;
    if (std::string(name) == "random_search") {
      r = random_search(f, dim, Budget{budget}, seed);
    } else if (std::string(name) == "nelder_mead") {
      std::vector<double> start(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i)
        start[static_cast<size_t>(i)] =
            f.bounds.lower_at(i) + f.bounds.width_at(i) * rng.next_uniform();
      r = nelder_mead_run(f, start, Budget{budget});
    } else {
      if (budget < 10 * dim) budget = 10 * dim;
      r = differential_evolution(f, dim, Budget{budget}, seed);
    }
    CHECK(r.evaluations_used <= budget);
    check_monotone(r);
    if (!r.trajectory.empty()) {
      CHECK(r.trajectory.back().evaluations <= r.evaluations_used);
      CHECK(r.trajectory.back().best_value == r.best_value);
    }
  }
}

TEST_CASE("manifest parsing validates exhaustively") {
  std::string bad = R"({
    "functions": ["sphere", "not-a-function"],
    "optimizers": [{"name": "nelder_mead"}, {"name": "annealing"}],
    "dimensions": [3],
    "budget": 0,
    "seeds": [1]
  })";
  try {
    parse_manifest(bad);
    FAIL("expected validation failure");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("not-a-function") != std::string::npos);
    CHECK(msg.find("annealing") != std::string::npos);
    CHECK(msg.find("budget") != std::string::npos);
    CHECK(msg.find("beale") == std::string::npos);
  }
  // fixed-dimension functions reject incompatible manifest dimensions up front
  std::string bad_dim = R"({"functions": ["beale"], "optimizers": ["random_search"],
                            "dimensions": [3], "budget": 10, "seeds": [1]})";
  CHECK_THROWS_AS(parse_manifest(bad_dim), Error);
}

TEST_CASE("run suite cardinality and determinism") {
  Manifest empty = parse_manifest("{}");
  SuiteResult none = run_suite(empty);
  CHECK(none.runs.empty());
  CHECK(!none.summary_table.empty());

  std::string text = R"({
    "functions": ["beale", "sphere"],
    "optimizers": [{"name": "random_search"}],
    "budget": 300,
    "seeds": [0, 1, 2]
  })";
  Manifest m = parse_manifest(text);
  SuiteResult a = run_suite(m);
  CHECK(a.runs.size() == 6);
  SuiteResult b = run_suite(m);
  CHECK(results_json(a.runs) == results_json(b.runs));
  CHECK(results_csv(a.runs) == results_csv(b.runs));

  // results stay in manifest order
  CHECK(a.runs[0].fn == 10);
  CHECK(a.runs[3].fn == 137);
}

TEST_CASE("success thresholds default to verified claims plus 1e-3") {
  std::string text = R"({
    "functions": ["sphere", "egg-holder"],
    "optimizers": [{"name": "nelder_mead"}],
    "budget": 500,
    "seeds": [3]
  })";
  SuiteResult r = run_suite(parse_manifest(text));
  REQUIRE(r.runs.size() == 2);
  CHECK(r.runs[0].success_defined);
  CHECK(r.runs[0].threshold == doctest::Approx(1e-3));
  // egg holder's only claim is discrepant, so no default threshold exists
  CHECK_FALSE(r.runs[1].success_defined);

  std::string with_threshold = R"({
    "functions": ["egg-holder"],
    "optimizers": [{"name": "random_search"}],
    "budget": 100,
    "seeds": [3],
    "thresholds": {"egg-holder": -500.0}
  })";
  SuiteResult t = run_suite(parse_manifest(with_threshold));
  CHECK(t.runs[0].success_defined);
  CHECK(t.runs[0].threshold == -500.0);
}

TEST_CASE("csv results carry the documented columns") {
  std::string text = R"({"functions": ["sphere"], "optimizers": ["random_search"],
                         "budget": 50, "seeds": [7]})";
  SuiteResult r = run_suite(parse_manifest(text));
  std::string csv = results_csv(r.runs);
  CHECK(csv.rfind("fn,optimizer,dim,seed,best_value,evals,success\n", 0) == 0);
  CHECK(csv.find("137,random_search,2,7,") != std::string::npos);
}
