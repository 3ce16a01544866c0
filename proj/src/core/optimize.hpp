#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/neldermead.hpp"
#include "core/registry.hpp"

namespace bench {

struct Budget {
  long max_evaluations = 0;
};

struct TrajectoryPoint {
  long evaluations;
  double best_value;
};

struct RunResult {
  int fn = 0;
  std::string slug;
  std::string optimizer;
  int dimension = 0;
  std::uint64_t seed = 0;
  std::vector<double> best_point;
  double best_value = 0.0;        // value under the run's noise policy
  double suppressed_value = 0.0;  // deterministic score at best_point
  long evaluations_used = 0;
  std::vector<TrajectoryPoint> trajectory;
  bool success_defined = false;
  bool success = false;
  double threshold = 0.0;
  std::string flag;  // set when a run ended early (domain error)
};

// The only path optimizers use to reach a function: counts evaluations,
// enforces the budget cap, tracks the best point and the trajectory at
// checkpoint indices {1,2,5,10,20,50,...,budget}.
class CountingObjective {
 public:
  CountingObjective(const FunctionSpec& f, Budget budget, std::uint64_t seed,
                    NoisePolicy policy);

  double operator()(std::span<const double> x);  // throws BudgetExhausted at the cap

  long used() const { return used_; }
  long remaining() const { return budget_.max_evaluations - used_; }
  const std::vector<double>& best_point() const { return best_point_; }
  double best_value() const { return best_value_; }
  const std::vector<TrajectoryPoint>& trajectory() const { return trajectory_; }

 private:
  const FunctionSpec& f_;
  Budget budget_;
  std::uint64_t noise_base_;
  NoisePolicy policy_;
  long used_ = 0;
  double best_value_;
  std::vector<double> best_point_;
  std::vector<TrajectoryPoint> trajectory_;
  long next_checkpoint_ = 1;

  void advance_checkpoint();
};

RunResult random_search(const FunctionSpec& f, int dimension, Budget budget, std::uint64_t seed);

// Start point must lie inside the bounds box.
RunResult nelder_mead_run(const FunctionSpec& f, std::span<const double> start, Budget budget,
                          const NelderMeadOptions* params = nullptr);

struct DEParams {
  int population = 0;  // 0 = 10 * dimension
  double weight = 0.5;
  double crossover = 0.9;
};

RunResult differential_evolution(const FunctionSpec& f, int dimension, Budget budget,
                                 std::uint64_t seed, const DEParams& params = {});

struct ManifestOptimizer {
  std::string name;
  std::map<std::string, double> params;
};

struct Manifest {
  std::vector<std::string> functions;  // slugs or decimal indices
  std::vector<ManifestOptimizer> optimizers;
  std::vector<int> dimensions;  // empty = per-function default
  long budget = 0;
  std::vector<std::uint64_t> seeds;
  std::map<std::string, double> thresholds;  // slug -> success threshold
};

// Parses and validates; all validation problems are reported together in the
// thrown Error's message.
Manifest parse_manifest(const std::string& manifest_json);

struct SuiteResult {
  std::vector<RunResult> runs;
  std::string summary_table;
};

SuiteResult run_suite(const Manifest& manifest);

std::string results_json(const std::vector<RunResult>& runs);
std::string results_csv(const std::vector<RunResult>& runs);

}  // namespace bench
