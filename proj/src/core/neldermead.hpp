#pragma once

#include <functional>
#include <span>
#include <vector>

namespace bench {

// Thrown by counting objectives when their evaluation budget runs out; the
// optimizers catch it and return the best point seen so far.
struct BudgetExhausted {};

struct NelderMeadOptions {
  double alpha = 1.0;  // reflection
  double gamma = 2.0;  // expansion
  double rho = 0.5;    // contraction
  double sigma = 0.5;  // shrink
  int max_iterations = 200;
  double diameter_tol = 1e-12;
  std::vector<double> initial_step;  // per-coordinate simplex offsets
};

enum class NelderMeadStop { Converged, IterationLimit, BudgetExhausted, DomainError };

struct NelderMeadResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int iterations = 0;
  NelderMeadStop stop = NelderMeadStop::IterationLimit;
};

// Bounded Nelder-Mead: candidate points are clamped into [lower, upper]
// before evaluation.
NelderMeadResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, std::span<const double> lower,
    std::span<const double> upper, const NelderMeadOptions& options);

}  // namespace bench
