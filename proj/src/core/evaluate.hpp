#pragma once

#include <span>
#include <vector>

#include "core/registry.hpp"

namespace bench {

// Evaluates one point. The point must satisfy the function's dimension rule;
// coordinates may lie outside the bounds box. Throws Error(DimensionMismatch)
// or Error(DomainError).
double evaluate(const FunctionSpec& f, std::span<const double> x, const EvalContext& ctx);

// Elementwise evaluate; for stochastic functions each point uses a sub-seed
// derived from (ctx.seed, point index). Per-element failures are reported via
// the `ok` flag and a NaN value.
struct BatchResult {
  std::vector<double> values;
  std::vector<bool> ok;
};
BatchResult evaluate_batch(const FunctionSpec& f, const std::vector<std::vector<double>>& xs,
                           const EvalContext& ctx);

}  // namespace bench
