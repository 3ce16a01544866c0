#include "core/evaluate.hpp"

#include <cmath>

namespace bench {

double evaluate(const FunctionSpec& f, std::span<const double> x, const EvalContext& ctx) {
  int n = static_cast<int>(x.size());
  if (!f.dimension.accepts(n))
    throw Error(ErrorCode::DimensionMismatch,
                f.slug + " does not accept dimension " + std::to_string(n));
  for (double v : x)
    if (!std::isfinite(v))
      throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");

  EvalContext local = ctx;
  NoiseStream noise(ctx.seed, f.stochastic ? ctx.noise : NoisePolicy::Suppress);
  double value = f.eval(x, local, noise);
  if (std::isnan(value))
    throw Error(ErrorCode::DomainError, f.slug + ": formula is singular at this point");
  return value;
}

BatchResult evaluate_batch(const FunctionSpec& f, const std::vector<std::vector<double>>& xs,
                           const EvalContext& ctx) {
  BatchResult out;
  out.values.reserve(xs.size());
  out.ok.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    EvalContext sub = ctx;
    sub.seed = derive_seed(ctx.seed, i);
    try {
      out.values.push_back(evaluate(f, xs[i], sub));
      out.ok.push_back(true);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DimensionMismatch) throw;
      out.values.push_back(std::nan(""));
      out.ok.push_back(false);
    }
  }
  return out;
}

}  // namespace bench
