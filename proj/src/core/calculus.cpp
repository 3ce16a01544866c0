#include "core/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "core/evaluate.hpp"

namespace bench {

std::string to_string(SeparabilityClass v) {
  switch (v) {
    case SeparabilityClass::AdditivelySeparable: return "additively-separable";
    case SeparabilityClass::NonSeparable: return "non-separable";
    default: return "inconclusive";
  }
}

namespace {

double eval_suppressed(const FunctionSpec& f, std::span<const double> x) {
  EvalContext ctx;
  ctx.noise = NoisePolicy::Suppress;
  double v = evaluate(f, x, ctx);
  if (!std::isfinite(v))
    throw Error(ErrorCode::NonFiniteResult, f.slug + ": non-finite probe evaluation");
  return v;
}

}  // namespace

std::vector<double> fd_gradient(const FunctionSpec& f, std::span<const double> x,
                                const FDScheme& scheme) {
  if (scheme.step <= 0) throw Error(ErrorCode::InvalidArgument, "fd step must be positive");
  size_t n = x.size();
  std::vector<double> grad(n, 0.0);
  std::vector<double> p(x.begin(), x.end());
  for (size_t i = 0; i < n; ++i) {
    double h = scheme.step * std::max(1.0, std::fabs(x[i]));
    double lo = f.bounds.lower_at(static_cast<int>(i));
    double hi = f.bounds.upper_at(static_cast<int>(i));
    bool at_lower = x[i] - h < lo;
    bool at_upper = x[i] + h > hi;

    double xi = x[i];
    if (scheme.kind == FDScheme::Kind::Central && !at_lower && !at_upper) {
      p[i] = xi + h;
      double fp = eval_suppressed(f, p);
      p[i] = xi - h;
      double fm = eval_suppressed(f, p);
      grad[i] = (fp - fm) / (2 * h);
    } else if (!at_upper) {
      p[i] = xi + h;
      double fp = eval_suppressed(f, p);
      p[i] = xi;
      double f0 = eval_suppressed(f, p);
      grad[i] = (fp - f0) / h;
    } else {
      p[i] = xi - h;
      double fm = eval_suppressed(f, p);
      p[i] = xi;
      double f0 = eval_suppressed(f, p);
      grad[i] = (f0 - fm) / h;
    }
    p[i] = xi;
    if (!std::isfinite(grad[i]))
      throw Error(ErrorCode::NonFiniteResult, f.slug + ": non-finite gradient component");
  }
  return grad;
}

std::vector<double> fd_hessian_diagonal(const FunctionSpec& f, std::span<const double> x,
                                        const FDScheme& scheme) {
  if (scheme.step <= 0) throw Error(ErrorCode::InvalidArgument, "fd step must be positive");
  size_t n = x.size();
  std::vector<double> diag(n, 0.0);
  std::vector<double> p(x.begin(), x.end());
  // a larger default step: the second difference loses twice the precision
  double base = scheme.step > 1e-6 ? scheme.step : 1e-4;
  for (size_t i = 0; i < n; ++i) {
    double h = base * std::max(1.0, std::fabs(x[i]));
    double lo = f.bounds.lower_at(static_cast<int>(i));
    double hi = f.bounds.upper_at(static_cast<int>(i));
    double xi = x[i];
    double sign = 0;  // 0 = centered
    if (xi - h < lo) sign = 1;
    else if (xi + h > hi) sign = -1;

    double f0 = eval_suppressed(f, p);
    if (sign == 0) {
      p[i] = xi + h;
      double fp = eval_suppressed(f, p);
      p[i] = xi - h;
      double fm = eval_suppressed(f, p);
      diag[i] = (fp - 2 * f0 + fm) / (h * h);
    } else {
      p[i] = xi + sign * h;
      double f1 = eval_suppressed(f, p);
      p[i] = xi + sign * 2 * h;
      double f2 = eval_suppressed(f, p);
      diag[i] = (f2 - 2 * f1 + f0) / (h * h);
    }
    p[i] = xi;
    if (!std::isfinite(diag[i]))
      throw Error(ErrorCode::NonFiniteResult, f.slug + ": non-finite curvature component");
  }
  return diag;
}

double stationarity_residual(const FunctionSpec& f, std::span<const double> x,
                             const FDScheme& scheme) {
  std::vector<double> grad = fd_gradient(f, x, scheme);
  double s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double h = scheme.step * std::max(1.0, std::fabs(x[i]));
    double lo = f.bounds.lower_at(static_cast<int>(i));
    double hi = f.bounds.upper_at(static_cast<int>(i));
    double g = grad[i];
    if (x[i] - lo <= h) g = std::min(g, 0.0);       // only outward descent counts
    else if (hi - x[i] <= h) g = std::max(g, 0.0);
    s += g * g;
  }
  return std::sqrt(s);
}

SeparabilityVerdict separability_probe(const FunctionSpec& f, int dimension, int samples,
                                       std::uint64_t seed, double tolerance) {
  if (!f.dimension.accepts(dimension))
    throw Error(ErrorCode::DimensionMismatch,
                f.slug + " does not accept dimension " + std::to_string(dimension));
  if (samples < 16) throw Error(ErrorCode::InvalidArgument, "probe needs samples >= 16");
  if (tolerance <= 0) throw Error(ErrorCode::InvalidArgument, "probe tolerance must be positive");

  SeparabilityVerdict out;
  out.samples = samples;
  if (dimension < 2) {
    out.verdict = SeparabilityClass::AdditivelySeparable;  // one variable, trivially additive
    return out;
  }

  NoiseStream rng(seed, NoisePolicy::Sample);
  size_t n = static_cast<size_t>(dimension);
  std::vector<double> x(n), xi(n), xj(n), xij(n);
  int failures = 0;
  bool exceeded = false;
  for (int s = 0; s < samples; ++s) {
    for (size_t k = 0; k < n; ++k) {
      double lo = f.bounds.lower_at(static_cast<int>(k));
      double hi = f.bounds.upper_at(static_cast<int>(k));
      x[k] = lo + (hi - lo) * rng.next_uniform();
    }
    size_t i = static_cast<size_t>(rng.next_uniform() * dimension) % n;
    size_t j = static_cast<size_t>(rng.next_uniform() * (dimension - 1)) % (n - 1);
    if (j >= i) ++j;

    auto delta = [&](size_t k) {
      double w = f.bounds.width_at(static_cast<int>(k));
      double d = 1e-3 * w;
      return x[k] + d > f.bounds.upper_at(static_cast<int>(k)) ? -d : d;
    };
    double di = delta(i), dj = delta(j);
    xi = x;
    xi[i] += di;
    xj = x;
    xj[j] += dj;
    xij = x;
    xij[i] += di;
    xij[j] += dj;

    try {
      EvalContext ctx;
      double f0 = evaluate(f, x, ctx);
      double fi = evaluate(f, xi, ctx);
      double fj = evaluate(f, xj, ctx);
      double fij = evaluate(f, xij, ctx);
      if (!std::isfinite(f0) || !std::isfinite(fi) || !std::isfinite(fj) ||
          !std::isfinite(fij)) {
        ++failures;
        continue;
      }
      double resid = std::fabs(fij - fi - fj + f0) / std::max(1.0, std::fabs(f0));
      out.evidence = std::max(out.evidence, resid);
      if (resid > tolerance) exceeded = true;
    } catch (const Error&) {
      ++failures;
    }
  }

  if (failures > samples / 2) {
    out.verdict = SeparabilityClass::Inconclusive;
  } else if (exceeded) {
    out.verdict = SeparabilityClass::NonSeparable;
  } else {
    out.verdict = SeparabilityClass::AdditivelySeparable;
  }
  return out;
}

}  // namespace bench
