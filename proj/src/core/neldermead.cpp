#include "core/neldermead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/types.hpp"

namespace bench {

namespace {

void clamp(std::vector<double>& p, std::span<const double> lo, std::span<const double> hi) {
  for (size_t i = 0; i < p.size(); ++i) p[i] = std::clamp(p[i], lo[i], hi[i]);
}

}  // namespace

NelderMeadResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, std::span<const double> lower,
    std::span<const double> upper, const NelderMeadOptions& options) {
  const size_t n = start.size();
  NelderMeadResult out;
  out.best_point.assign(start.begin(), start.end());
  out.best_value = std::numeric_limits<double>::infinity();

  std::vector<std::vector<double>> simplex;
  std::vector<double> fx;
  auto track_best = [&](const std::vector<double>& p, double v) {
    if (v < out.best_value) {
      out.best_value = v;
      out.best_point = p;
    }
  };

  try {
    simplex.emplace_back(start.begin(), start.end());
    for (size_t i = 0; i < n; ++i) {
      std::vector<double> p(start.begin(), start.end());
      double step = options.initial_step.empty() ? 0.05 : options.initial_step[i];
      p[i] += step;
      if (p[i] > upper[i]) p[i] = start[i] - step;  // flip into the box
      clamp(p, lower, upper);
      simplex.push_back(std::move(p));
    }
    for (auto& v : simplex) fx.push_back(objective(v));
    for (size_t i = 0; i < simplex.size(); ++i) track_best(simplex[i], fx[i]);

    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n), cand(n);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
      out.iterations = iter + 1;
      std::iota(order.begin(), order.end(), size_t{0});
      std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fx[a] < fx[b]; });
      const auto& best = simplex[order[0]];
      const auto& worst = simplex[order[n]];

      double diameter = 0;
      for (size_t i = 1; i <= n; ++i)
        for (size_t j = 0; j < n; ++j)
          diameter = std::max(diameter, std::fabs(simplex[order[i]][j] - best[j]));
      if (diameter < options.diameter_tol) {
        out.stop = NelderMeadStop::Converged;
        return out;
      }

      for (size_t j = 0; j < n; ++j) {
        centroid[j] = 0;
        for (size_t i = 0; i < n; ++i) centroid[j] += simplex[order[i]][j];
        centroid[j] /= static_cast<double>(n);
      }

      // reflection
      std::vector<double> xr(n);
      for (size_t j = 0; j < n; ++j) xr[j] = centroid[j] + options.alpha * (centroid[j] - worst[j]);
      clamp(xr, lower, upper);
      double fr = objective(xr);
      track_best(xr, fr);

      if (fr < fx[order[0]]) {
        std::vector<double> xe(n);
        for (size_t j = 0; j < n; ++j) xe[j] = centroid[j] + options.gamma * (xr[j] - centroid[j]);
        clamp(xe, lower, upper);
        double fe = objective(xe);
        track_best(xe, fe);
        if (fe < fr) {
          simplex[order[n]] = std::move(xe);
          fx[order[n]] = fe;
        } else {
          simplex[order[n]] = std::move(xr);
          fx[order[n]] = fr;
        }
        continue;
      }
      if (fr < fx[order[n - 1]]) {
        simplex[order[n]] = std::move(xr);
        fx[order[n]] = fr;
        continue;
      }

      // contraction (outside when the reflected point improved on the worst)
      if (fr < fx[order[n]]) {
        for (size_t j = 0; j < n; ++j) cand[j] = centroid[j] + options.rho * (xr[j] - centroid[j]);
      } else {
        for (size_t j = 0; j < n; ++j) cand[j] = centroid[j] + options.rho * (worst[j] - centroid[j]);
      }
      clamp(cand, lower, upper);
      double fc = objective(cand);
      track_best(cand, fc);
      if (fc < std::min(fr, fx[order[n]])) {
        simplex[order[n]] = cand;
        fx[order[n]] = fc;
        continue;
      }

      // shrink toward the best vertex
      for (size_t i = 1; i <= n; ++i) {
        auto& v = simplex[order[i]];
        for (size_t j = 0; j < n; ++j) v[j] = best[j] + options.sigma * (v[j] - best[j]);
        clamp(v, lower, upper);
        fx[order[i]] = objective(v);
        track_best(v, fx[order[i]]);
      }
    }
    out.stop = NelderMeadStop::IterationLimit;
  } catch (const BudgetExhausted&) {
    out.stop = NelderMeadStop::BudgetExhausted;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DomainError) throw;
    out.stop = NelderMeadStop::DomainError;
  }
  return out;
}

}  // namespace bench
