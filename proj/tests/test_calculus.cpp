#include <cmath>

#include "core/calculus.hpp"
#include "core/registry.hpp"
#include "doctest.h"

using namespace bench;

TEST_CASE("fd gradient matches analytic gradients") {
  const FunctionSpec& sphere = catalog().lookup("sphere");
  std::vector<double> x = {1, 2};
  auto g = fd_gradient(sphere, x);
  CHECK(std::fabs(g[0] - 2) <= 1e-5);
  CHECK(std::fabs(g[1] - 4) <= 1e-5);

  const FunctionSpec& beale = catalog().lookup("beale");
  std::vector<double> opt = {3, 0.5};
  auto gb = fd_gradient(beale, opt);
  CHECK(std::hypot(gb[0], gb[1]) <= 1e-4);

  const FunctionSpec& rosen = catalog().lookup("rosenbrock");
  std::vector<double> ones(5, 1.0);
  auto gr = fd_gradient(rosen, ones);
  double norm = 0;
  for (double v : gr) norm += v * v;
  CHECK(std::sqrt(norm) <= 1e-4);
}

TEST_CASE("fd gradient falls back to one-sided steps at the bounds") {
  // Adjiman's optimum sits on the x1 upper bound
  const FunctionSpec& adjiman = catalog().lookup("adjiman");
  std::vector<double> x = {2, 0.10578};
  auto g = fd_gradient(adjiman, x);
  CHECK(std::isfinite(g[0]));
  CHECK(std::isfinite(g[1]));
  // interior derivative wrt x2 vanishes at the optimum
  CHECK(std::fabs(g[1]) <= 1e-3);
}

TEST_CASE("fd gradient rejects non-finite probes") {
  // pen holder hits -exp(1/0) = -inf on the cos(x1) = 0 ridge
  const FunctionSpec& pen = catalog().lookup("pen-holder");
  std::vector<double> x = {std::numbers::pi / 2, 1.0};
  CHECK_THROWS_AS(fd_gradient(pen, x), Error);
}

TEST_CASE("central differences are second order on a cubic-rich function") {
  const FunctionSpec& beale = catalog().lookup("beale");
  std::vector<double> x = {1, 1.5};
  FDScheme tight;
  tight.step = 1e-7;
  auto ref = fd_gradient(beale, x, tight);
  auto err = [&](double step) {
    FDScheme s;
    s.step = step;
    auto g = fd_gradient(beale, x, s);
    return std::hypot(g[0] - ref[0], g[1] - ref[1]);
  };
  double prev = err(1e-2);
  for (int k = 1; k <= 3; ++k) {
    double cur = err(1e-2 / std::pow(2.0, k));
    double ratio = prev / cur;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
    prev = cur;
  }
}

TEST_CASE("hessian diagonal") {
  const FunctionSpec& sum_sq = catalog().lookup("sum-squares");
  std::vector<double> x = {1.5, -2.0, 0.5};
  auto d = fd_hessian_diagonal(sum_sq, x);
  CHECK(d[0] == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(d[1] == doctest::Approx(4.0).epsilon(1e-4));
  CHECK(d[2] == doctest::Approx(6.0).epsilon(1e-4));

  // boundary fallback stencil stays inside the box
  const FunctionSpec& sphere = catalog().lookup("sphere");
  std::vector<double> corner = {0, 10};
  auto dc = fd_hessian_diagonal(sphere, corner);
  CHECK(dc[0] == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(dc[1] == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("stationarity residual") {
  const FunctionSpec& sphere = catalog().lookup("sphere");
  std::vector<double> origin = {0, 0};
  CHECK(stationarity_residual(sphere, origin) <= 1e-6);

  // boundary optimum: only the inward/tangential components count
  const FunctionSpec& egg = catalog().lookup("egg-holder");
  std::vector<double> x = {512, 404.2319};
  CHECK(stationarity_residual(egg, x) <= 1e-2);

  // non-differentiable kink at the alpine origin still yields a finite report
  const FunctionSpec& alpine = catalog().lookup("alpine-1");
  CHECK(std::isfinite(stationarity_residual(alpine, origin)));
}

TEST_CASE("separability probe classifies the golden subset") {
  const Catalog& cat = catalog();
  for (const char* slug :
       {"alpine-1", "bohachevsky-1", "csendes", "powell-sum", "qing", "sphere", "sum-squares"}) {
    const FunctionSpec& f = cat.lookup(slug);
    for (std::uint64_t seed : {1, 2}) {
      CAPTURE(slug);
      SeparabilityVerdict v =
          separability_probe(f, f.dimension.audit_dimension(), 64, seed, 1e-6);
      CHECK(v.verdict == SeparabilityClass::AdditivelySeparable);
    }
  }
  for (const char* slug : {"beale", "griewank", "matyas", "rosenbrock", "schwefel-2-22"}) {
    const FunctionSpec& f = cat.lookup(slug);
    for (std::uint64_t seed : {1, 2}) {
      CAPTURE(slug);
      SeparabilityVerdict v =
          separability_probe(f, f.dimension.audit_dimension(), 64, seed, 1e-6);
      CHECK(v.verdict == SeparabilityClass::NonSeparable);
    }
  }
}

TEST_CASE("zero-cross-term quadratics probe separable for every seed") {
  const FunctionSpec& f = catalog().lookup("sum-squares");
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    SeparabilityVerdict v = separability_probe(f, 4, 64, seed, 1e-6);
    CHECK(v.verdict == SeparabilityClass::AdditivelySeparable);
    CHECK(v.evidence <= 1e-12);
  }
}

TEST_CASE("probe is deterministic given a seed and validates input") {
  const FunctionSpec& f = catalog().lookup("griewank");
  SeparabilityVerdict a = separability_probe(f, 2, 64, 9, 1e-6);
  SeparabilityVerdict b = separability_probe(f, 2, 64, 9, 1e-6);
  CHECK(a.evidence == b.evidence);
  CHECK(a.verdict == b.verdict);
  CHECK_THROWS_AS(separability_probe(f, 2, 8, 0, 1e-6), Error);
  CHECK_THROWS_AS(separability_probe(f, 0, 64, 0, 1e-6), Error);
  CHECK_THROWS_AS(separability_probe(catalog().lookup("beale"), 3, 64, 0, 1e-6), Error);
  // one free variable is additively separable by definition
  CHECK(separability_probe(f, 1, 64, 0, 1e-6).verdict ==
        SeparabilityClass::AdditivelySeparable);
}
