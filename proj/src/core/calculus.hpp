#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/registry.hpp"

namespace bench {

struct FDScheme {
  enum class Kind { Central, Forward };
  Kind kind = Kind::Central;
  // Per-coordinate step is step * max(1, |x_i|).
  double step = 1e-6;
};

// Finite-difference gradient. Coordinates touching a bound fall back to a
// one-sided difference into the box. Throws Error(NonFiniteResult) if a probe
// evaluation is non-finite, and propagates DomainError.
std::vector<double> fd_gradient(const FunctionSpec& f, std::span<const double> x,
                                const FDScheme& scheme = {});

// Second central differences per coordinate; coordinates at a bound use the
// one-sided three-point stencil into the box.
std::vector<double> fd_hessian_diagonal(const FunctionSpec& f, std::span<const double> x,
                                        const FDScheme& scheme = {});

// Norm of the finite-difference gradient projected onto the feasible cone of
// the bounds box: at a lower bound only descent components pointing outward
// count, likewise at an upper bound.
double stationarity_residual(const FunctionSpec& f, std::span<const double> x,
                             const FDScheme& scheme = {});

enum class SeparabilityClass { AdditivelySeparable, NonSeparable, Inconclusive };

struct SeparabilityVerdict {
  SeparabilityClass verdict = SeparabilityClass::Inconclusive;
  double evidence = 0.0;  // max relative interaction residual observed
  int samples = 0;
};

std::string to_string(SeparabilityClass v);

// Empirical additive-separability probe: samples random in-box points and
// coordinate pairs, and measures the mixed interaction residual
// |f(x+di+dj) - f(x+di) - f(x+dj) + f(x)| relative to max(1, |f(x)|).
SeparabilityVerdict separability_probe(const FunctionSpec& f, int dimension, int samples,
                                       std::uint64_t seed, double tolerance);

}  // namespace bench
