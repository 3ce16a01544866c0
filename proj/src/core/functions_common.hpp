#pragma once

#include <cmath>
#include <numbers>
#include <span>

#include "core/registry.hpp"
#include "core/tables.hpp"
#include "core/types.hpp"

namespace bench::detail {

using Span = std::span<const double>;
using Ctx = EvalContext;
using Noise = NoiseStream;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;

// audit tolerance tiers
inline constexpr double kExact = 1e-8;    // printed exact values (0, integers)
inline constexpr double kRounded = 5e-4;  // printed rounded decimals
inline constexpr double kApprox = 5e-2;   // values printed with an approximation sign

inline double sqr(double v) { return v * v; }

inline double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

[[noreturn]] inline void domain_error(const std::string& msg) {
  throw Error(ErrorCode::DomainError, msg);
}

}  // namespace bench::detail
