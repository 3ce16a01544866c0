#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bench {

enum class ErrorCode {
  UnknownFunction,
  DimensionMismatch,
  DomainError,
  InvalidArgument,
  NonFiniteResult,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class Continuity { Continuous, Discontinuous, Unstated };
enum class Differentiability { Differentiable, NonDifferentiable, Unstated };
enum class Separability { Separable, PartiallySeparable, NonSeparable, Unstated };
enum class ScalabilityFlag { Scalable, NonScalable, Unstated };
enum class Modality { Unimodal, Multimodal, Unstated };

struct PropertyFlags {
  Continuity continuity = Continuity::Unstated;
  Differentiability differentiability = Differentiability::Unstated;
  Separability separability = Separability::Unstated;
  ScalabilityFlag scalability = ScalabilityFlag::Unstated;
  Modality modality = Modality::Unstated;
};

// Parses a catalog header such as "Continuous, Differentiable, Non-Separable,
// Scalable, Multimodal". Attributes not mentioned stay Unstated. "Separable?"
// maps to Unstated.
PropertyFlags parse_flags(const std::string& header);

struct DimensionRule {
  enum class Kind { Fixed, Scalable };
  Kind kind = Kind::Fixed;
  int fixed_n = 2;
  int default_n = 2;
  int min_n = 1;
  int max_n = 0;  // 0 = no upper limit
  int multiple_of = 1;

  bool accepts(int n) const {
    if (kind == Kind::Fixed) return n == fixed_n;
    if (n < min_n) return false;
    if (max_n > 0 && n > max_n) return false;
    return n % multiple_of == 0;
  }
  int audit_dimension() const { return kind == Kind::Fixed ? fixed_n : default_n; }
};

inline DimensionRule fixed_dim(int n) {
  DimensionRule r;
  r.kind = DimensionRule::Kind::Fixed;
  r.fixed_n = n;
  return r;
}

inline DimensionRule scalable_dim(int default_n, int min_n, int max_n = 0, int multiple_of = 1) {
  DimensionRule r;
  r.kind = DimensionRule::Kind::Scalable;
  r.default_n = default_n;
  r.min_n = min_n;
  r.max_n = max_n;
  r.multiple_of = multiple_of;
  return r;
}

struct Bounds {
  bool uniform = true;
  double lower = 0.0;
  double upper = 1.0;
  std::vector<std::pair<double, double>> coords;  // used when !uniform

  double lower_at(int i) const {
    return uniform ? lower : coords.at(static_cast<size_t>(i)).first;
  }
  double upper_at(int i) const {
    return uniform ? upper : coords.at(static_cast<size_t>(i)).second;
  }
  double width_at(int i) const { return upper_at(i) - lower_at(i); }
};

inline Bounds box(double lo, double hi) {
  Bounds b;
  b.uniform = true;
  b.lower = lo;
  b.upper = hi;
  return b;
}

inline Bounds box(std::vector<std::pair<double, double>> per_coord) {
  Bounds b;
  b.uniform = false;
  b.coords = std::move(per_coord);
  return b;
}

enum class OptimumStatus { PaperClaimed, Verified, Corrected, Discrepant, Unstated };

struct KnownOptimum {
  std::vector<std::vector<double>> locations;  // concrete points at the audit dimension
  std::string family;                          // symbolic description, may be empty
  bool has_value = false;
  double value = 0.0;
  double value_tolerance = 5e-4;
  OptimumStatus status = OptimumStatus::PaperClaimed;
  bool corrected = false;  // a canonical correction was applied to the claim/formula
  std::string note;
};

enum class NoisePolicy { Suppress, Sample };

// Value-like evaluation context. The random stream used by the stochastic
// functions restarts from `seed` on every evaluate() call, one draw per
// stochastic term in ascending index order.
struct EvalContext {
  std::uint64_t seed = 0;
  NoisePolicy noise = NoisePolicy::Suppress;
  const std::map<std::string, double>* params = nullptr;

  double param(const char* name, double fallback) const {
    if (params) {
      auto it = params->find(name);
      if (it != params->end()) return it->second;
    }
    return fallback;
  }
};

// Per-call noise stream, constructed inside evaluate().
class NoiseStream {
 public:
  NoiseStream(std::uint64_t seed, NoisePolicy policy) : state_(seed), policy_(policy) {}

  // Returns `suppressed` under NoisePolicy::Suppress, otherwise the next
  // uniform draw from [0,1).
  double uniform_or(double suppressed) {
    if (policy_ == NoisePolicy::Suppress) return suppressed;
    return next_uniform();
  }

  double next_uniform() {
    // splitmix64; fixed across platforms.
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
  NoisePolicy policy_;
};

// Deterministic sub-seed for element `index` of a batch or run stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct FunctionSpec;
using Evaluator = double (*)(std::span<const double>, EvalContext&, NoiseStream&);

struct FunctionSpec {
  int index = 0;
  std::string slug;
  std::string name;
  DimensionRule dimension;
  Bounds bounds;
  PropertyFlags flags;
  std::vector<KnownOptimum> optima;
  bool stochastic = false;
  std::string citation;
  std::string note;
  std::map<std::string, double> default_params;
  Evaluator eval = nullptr;
};

std::string to_string(Continuity v);
std::string to_string(Differentiability v);
std::string to_string(Separability v);
std::string to_string(ScalabilityFlag v);
std::string to_string(Modality v);
std::string to_string(OptimumStatus v);

}  // namespace bench
