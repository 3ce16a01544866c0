#include "core/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/evaluate.hpp"
#include "core/textio.hpp"
#include "core/verify.hpp"
#include "json.hpp"

namespace bench {

using ordered_json = nlohmann::ordered_json;

CountingObjective::CountingObjective(const FunctionSpec& f, Budget budget, std::uint64_t seed,
                                     NoisePolicy policy)
    : f_(f),
      budget_(budget),
      noise_base_(derive_seed(seed, 0x6e6f697365)),  // decoupled from the sampling stream
      policy_(policy),
      best_value_(std::numeric_limits<double>::infinity()) {
  if (budget.max_evaluations < 1)
    throw Error(ErrorCode::InvalidArgument, "budget must be at least 1 evaluation");
}

void CountingObjective::advance_checkpoint() {
  // 1, 2, 5, 10, 20, 50, ...
  long lead = next_checkpoint_;
  while (lead >= 10) lead /= 10;
  if (lead == 1 || lead == 5)
    next_checkpoint_ = next_checkpoint_ * 2;
  else
    next_checkpoint_ = next_checkpoint_ / 2 * 5;
}

double CountingObjective::operator()(std::span<const double> x) {
  if (used_ >= budget_.max_evaluations) throw BudgetExhausted{};
  EvalContext ctx;
  ctx.noise = policy_;
  ctx.seed = derive_seed(noise_base_, static_cast<std::uint64_t>(used_));
  double v = evaluate(f_, x, ctx);
  ++used_;
  if (v < best_value_) {
    best_value_ = v;
    best_point_.assign(x.begin(), x.end());
  }
  while (next_checkpoint_ <= used_ &&
         next_checkpoint_ <= budget_.max_evaluations) {
    trajectory_.push_back({next_checkpoint_, best_value_});
    advance_checkpoint();
  }
  if (used_ == budget_.max_evaluations &&
      (trajectory_.empty() || trajectory_.back().evaluations != used_))
    trajectory_.push_back({used_, best_value_});
  return v;
}

namespace {

NoisePolicy run_policy(const FunctionSpec& f) {
  return f.stochastic ? NoisePolicy::Sample : NoisePolicy::Suppress;
}

RunResult finish_run(const FunctionSpec& f, const std::string& optimizer, int dimension,
                     std::uint64_t seed, const CountingObjective& counter,
                     std::string flag = "") {
  RunResult r;
  r.fn = f.index;
  r.slug = f.slug;
  r.optimizer = optimizer;
  r.dimension = dimension;
  r.seed = seed;
  r.best_point = counter.best_point();
  r.best_value = counter.best_value();
  r.evaluations_used = counter.used();
  r.trajectory = counter.trajectory();
  if (r.evaluations_used > 0 &&
      (r.trajectory.empty() || r.trajectory.back().evaluations != r.evaluations_used))
    r.trajectory.push_back({r.evaluations_used, r.best_value});
  r.flag = std::move(flag);
  r.suppressed_value = std::nan("");
  if (!r.best_point.empty()) {
    try {
      EvalContext ctx;  // Suppress
      r.suppressed_value = evaluate(f, r.best_point, ctx);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DomainError) throw;
    }
  }
  return r;
}

std::vector<double> lower_vec(const FunctionSpec& f, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = f.bounds.lower_at(i);
  return v;
}

std::vector<double> upper_vec(const FunctionSpec& f, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = f.bounds.upper_at(i);
  return v;
}

void require_dimension(const FunctionSpec& f, int n) {
  if (!f.dimension.accepts(n))
    throw Error(ErrorCode::DimensionMismatch,
                f.slug + " does not accept dimension " + std::to_string(n));
}

}  // namespace

RunResult random_search(const FunctionSpec& f, int dimension, Budget budget,
                        std::uint64_t seed) {
  require_dimension(f, dimension);
  CountingObjective counter(f, budget, seed, run_policy(f));
  NoiseStream rng(seed, NoisePolicy::Sample);
  std::vector<double> lo = lower_vec(f, dimension), hi = upper_vec(f, dimension);
  std::vector<double> x(static_cast<size_t>(dimension));
  std::string flag;
  try {
    while (true) {
      for (size_t i = 0; i < x.size(); ++i)
        x[i] = lo[i] + (hi[i] - lo[i]) * rng.next_uniform();
      counter(x);
    }
  } catch (const BudgetExhausted&) {
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DomainError) throw;
    flag = "domain-error";
  }
  return finish_run(f, "random_search", dimension, seed, counter, flag);
}

RunResult nelder_mead_run(const FunctionSpec& f, std::span<const double> start, Budget budget,
                          const NelderMeadOptions* params) {
  int n = static_cast<int>(start.size());
  require_dimension(f, n);
  std::vector<double> lo = lower_vec(f, n), hi = upper_vec(f, n);
  for (int i = 0; i < n; ++i)
    if (start[static_cast<size_t>(i)] < lo[static_cast<size_t>(i)] ||
        start[static_cast<size_t>(i)] > hi[static_cast<size_t>(i)])
      throw Error(ErrorCode::InvalidArgument, "start point lies outside the bounds box");

  CountingObjective counter(f, budget, 0, run_policy(f));
  NelderMeadOptions opts = params ? *params : NelderMeadOptions{};
  if (opts.initial_step.empty()) {
    opts.initial_step.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      opts.initial_step[static_cast<size_t>(i)] =
          0.05 * (hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)]);
  }
  opts.max_iterations = static_cast<int>(budget.max_evaluations);
  NelderMeadResult r =
      nelder_mead_minimize([&counter](std::span<const double> x) { return counter(x); }, start,
                           lo, hi, opts);
  return finish_run(f, "nelder_mead", n, 0, counter,
                    r.stop == NelderMeadStop::DomainError ? "domain-error" : "");
}

RunResult differential_evolution(const FunctionSpec& f, int dimension, Budget budget,
                                 std::uint64_t seed, const DEParams& params) {
  require_dimension(f, dimension);
  int np = params.population > 0 ? params.population : 10 * dimension;
  if (np < 4) np = 4;
  if (budget.max_evaluations < np)
    throw Error(ErrorCode::InvalidArgument, "differential evolution needs budget >= population");

  CountingObjective counter(f, budget, seed, run_policy(f));
  NoiseStream rng(derive_seed(seed, 0xde), NoisePolicy::Sample);
  std::vector<double> lo = lower_vec(f, dimension), hi = upper_vec(f, dimension);
  size_t n = static_cast<size_t>(dimension);

  auto reflect = [&](double v, size_t j) {
    for (int guard = 0; guard < 64; ++guard) {
      if (v < lo[j])
        v = 2 * lo[j] - v;
      else if (v > hi[j])
        v = 2 * hi[j] - v;
      else
        return v;
    }
    return std::clamp(v, lo[j], hi[j]);
  };

  std::vector<std::vector<double>> pop(static_cast<size_t>(np), std::vector<double>(n));
  std::vector<double> fit(static_cast<size_t>(np));
  std::string flag;
  try {
    for (auto& ind : pop)
      for (size_t j = 0; j < n; ++j) ind[j] = lo[j] + (hi[j] - lo[j]) * rng.next_uniform();
    for (size_t i = 0; i < pop.size(); ++i) fit[i] = counter(pop[i]);

    std::vector<double> trial(n);
    while (true) {
      for (size_t i = 0; i < pop.size(); ++i) {
        size_t r1, r2, r3;
        do r1 = static_cast<size_t>(rng.next_uniform() * np) % pop.size(); while (r1 == i);
        do r2 = static_cast<size_t>(rng.next_uniform() * np) % pop.size();
        while (r2 == i || r2 == r1);
        do r3 = static_cast<size_t>(rng.next_uniform() * np) % pop.size();
        while (r3 == i || r3 == r1 || r3 == r2);
        size_t jrand = static_cast<size_t>(rng.next_uniform() * dimension) % n;
        for (size_t j = 0; j < n; ++j) {
          if (j == jrand || rng.next_uniform() < params.crossover)
            trial[j] = reflect(pop[r1][j] + params.weight * (pop[r2][j] - pop[r3][j]), j);
          else
            trial[j] = pop[i][j];
        }
        double ft = counter(trial);
        if (ft <= fit[i]) {
          pop[i] = trial;
          fit[i] = ft;
        }
      }
    }
  } catch (const BudgetExhausted&) {
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DomainError) throw;
    flag = "domain-error";
  }
  return finish_run(f, "differential_evolution", dimension, seed, counter, flag);
}

Manifest parse_manifest(const std::string& manifest_json) {
  std::vector<std::string> errors;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(manifest_json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidArgument, "manifest must be a JSON object");

  Manifest m;
  const Catalog& cat = catalog();
  if (doc.contains("functions"))
    for (const auto& v : doc["functions"]) {
      std::string key = v.is_number_integer() ? std::to_string(v.get<int>()) : v.get<std::string>();
      try {
        cat.lookup(key);
        m.functions.push_back(key);
      } catch (const Error&) {
        errors.push_back("unknown function '" + key + "'");
      }
    }
  static const std::set<std::string> known_optimizers = {"random_search", "nelder_mead",
                                                         "differential_evolution"};
  if (doc.contains("optimizers"))
    for (const auto& v : doc["optimizers"]) {
      ManifestOptimizer o;
      o.name = v.is_string() ? v.get<std::string>() : v.value("name", "");
      if (!known_optimizers.count(o.name)) {
        errors.push_back("unknown optimizer '" + o.name + "'");
        continue;
      }
      if (v.is_object() && v.contains("params"))
        for (auto it = v["params"].begin(); it != v["params"].end(); ++it)
          o.params[it.key()] = it.value().get<double>();
      m.optimizers.push_back(std::move(o));
    }
  if (doc.contains("dimensions"))
    for (const auto& v : doc["dimensions"]) m.dimensions.push_back(v.get<int>());
  m.budget = doc.value("budget", 0L);
  if (!m.functions.empty() || !m.optimizers.empty()) {
    if (m.budget < 1) errors.push_back("budget must be >= 1");
  }
  if (doc.contains("seeds"))
    for (const auto& v : doc["seeds"]) m.seeds.push_back(v.get<std::uint64_t>());
  if (doc.contains("thresholds"))
    for (auto it = doc["thresholds"].begin(); it != doc["thresholds"].end(); ++it)
      m.thresholds[it.key()] = it.value().get<double>();

  // dimension compatibility, checked for every pair up front
  for (const std::string& key : m.functions) {
    const FunctionSpec& f = cat.lookup(key);
    for (int d : m.dimensions)
      if (!f.dimension.accepts(d))
        errors.push_back(f.slug + " does not accept dimension " + std::to_string(d));
  }
  if (!m.functions.empty() && m.seeds.empty()) errors.push_back("seeds must be non-empty");

  if (!errors.empty()) {
    std::string msg = "manifest validation failed:";
    for (const std::string& e : errors) msg += "\n  - " + e;
    throw Error(ErrorCode::InvalidArgument, msg);
  }
  return m;
}

SuiteResult run_suite(const Manifest& manifest) {
  SuiteResult out;
  const Catalog& cat = catalog();

  // Success thresholds: explicit manifest entry, else claimed optimum + 1e-3
  // for functions whose audit verified (or canonically corrected) a claim.
  std::map<int, std::pair<bool, double>> thresholds;
  for (const std::string& key : manifest.functions) {
    const FunctionSpec& f = cat.lookup(key);
    if (thresholds.count(f.index)) continue;
    auto it = manifest.thresholds.find(f.slug);
    if (it != manifest.thresholds.end()) {
      thresholds[f.index] = {true, it->second};
      continue;
    }
    bool defined = false;
    double best = 0;
    std::vector<AuditRecord> recs = check_minimum(f);
    for (const AuditRecord& r : recs) {
      if (r.status != AuditStatus::Verified && r.status != AuditStatus::Corrected) continue;
      if (!defined || r.claimed < best) best = r.claimed;
      defined = true;
    }
    thresholds[f.index] = {defined, defined ? best + 1e-3 : 0.0};
  }

  for (const std::string& key : manifest.functions) {
    const FunctionSpec& f = cat.lookup(key);
    std::vector<int> dims = manifest.dimensions;
    if (dims.empty()) dims.push_back(f.dimension.audit_dimension());
    for (const ManifestOptimizer& opt : manifest.optimizers) {
      for (int dim : dims) {
        for (std::uint64_t seed : manifest.seeds) {
          Budget budget{manifest.budget};
          RunResult r;
          if (opt.name == "random_search") {
            r = random_search(f, dim, budget, seed);
          } else if (opt.name == "nelder_mead") {
            NoiseStream rng(derive_seed(seed, 0x5741), NoisePolicy::Sample);
            std::vector<double> start(static_cast<size_t>(dim));
            for (int i = 0; i < dim; ++i)
              start[static_cast<size_t>(i)] =
                  f.bounds.lower_at(i) + f.bounds.width_at(i) * rng.next_uniform();
            r = nelder_mead_run(f, start, budget);
            r.seed = seed;
          } else {
            DEParams de;
            if (auto it = opt.params.find("NP"); it != opt.params.end())
              de.population = static_cast<int>(it->second);
            if (auto it = opt.params.find("F"); it != opt.params.end()) de.weight = it->second;
            if (auto it = opt.params.find("CR"); it != opt.params.end())
              de.crossover = it->second;
            r = differential_evolution(f, dim, budget, seed, de);
          }
          auto [defined, threshold] = thresholds[f.index];
          r.success_defined = defined;
          r.threshold = threshold;
          r.success = defined && r.suppressed_value <= threshold;
          out.runs.push_back(std::move(r));
        }
      }
    }
  }

  // per-function x optimizer success summary
  std::map<std::pair<int, std::string>, std::pair<int, int>> agg;  // (success, defined-total)
  for (const RunResult& r : out.runs) {
    if (!r.success_defined) continue;
    auto& a = agg[{r.fn, r.optimizer}];
    a.second++;
    if (r.success) a.first++;
  }
  std::string table = "fn optimizer success_rate\n";
  for (const auto& [k, v] : agg) {
    table += "f" + std::to_string(k.first) + " " + k.second + " " + std::to_string(v.first) +
             "/" + std::to_string(v.second) + "\n";
  }
  out.summary_table = table;
  return out;
}

std::string results_json(const std::vector<RunResult>& runs) {
  ordered_json arr = ordered_json::array();
  for (const RunResult& r : runs) {
    ordered_json j;
    j["fn"] = r.fn;
    j["optimizer"] = r.optimizer;
    j["dim"] = r.dimension;
    j["seed"] = r.seed;
    j["best_point"] = r.best_point;
    j["best_value"] = r.best_value;
    j["suppressed_value"] = r.suppressed_value;
    j["evals"] = r.evaluations_used;
    if (r.success_defined) {
      j["threshold"] = r.threshold;
      j["success"] = r.success;
    } else {
      j["threshold"] = nullptr;
      j["success"] = nullptr;
    }
    ordered_json traj = ordered_json::array();
    for (const TrajectoryPoint& t : r.trajectory)
      traj.push_back(ordered_json::array({t.evaluations, t.best_value}));
    j["trajectory"] = traj;
    if (!r.flag.empty()) j["flag"] = r.flag;
    arr.push_back(j);
  }
  return arr.dump() + "\n";
}

std::string results_csv(const std::vector<RunResult>& runs) {
  std::string out = "fn,optimizer,dim,seed,best_value,evals,success\n";
  for (const RunResult& r : runs) {
    out += std::to_string(r.fn);
    out += ',';
    out += r.optimizer;
    out += ',';
    out += std::to_string(r.dimension);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += format_double(r.best_value);
    out += ',';
    out += std::to_string(r.evaluations_used);
    out += ',';
    out += r.success_defined ? (r.success ? "1" : "0") : "";
    out += '\n';
  }
  return out;
}

}  // namespace bench
