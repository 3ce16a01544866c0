#include "core/registry.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "core/textio.hpp"
#include "json.hpp"

namespace bench {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Continuity v) {
  switch (v) {
    case Continuity::Continuous: return "continuous";
    case Continuity::Discontinuous: return "discontinuous";
    default: return "unstated";
  }
}
std::string to_string(Differentiability v) {
  switch (v) {
    case Differentiability::Differentiable: return "differentiable";
    case Differentiability::NonDifferentiable: return "non-differentiable";
    default: return "unstated";
  }
}
std::string to_string(Separability v) {
  switch (v) {
    case Separability::Separable: return "separable";
    case Separability::PartiallySeparable: return "partially-separable";
    case Separability::NonSeparable: return "non-separable";
    default: return "unstated";
  }
}
std::string to_string(ScalabilityFlag v) {
  switch (v) {
    case ScalabilityFlag::Scalable: return "scalable";
    case ScalabilityFlag::NonScalable: return "non-scalable";
    default: return "unstated";
  }
}
std::string to_string(Modality v) {
  switch (v) {
    case Modality::Unimodal: return "unimodal";
    case Modality::Multimodal: return "multimodal";
    default: return "unstated";
  }
}
std::string to_string(OptimumStatus v) {
  switch (v) {
    case OptimumStatus::PaperClaimed: return "paper-claimed";
    case OptimumStatus::Verified: return "verified";
    case OptimumStatus::Corrected: return "corrected";
    case OptimumStatus::Discrepant: return "discrepant";
    default: return "unstated";
  }
}

PropertyFlags parse_flags(const std::string& header) {
  PropertyFlags flags;
  size_t pos = 0;
  while (pos <= header.size()) {
    size_t comma = header.find(',', pos);
    std::string tok = header.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? header.size() + 1 : comma + 1;
    // trim + lowercase
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    std::transform(tok.begin(), tok.end(), tok.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    if (tok == "continuous") flags.continuity = Continuity::Continuous;
    else if (tok == "discontinuous") flags.continuity = Continuity::Discontinuous;
    else if (tok == "differentiable") flags.differentiability = Differentiability::Differentiable;
    else if (tok == "non-differentiable") flags.differentiability = Differentiability::NonDifferentiable;
    else if (tok == "separable") flags.separability = Separability::Separable;
    else if (tok == "non-separable") flags.separability = Separability::NonSeparable;
    else if (tok == "partially-separable") flags.separability = Separability::PartiallySeparable;
    else if (tok == "separable?") flags.separability = Separability::Unstated;
    else if (tok == "scalable") flags.scalability = ScalabilityFlag::Scalable;
    else if (tok == "non-scalable") flags.scalability = ScalabilityFlag::NonScalable;
    else if (tok == "unimodal") flags.modality = Modality::Unimodal;
    else if (tok == "multimodal") flags.modality = Modality::Multimodal;
    else throw std::logic_error("unknown property token: '" + tok + "'");
  }
  return flags;
}

Catalog::Catalog() {
  entries_.reserve(175);
  CatalogBuilder b(entries_);
  register_functions_a(b);
  register_functions_b(b);
  register_functions_c(b);

  if (entries_.size() != 175)
    throw std::logic_error("catalog must hold exactly 175 entries, got " +
                           std::to_string(entries_.size()));
  for (size_t i = 0; i < entries_.size(); ++i) {
    const FunctionSpec& f = entries_[i];
    if (f.index != static_cast<int>(i) + 1)
      throw std::logic_error("catalog index gap at " + std::to_string(i + 1));
    if (!f.eval) throw std::logic_error(f.slug + ": missing evaluator");
    if (f.stochastic != (f.index == 100 || f.index == 169))
      throw std::logic_error(f.slug + ": stochastic flag mismatch");
    int dim_for_bounds = f.bounds.uniform ? 1 : static_cast<int>(f.bounds.coords.size());
    for (int c = 0; c < dim_for_bounds; ++c)
      if (!(f.bounds.lower_at(c) < f.bounds.upper_at(c)))
        throw std::logic_error(f.slug + ": empty bounds interval");
    if (!slug_to_index_.emplace(f.slug, f.index).second)
      throw std::logic_error("duplicate slug: " + f.slug);
  }
}

const FunctionSpec& Catalog::by_index(int index) const {
  if (index < 1 || index > size())
    throw Error(ErrorCode::UnknownFunction, "no function with index " + std::to_string(index));
  return entries_[static_cast<size_t>(index) - 1];
}

const FunctionSpec& Catalog::by_slug(const std::string& slug) const {
  auto it = slug_to_index_.find(slug);
  if (it == slug_to_index_.end())
    throw Error(ErrorCode::UnknownFunction, "no function with slug '" + slug + "'");
  return entries_[static_cast<size_t>(it->second) - 1];
}

const FunctionSpec& Catalog::lookup(const std::string& key) const {
  if (!key.empty() && std::all_of(key.begin(), key.end(),
                                  [](unsigned char c) { return std::isdigit(c); })) {
    try {
      return by_index(std::stoi(key));
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::UnknownFunction, "no function with index " + key);
    }
  }
  return by_slug(key);
}

std::vector<const FunctionSpec*> Catalog::filter(const FilterCriteria& c) const {
  std::vector<const FunctionSpec*> out;
  for (const FunctionSpec& f : entries_) {
    if (c.continuity && f.flags.continuity != *c.continuity) continue;
    if (c.differentiability && f.flags.differentiability != *c.differentiability) continue;
    if (c.separability && f.flags.separability != *c.separability) continue;
    if (c.scalability && f.flags.scalability != *c.scalability) continue;
    if (c.modality && f.flags.modality != *c.modality) continue;
    if (c.fixed_dimension &&
        !(f.dimension.kind == DimensionRule::Kind::Fixed && f.dimension.fixed_n == *c.fixed_dimension))
      continue;
    out.push_back(&f);
  }
  return out;
}

namespace {

ordered_json dimension_json(const DimensionRule& d) {
  ordered_json j;
  if (d.kind == DimensionRule::Kind::Fixed) {
    j["kind"] = "fixed";
    j["n"] = d.fixed_n;
  } else {
    j["kind"] = "scalable";
    j["default"] = d.default_n;
    j["min"] = d.min_n;
    if (d.max_n > 0) j["max"] = d.max_n;
    if (d.multiple_of != 1) j["multiple_of"] = d.multiple_of;
  }
  return j;
}

ordered_json bounds_json(const Bounds& b) {
  ordered_json j;
  if (b.uniform) {
    j["kind"] = "uniform";
    j["lower"] = b.lower;
    j["upper"] = b.upper;
  } else {
    j["kind"] = "per-coordinate";
    ordered_json arr = ordered_json::array();
    for (const auto& [lo, hi] : b.coords) arr.push_back(ordered_json::array({lo, hi}));
    j["coords"] = arr;
  }
  return j;
}

ordered_json flags_json(const PropertyFlags& f) {
  ordered_json j;
  j["continuity"] = to_string(f.continuity);
  j["differentiability"] = to_string(f.differentiability);
  j["separability"] = to_string(f.separability);
  j["scalability"] = to_string(f.scalability);
  j["modality"] = to_string(f.modality);
  return j;
}

ordered_json optima_json(const std::vector<KnownOptimum>& optima) {
  ordered_json arr = ordered_json::array();
  for (const KnownOptimum& o : optima) {
    ordered_json j;
    ordered_json locs = ordered_json::array();
    for (const auto& p : o.locations) locs.push_back(p);
    j["locations"] = locs;
    j["family"] = o.family;
    if (o.has_value)
      j["value"] = o.value;
    else
      j["value"] = nullptr;
    j["tolerance"] = o.value_tolerance;
    j["status"] = to_string(o.status);
    j["note"] = o.note;
    arr.push_back(j);
  }
  return arr;
}

ordered_json record_json(const FunctionSpec& f) {
  ordered_json j;
  j["index"] = f.index;
  j["slug"] = f.slug;
  j["name"] = f.name;
  j["dimension"] = dimension_json(f.dimension);
  j["bounds"] = bounds_json(f.bounds);
  j["flags"] = flags_json(f.flags);
  j["optima"] = optima_json(f.optima);
  j["stochastic"] = f.stochastic;
  j["note"] = f.note;
  return j;
}

}  // namespace

std::string Catalog::spec_json(const FunctionSpec& f) const { return record_json(f).dump(); }

std::string Catalog::export_catalog(const std::string& format) const {
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const FunctionSpec& f : entries_) arr.push_back(record_json(f));
    return arr.dump() + "\n";
  }
  if (format == "csv") {
    std::string out = "index,slug,name,dimension,bounds,flags,optima,stochastic,note\n";
    for (const FunctionSpec& f : entries_) {
      ordered_json r = record_json(f);
      out += std::to_string(f.index);
      out += ',';
      out += csv_quote(f.slug);
      out += ',';
      out += csv_quote(f.name);
      out += ',';
      out += csv_quote(r["dimension"].dump());
      out += ',';
      out += csv_quote(r["bounds"].dump());
      out += ',';
      out += csv_quote(r["flags"].dump());
      out += ',';
      out += csv_quote(r["optima"].dump());
      out += ',';
      out += f.stochastic ? "true" : "false";
      out += ',';
      out += csv_quote(f.note);
      out += '\n';
    }
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown export format '" + format + "'");
}

const Catalog& catalog() {
  static const Catalog instance;
  return instance;
}

}  // namespace bench
