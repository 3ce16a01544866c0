#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace bench {

// Predicates for Catalog::filter. Unset members do not constrain.
struct FilterCriteria {
  std::optional<Continuity> continuity;
  std::optional<Differentiability> differentiability;
  std::optional<Separability> separability;
  std::optional<ScalabilityFlag> scalability;
  std::optional<Modality> modality;
  std::optional<int> fixed_dimension;  // matches Fixed(n) exactly
};

// Immutable catalog of the full function collection. Construction fills all
// entries; afterwards the object is read-only and safe for concurrent use.
class Catalog {
 public:
  Catalog();

  int size() const { return static_cast<int>(entries_.size()); }

  const FunctionSpec& by_index(int index) const;
  const FunctionSpec& by_slug(const std::string& slug) const;
  // Accepts a decimal index or a slug.
  const FunctionSpec& lookup(const std::string& key) const;

  const std::vector<FunctionSpec>& entries() const { return entries_; }

  std::vector<const FunctionSpec*> filter(const FilterCriteria& c) const;

  // Full metadata export; format is "json" or "csv". Deterministic bytes.
  std::string export_catalog(const std::string& format) const;
  // One record in the same schema as the JSON export.
  std::string spec_json(const FunctionSpec& f) const;

 private:
  std::vector<FunctionSpec> entries_;           // ordered by index, 1-based index i at [i-1]
  std::map<std::string, int> slug_to_index_;
};

// Shared instance (the catalog is immutable; one copy suffices).
const Catalog& catalog();

// Registration blocks, one per source file.
class CatalogBuilder {
 public:
  explicit CatalogBuilder(std::vector<FunctionSpec>& out) : out_(out) {}

  FunctionSpec& add(int index, const std::string& slug, const std::string& name) {
    FunctionSpec f;
    f.index = index;
    f.slug = slug;
    f.name = name;
    out_.push_back(std::move(f));
    return out_.back();
  }

 private:
  std::vector<FunctionSpec>& out_;
};

void register_functions_a(CatalogBuilder& b);  // entries 1..60
void register_functions_b(CatalogBuilder& b);  // entries 61..120
void register_functions_c(CatalogBuilder& b);  // entries 121..175

// Helpers used by the registration blocks.
inline KnownOptimum opt_points(std::vector<std::vector<double>> pts, double value, double tol,
                               std::string note = "") {
  KnownOptimum o;
  o.locations = std::move(pts);
  o.has_value = true;
  o.value = value;
  o.value_tolerance = tol;
  o.note = std::move(note);
  return o;
}

inline KnownOptimum opt_value_only(double value, double tol, std::string note = "") {
  KnownOptimum o;
  o.has_value = true;
  o.value = value;
  o.value_tolerance = tol;
  o.note = std::move(note);
  return o;
}

inline KnownOptimum opt_unstated(std::string note = "") {
  KnownOptimum o;
  o.status = OptimumStatus::Unstated;
  o.note = std::move(note);
  return o;
}

}  // namespace bench
