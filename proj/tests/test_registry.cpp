#include <set>

#include "core/registry.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bench;

TEST_CASE("catalog holds exactly 175 entries with contiguous indices") {
  const Catalog& cat = catalog();
  REQUIRE(cat.size() == 175);
  std::set<std::string> slugs;
  for (int i = 1; i <= 175; ++i) {
    const FunctionSpec& f = cat.by_index(i);
    CHECK(f.index == i);
    CHECK(slugs.insert(f.slug).second);
    CHECK(f.eval != nullptr);
  }
}

TEST_CASE("lookup by slug, index and string key") {
  const Catalog& cat = catalog();
  const FunctionSpec& sphere = cat.lookup("sphere");
  CHECK(sphere.index == 137);
  CHECK(sphere.flags.separability == Separability::Separable);
  CHECK(sphere.flags.scalability == ScalabilityFlag::Scalable);

  const FunctionSpec& ackley = cat.by_index(1);
  CHECK(ackley.name == "Ackley 1");
  CHECK(ackley.bounds.lower == -35);
  CHECK(ackley.bounds.upper == 35);
  CHECK(&cat.lookup("1") == &ackley);

  CHECK_THROWS_AS(cat.lookup("no-such-fn"), Error);
  try {
    cat.lookup("no-such-fn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFunction);
  }
  CHECK_THROWS_AS(cat.by_index(0), Error);
  CHECK_THROWS_AS(cat.by_index(176), Error);
}

TEST_CASE("filter by flags and dimension") {
  const Catalog& cat = catalog();

  FilterCriteria step_family;
  step_family.modality = Modality::Unimodal;
  step_family.separability = Separability::Separable;
  step_family.continuity = Continuity::Discontinuous;
  std::set<int> got;
  for (const FunctionSpec* f : cat.filter(step_family)) got.insert(f->index);
  for (int fn : {138, 139, 140, 141}) CHECK(got.count(fn) == 1);

  FilterCriteria fixed2;
  fixed2.fixed_dimension = 2;
  bool has_rosenbrock = false, has_beale = false;
  for (const FunctionSpec* f : cat.filter(fixed2)) {
    if (f->index == 105) has_rosenbrock = true;
    if (f->index == 10) has_beale = true;
  }
  CHECK_FALSE(has_rosenbrock);  // Rosenbrock is scalable, not Fixed(2)
  CHECK(has_beale);

  CHECK(cat.filter(FilterCriteria{}).size() == 175);
}

TEST_CASE("catalog export is deterministic and complete") {
  const Catalog& cat = catalog();
  std::string a = cat.export_catalog("json");
  std::string b = cat.export_catalog("json");
  CHECK(a == b);

  auto doc = nlohmann::ordered_json::parse(a);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 175);
  std::vector<std::string> keys;
  for (auto it = doc[0].begin(); it != doc[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"index", "slug", "name", "dimension", "bounds",
                                         "flags", "optima", "stochastic", "note"});

  const auto& trid6 = doc[149];
  CHECK(trid6["index"] == 150);
  CHECK(trid6["dimension"]["n"] == 6);
  CHECK(trid6["optima"][0]["value"] == -50.0);

  std::string csv = cat.export_catalog("csv");
  CHECK(csv == cat.export_catalog("csv"));
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 176);  // header + 175 rows

  CHECK_THROWS_AS(cat.export_catalog("xml"), Error);
}

TEST_CASE("transcription properties") {
  const Catalog& cat = catalog();
  for (const FunctionSpec& f : cat.entries()) {
    CAPTURE(f.slug);
    CHECK(f.stochastic == (f.index == 100 || f.index == 169));
    int bound_coords = f.bounds.uniform ? 1 : static_cast<int>(f.bounds.coords.size());
    for (int i = 0; i < bound_coords; ++i) CHECK(f.bounds.lower_at(i) < f.bounds.upper_at(i));
    // every concrete optimum location lies inside or on the boundary of the box
    for (const KnownOptimum& o : f.optima) {
      for (const auto& p : o.locations) {
        for (size_t i = 0; i < p.size(); ++i) {
          CHECK(p[i] >= f.bounds.lower_at(static_cast<int>(i)) - 1e-12);
          CHECK(p[i] <= f.bounds.upper_at(static_cast<int>(i)) + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("header quirks stay transcribed, not repaired") {
  const Catalog& cat = catalog();
  CHECK(cat.by_index(133).flags.separability == Separability::Unstated);  // "Separable?"
  CHECK(cat.by_index(137).flags.modality == Modality::Multimodal);
  CHECK(cat.by_index(34).flags.separability == Separability::PartiallySeparable);
  CHECK(cat.by_index(52).flags.differentiability == Differentiability::Unstated);
  CHECK(cat.by_index(52).flags.modality == Modality::Unstated);
  CHECK(cat.by_index(90).flags.continuity == Continuity::Unstated);  // "(Separable)" only
  // the duplicated items stay distinct entries
  CHECK(cat.by_index(125).name == cat.by_index(126).name);
  CHECK(cat.by_index(126).note.find("duplicate") != std::string::npos);
  CHECK(cat.by_index(14).name == "Biggs EXP5");
  CHECK(cat.by_index(15).slug == "biggs-exp6");
}

TEST_CASE("dimension rules") {
  const Catalog& cat = catalog();
  const DimensionRule& powell = cat.by_index(91).dimension;
  CHECK(powell.accepts(4));
  CHECK(powell.accepts(8));
  CHECK_FALSE(powell.accepts(6));
  CHECK_FALSE(powell.accepts(2));

  const DimensionRule& langerman = cat.by_index(68).dimension;
  CHECK(langerman.accepts(10));
  CHECK_FALSE(langerman.accepts(11));

  CHECK(cat.by_index(105).dimension.accepts(7));
  CHECK_FALSE(cat.by_index(105).dimension.accepts(1));
  CHECK(cat.by_index(10).dimension.audit_dimension() == 2);
  CHECK(cat.by_index(88).dimension.audit_dimension() == 10);
  CHECK(cat.by_index(161).dimension.audit_dimension() == 6);
}
