#include <doctest.h>

#include <fstream>
#include <map>
#include <random>

#include <nlohmann/json.hpp>

#include "regproj/curve_catalog.hpp"
#include "regproj/invariants.hpp"
#include "regproj/lift.hpp"
#include "regproj/report.hpp"
#include "support.hpp"

using namespace regproj;

namespace {

std::map<int, int> by_crossing(const CurveCatalog& c) {
  std::map<int, int> out;
  for (const auto& k : c.classes) ++out[k.crossing_number];
  return out;
}

std::vector<LinkClass> lift_classes(const Projection& q) {
  std::vector<LinkClass> out;
  const auto p = std::make_shared<const Projection>(q);
  for (const auto& f : enumerate_lifts(p)) out.push_back(classify_small_link(restrict(f, cycles(q.graph()))));
  return out;
}

}  // namespace

TEST_CASE("ten classes up to three double points") {
  const CurveCatalog& c = standard_catalog();
  CHECK(c.classes.size() == 10);
  CHECK(by_crossing(c) == std::map<int, int>{{0, 1}, {1, 1}, {2, 2}, {3, 6}});
  int shadows = 0;
  for (const auto& k : c.classes) shadows += k.is_trefoil_shadow;
  CHECK(shadows == 1);
  CHECK(enumerate_classes(0, c.mirrors).classes.size() == 1);
  CHECK(enumerate_classes(1, c.mirrors).classes.size() == 2);
}

TEST_CASE("both mirror conventions are enumerated") {
  const auto identified = enumerate_classes(3, MirrorConvention::Identified);
  const auto distinct = enumerate_classes(3, MirrorConvention::Distinct);
  CHECK(distinct.classes.size() >= identified.classes.size());
  CHECK((identified.classes.size() == 10 || distinct.classes.size() == 10));
  CHECK(standard_catalog().classes.size() == 10);
}

TEST_CASE("out of catalog range") {
  CHECK_THROWS_WITH_AS(enumerate_classes(4, MirrorConvention::Identified), "out of catalog range", std::out_of_range);
}

TEST_CASE("known curves land in the expected class") {
  const CurveCatalog& c = standard_catalog();
  const auto* circle = find_class(c, circle_from_gauss("", {}));
  REQUIRE(circle);
  CHECK(circle->id == "C0");
  const auto* eight = find_class(c, load_gpd(support::fixture("figure_eight.gpd")).projection);
  REQUIRE(eight);
  CHECK(eight->id == "C1");
  const Projection shadow = load_gpd(support::fixture("trefoil_shadow.gpd")).projection;
  const auto* t = find_class(c, shadow);
  REQUIRE(t);
  CHECK(t->is_trefoil_shadow);
  CHECK_FALSE(is_trivial_circle_projection(shadow));
  CHECK(is_trivial_circle_projection(circle_from_gauss("", {})));
  CHECK_THROWS_AS(canonical_form(load_gpd(support::fixture("theta_embedded.gpd")).projection,
                                 MirrorConvention::Identified),
                  std::invalid_argument);
}

TEST_CASE("lifts of each class classify as expected") {
  for (const auto& k : standard_catalog().classes) {
    CAPTURE(k.id);
    bool trefoil = false;
    for (const auto& cls : lift_classes(k.representative)) {
      CHECK((cls.kind == LinkClass::Kind::Unknot || cls.kind == LinkClass::Kind::Trefoil));
      trefoil |= cls.kind == LinkClass::Kind::Trefoil;
    }
    CHECK(trefoil == k.is_trefoil_shadow);
    CHECK(is_trivial_circle_projection(k.representative) == !k.is_trefoil_shadow);
  }
}

TEST_CASE("canonical form ignores relabeling") {
  std::mt19937 rng(17);
  for (const auto& k : standard_catalog().classes) {
    const std::string& word = k.gauss_word;
    if (word.empty()) continue;
    std::string symbols;
    for (char ch : word)
      if (symbols.find(ch) == std::string::npos) symbols += ch;
    for (int trial = 0; trial < 6; ++trial) {
      std::string perm = symbols;
      std::shuffle(perm.begin(), perm.end(), rng);
      const std::size_t shift = rng() % word.size();
      std::string w = word.substr(shift) + word.substr(0, shift);
      for (char& ch : w) ch = perm[symbols.find(ch)];
      std::vector<bool> flips(symbols.size());
      for (std::size_t i = 0; i < flips.size(); ++i) flips[i] = rng() % 2;
      const Projection q = circle_from_gauss(w, flips);
      if (!validate(q).empty()) continue;
      const auto* found = find_class(standard_catalog(), q);
      REQUIRE(found);
      CHECK(found->crossing_number == k.crossing_number);
      CHECK(canonical_form(mirror(q), standard_catalog().mirrors) == canonical_form(q, standard_catalog().mirrors));
    }
  }
}

TEST_CASE("shipped catalog matches regeneration") {
  std::ifstream in(std::string(REGPROJ_DATA_DIR) + "/catalog.json");
  REQUIRE(in);
  const nlohmann::json shipped = nlohmann::json::parse(in);
  CHECK(shipped == catalog_report(3).data);
}
