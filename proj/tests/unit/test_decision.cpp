#include <doctest.h>

#include "regproj/corpus.hpp"
#include "regproj/curve_catalog.hpp"
#include "regproj/decision.hpp"
#include "support.hpp"

using namespace regproj;

namespace {

CycleSubgraph cycle_of(const Projection& p, std::initializer_list<std::pair<const char*, bool>> steps) {
  std::vector<OrientedEdge> walk;
  for (auto [name, forward] : steps) walk.push_back({*p.graph().find_edge(name), forward});
  return CycleSubgraph(p.graph(), walk);
}

int count_one_sided(const Projection& p, const CycleSubgraph& c) {
  int n = 0;
  for (const auto& d : p.double_points())
    n += c.contains_edge(d.passages[0].edge) != c.contains_edge(d.passages[1].edge);
  return n;
}

std::size_t piece_count(const RegionDecomposition& r) {
  std::size_t n = r.unlocated.size();
  for (const auto& region : r.regions) n += region.pieces.size();
  return n;
}

}  // namespace

TEST_CASE("double point types") {
  const Projection cube = load_gpd(support::fixture("cube_knotted.gpd")).projection;
  for (auto t : double_point_types(cube)) CHECK(t == DoublePointType::TypeD);
  CHECK(type_census(cube).d == 3);

  const Projection loop = load_gpd(support::fixture("figure_eight.gpd")).projection;
  CHECK(double_point_type(loop, 0) == DoublePointType::TypeS);

  const Projection theta = load_gpd(support::fixture("theta_type_a.gpd")).projection;
  CHECK(double_point_type(theta, 0) == DoublePointType::TypeA);

  const Projection pieces = load_gpd(support::fixture("three_pieces.gpd")).projection;
  for (auto t : double_point_types(pieces)) CHECK(t == DoublePointType::TypeA);
}

TEST_CASE("census sums to the crossing number") {
  for (GraphFamily f : all_families())
    for (const auto& p : generate_corpus(f, 2)) {
      const TypeCensus c = type_census(p);
      CHECK(c.s + c.a + c.d == p.crossing_number());
    }
}

TEST_CASE("the cube projection is knotted") {
  const Projection cube = load_gpd(support::fixture("cube_knotted.gpd")).projection;
  const DecisionReport r = projection_knotted(cube);
  CHECK(r.knotted);
  CHECK(r.witness.empty());
  REQUIRE(r.lifts.size() == 8);
  for (const auto& v : r.lifts) {
    CHECK_FALSE(v.trivial);
    bool hopf = false;
    for (const auto& e : v.nontrivial) hopf |= e.link_class.kind == LinkClass::Kind::Hopf;
    CHECK(hopf);
  }
}

TEST_CASE("refusals") {
  const Projection nonplanar = load_gpd(support::fixture("nonplanar_pair.gpd")).projection;
  CHECK_THROWS_WITH_AS(projection_knotted(nonplanar), "planarity required", DecisionError);
  const auto p_nonplanar = std::make_shared<const Projection>(nonplanar);
  CHECK_THROWS_WITH_AS(lift_trivial(enumerate_lifts(p_nonplanar).front()), "planarity required", DecisionError);

  const Projection long_handcuff = load_gpd(support::fixture("handcuff_four.gpd")).projection;
  CHECK_THROWS_WITH_AS(projection_knotted(long_handcuff), "out of theorem range", DecisionError);
  const auto p_long = std::make_shared<const Projection>(long_handcuff);
  const auto lifts = enumerate_lifts(p_long);
  CHECK_THROWS_WITH_AS(totally_free(lifts.front()), "out of theorem range", DecisionError);
  bool unclassified = false;
  for (const auto& v : analyze_lifts(long_handcuff))
    for (const auto& k : v.classes) unclassified |= k.kind == LinkClass::Kind::Unclassified;
  CHECK(unclassified);
}

TEST_CASE("regions of an embedded cycle") {
  const Projection theta = load_gpd(support::fixture("theta_embedded.gpd")).projection;
  const auto cs = cycles(theta.graph());
  const RegionDecomposition r = regions_of_cycle(theta, cs.front());
  CHECK(r.regions.size() == 2);
  int holding = 0;
  for (const auto& region : r.regions) holding += !region.pieces.empty();
  CHECK(holding == 1);
  CHECK(r.crossing_edges.empty());
}

TEST_CASE("regions of a figure-eight cycle") {
  const Projection loop = load_gpd(support::fixture("figure_eight.gpd")).projection;
  const RegionDecomposition r = regions_of_cycle(loop, cycles(loop.graph()).front());
  CHECK(r.regions.size() == 3);
  CHECK(piece_count(r) == 0);
}

TEST_CASE("regions of the three-piece configuration") {
  const Projection p = load_gpd(support::fixture("three_pieces.gpd")).projection;
  const CycleSubgraph gamma = cycle_of(p, {{"g1", true}, {"g2", true}});
  const RegionDecomposition r = regions_of_cycle(p, gamma);
  REQUIRE(r.regions.size() == 3);
  for (const auto& region : r.regions) CHECK(region.pieces.size() == 1);
  CHECK(r.unlocated.empty());
  CHECK(r.crossing_edges.size() == 2);
  std::set<int> seen;
  for (const auto& region : r.regions)
    for (const auto& piece : region.pieces)
      for (EdgeId e : piece.edges) {
        CHECK_FALSE(gamma.contains_edge(e));
        CHECK(seen.insert(e.value).second);
      }
}

TEST_CASE("regions partition the complement across the corpus") {
  for (GraphFamily f : {GraphFamily::Theta, GraphFamily::K4, GraphFamily::Handcuff})
    for (const auto& p : generate_corpus(f, 2))
      for (const auto& c : cycles(p.graph())) {
        const RegionDecomposition r = regions_of_cycle(p, c);
        CHECK(r.regions.size() == faces(r.cycle_projection).size());
        std::set<int> boundary;
        for (const auto& region : r.regions)
          for (int dart : region.boundary) CHECK(boundary.insert(dart).second);
        CHECK(static_cast<int>(boundary.size()) == r.cycle_projection.dart_count());
      }
}

TEST_CASE("interferency") {
  const Projection loop = load_gpd(support::fixture("figure_eight.gpd")).projection;
  CHECK(interferency(loop, cycles(loop.graph()).front()) == 0);

  const Projection theta = load_gpd(support::fixture("theta_type_a.gpd")).projection;
  int ones = 0;
  for (const auto& c : cycles(theta.graph())) ones += interferency(theta, c) == 1;
  CHECK(ones > 0);

  const Projection k4 = load_gpd(support::fixture("k4_interferency3.gpd")).projection;
  const CycleSubgraph gamma = cycle_of(k4, {{"e12", true}, {"e23", true}, {"e13", false}});
  CHECK(interferency(k4, gamma) == 3);
  std::set<int> crossing;
  for (const auto& d : k4.double_points())
    for (const auto& q : d.passages)
      if (!gamma.contains_edge(q.edge)) crossing.insert(q.edge.value);
  CHECK(crossing.size() == 3);

  for (GraphFamily f : all_families())
    for (const auto& p : generate_corpus(f, 2))
      for (const auto& c : cycles(p.graph())) CHECK(interferency(p, c) == count_one_sided(p, c));
}

TEST_CASE("disk certificate") {
  const Projection shadow = load_gpd(support::fixture("trefoil_shadow.gpd")).projection;
  CHECK_FALSE(disk_certificate(shadow, cycles(shadow.graph()).front()));

  const Projection theta = load_gpd(support::fixture("theta_embedded.gpd")).projection;
  for (const auto& c : cycles(theta.graph())) CHECK(disk_certificate(theta, c));

  int rejected_by_count = 0;
  for (GraphFamily f : {GraphFamily::Theta, GraphFamily::K4, GraphFamily::Handcuff})
    for (const auto& p : generate_corpus(f, 2))
      for (const auto& c : cycles(p.graph())) {
        const Projection alone = restrict_projection(p, {c});
        const bool want = is_trivial_circle_projection(alone) && interferency(p, c) <= 1;
        CHECK(disk_certificate(p, c) == want);
        if (interferency(p, c) == 2) {
          CHECK_FALSE(disk_certificate(p, c));
          ++rejected_by_count;
        }
      }
  CHECK(rejected_by_count > 0);
}

TEST_CASE("lift triviality") {
  const auto circle = std::make_shared<const Projection>(circle_from_gauss("", {}));
  const Lift plain = enumerate_lifts(circle).front();
  CHECK(totally_free(plain));
  CHECK(lift_trivial(plain));

  const auto shadow = support::load_shared("trefoil_shadow.gpd");
  int trivial = 0, knotted = 0;
  for (const auto& f : enumerate_lifts(shadow)) {
    const bool alternating = support::brute_tricolorings(support::to_pd(restrict(f, cycles(shadow->graph())))) == 9;
    CHECK(lift_trivial(f) == !alternating);
    (alternating ? knotted : trivial)++;
  }
  CHECK(knotted == 2);
  CHECK(trivial == 6);
}

TEST_CASE("decision report is consistent") {
  for (GraphFamily f : {GraphFamily::Theta, GraphFamily::Handcuff, GraphFamily::K4})
    for (const auto& p : generate_corpus(f, 2)) {
      const DecisionReport r = projection_knotted(p);
      bool any = false;
      std::string first;
      for (const auto& v : r.lifts) {
        if (v.trivial && first.empty()) first = v.bits;
        any |= v.trivial;
        CHECK(v.trivial == v.totally_free);
        CHECK(v.trivial == v.nontrivial.empty());
      }
      CHECK(r.knotted == !any);
      CHECK(r.witness == first);
    }
}

TEST_CASE("threaded analysis matches the serial one") {
  for (const auto& name : {"cube_knotted.gpd", "handcuff_four.gpd", "k4_smoothing.gpd"}) {
    const Projection p = load_gpd(support::fixture(name)).projection;
    const auto one = analyze_lifts(p, 1);
    const auto many = analyze_lifts(p, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].bits == many[i].bits);
      CHECK(one[i].classes == many[i].classes);
      CHECK(one[i].trivial == many[i].trivial);
    }
  }
}

TEST_CASE("Type-A smoothing") {
  const Projection theta = load_gpd(support::fixture("theta_type_a.gpd")).projection;
  const Projection flat = smooth_type_a(theta, 0);
  CHECK(validate(flat).empty());
  CHECK(flat.crossing_number() == 0);
  CHECK(flat.graph().edge_count() == suppress_degree_two(theta).graph().edge_count());

  const Projection k4 = load_gpd(support::fixture("k4_smoothing.gpd")).projection;
  int smoothed = 0;
  for (int d = 0; d < k4.crossing_number(); ++d) {
    if (double_point_type(k4, d) != DoublePointType::TypeA) continue;
    const Projection q = smooth_type_a(k4, d);
    CHECK(validate(q).empty());
    CHECK(q.crossing_number() == 2);
    CHECK(cycles(q.graph()).size() == 7);
    ++smoothed;
  }
  CHECK(smoothed == 1);

  const Projection cube = load_gpd(support::fixture("cube_knotted.gpd")).projection;
  CHECK_THROWS_WITH_AS(smooth_type_a(cube, 0), "type mismatch", DecisionError);
}
