#include <doctest.h>

#include "regproj/corpus.hpp"
#include "regproj/invariants.hpp"
#include "regproj/lift.hpp"
#include "support.hpp"

using namespace regproj;

namespace {

int self_points(const Projection& p, const CycleSubgraph& c) {
  int n = 0;
  for (const auto& d : p.double_points())
    n += c.contains_edge(d.passages[0].edge) && c.contains_edge(d.passages[1].edge);
  return n;
}

int mutual_points(const Projection& p, const CycleSubgraph& a, const CycleSubgraph& b) {
  int n = 0;
  for (const auto& d : p.double_points()) {
    const EdgeId x = d.passages[0].edge, y = d.passages[1].edge;
    n += (a.contains_edge(x) && b.contains_edge(y)) || (b.contains_edge(x) && a.contains_edge(y));
  }
  return n;
}

}  // namespace

TEST_CASE("lift counts") {
  for (const auto& name : support::fixture_names()) {
    const auto p = support::load_shared(name);
    const auto lifts = enumerate_lifts(p);
    CHECK(lifts.size() == (std::size_t{1} << p->crossing_number()));
    std::set<std::string> bits;
    for (const auto& f : lifts) bits.insert(f.bits());
    CHECK(bits.size() == lifts.size());
    CHECK(std::is_sorted(lifts.begin(), lifts.end(),
                         [](const Lift& a, const Lift& b) { return a.bits() < b.bits(); }));
  }
  CHECK(enumerate_lifts(support::load_shared("theta_embedded.gpd")).size() == 1);
  CHECK(enumerate_lifts(support::load_shared("cube_knotted.gpd")).size() == 8);
}

TEST_CASE("constituent counts") {
  auto count = [](GraphFamily f) {
    const auto p = std::make_shared<const Projection>(generate_corpus(f, 0).front());
    int knots = 0, links = 0;
    for (const auto& c : constituents(enumerate_lifts(p).front())) (c.cycles.size() == 1 ? knots : links)++;
    return std::pair{knots, links};
  };
  CHECK(count(GraphFamily::Handcuff) == std::pair{2, 1});
  CHECK(count(GraphFamily::Theta) == std::pair{3, 0});
  CHECK(count(GraphFamily::K4) == std::pair{7, 0});
}

TEST_CASE("restriction keeps exactly the selected crossings") {
  for (const auto& name : support::fixture_names()) {
    CAPTURE(name);
    const auto p = support::load_shared(name);
    const auto cs = cycles(p->graph());
    const auto f = enumerate_lifts(p).back();
    for (const auto& c : cs) {
      const LinkDiagram d = restrict(f, {c});
      CHECK(check_diagram(d).empty());
      CHECK(d.component_count == 1);
      CHECK(d.crossing_count() == self_points(*p, c));
    }
    for (const auto& [i, j] : disjoint_cycle_pairs(cs)) {
      const LinkDiagram d = restrict(f, {cs[i], cs[j]});
      CHECK(check_diagram(d).empty());
      CHECK(d.component_count == 2);
      CHECK(d.crossing_count() ==
            self_points(*p, cs[i]) + self_points(*p, cs[j]) + mutual_points(*p, cs[i], cs[j]));
    }
  }
}

TEST_CASE("restriction commutes with lifting") {
  for (const auto& name : support::fixture_names()) {
    CAPTURE(name);
    const auto p = support::load_shared(name);
    const auto cs = cycles(p->graph());
    std::vector<std::vector<CycleSubgraph>> selections;
    for (const auto& c : cs) selections.push_back({c});
    for (const auto& [i, j] : disjoint_cycle_pairs(cs)) selections.push_back({cs[i], cs[j]});
    for (const auto& sel : selections) {
      const auto q = std::make_shared<const Projection>(restrict_projection(*p, sel));
      const auto qcycles = cycles(q->graph());
      for (const auto& f : enumerate_lifts(p)) {
        const Lift g = restrict_lift(f, sel);
        CHECK(*g.projection == *q);
        std::vector<CycleSubgraph> mapped;
        for (const auto& c : qcycles) mapped.push_back(c);
        if (mapped.size() != sel.size()) continue;
        CHECK(restrict(g, mapped).crossings.size() == restrict(f, sel).crossings.size());
        CHECK(classify_small_link(restrict(g, mapped)).unoriented() ==
              classify_small_link(restrict(f, sel)).unoriented());
        CHECK(normalized_bracket(restrict(g, mapped)) == normalized_bracket(restrict(f, sel)));
      }
    }
  }
}

TEST_CASE("overlapping cycles are rejected") {
  const auto p = support::load_shared("theta_embedded.gpd");
  const auto cs = cycles(p->graph());
  CHECK_THROWS_WITH_AS(restrict(enumerate_lifts(p).front(), {cs[0], cs[1]}), "overlapping components",
                       RestrictError);
}

TEST_CASE("non-planar fixture: the disjoint pair restricts to two crossings") {
  const auto p = support::load_shared("nonplanar_pair.gpd");
  const auto cs = cycles(p->graph());
  const auto pairs = disjoint_cycle_pairs(cs);
  int two_crossing = 0;
  for (const auto& f : enumerate_lifts(p))
    for (const auto& [i, j] : pairs) {
      const LinkDiagram d = restrict(f, {cs[i], cs[j]});
      if (d.crossing_count() == 2) ++two_crossing;
    }
  CHECK(two_crossing >= 4);
}

TEST_CASE("trefoil shadow lift restricted to its circle keeps all three crossings") {
  const auto p = support::load_shared("trefoil_shadow.gpd");
  for (const auto& f : enumerate_lifts(p)) CHECK(restrict(f, cycles(p->graph())).crossing_count() == 3);
}
