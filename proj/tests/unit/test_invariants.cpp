#include <doctest.h>

#include <random>

#include "regproj/corpus.hpp"
#include "regproj/curve_catalog.hpp"
#include "regproj/invariants.hpp"
#include "regproj/lift.hpp"
#include "regproj/reidemeister.hpp"
#include "support.hpp"

using namespace regproj;
using support::PdCode;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long long, int>> terms) {
  LaurentPoly p;
  for (auto [c, e] : terms) p += LaurentPoly::monomial(c, e);
  return p;
}

std::vector<LinkDiagram> diagrams_of(const Projection& q) {
  std::vector<LinkDiagram> out;
  const auto p = std::make_shared<const Projection>(q);
  for (const auto& f : enumerate_lifts(p))
    for (const auto& c : constituents(f)) out.push_back(c.diagram);
  return out;
}

const std::vector<LinkDiagram>& small_diagrams() {
  static const std::vector<LinkDiagram> pool = [] {
    std::vector<LinkDiagram> out;
    auto add = [&](const Projection& p) {
      for (auto& d : diagrams_of(p)) out.push_back(std::move(d));
    };
    for (const auto& c : standard_catalog().classes) add(c.representative);
    for (const auto& p : generate_corpus(GraphFamily::TwoUnknots, 3)) add(p);
    for (const auto& p : generate_corpus(GraphFamily::Handcuff, 2)) add(p);
    return out;
  }();
  return pool;
}

// The alternating lift of the trefoil shadow, located with the brute-force
// coloring count; `mirrored` switches every crossing.
LinkDiagram trefoil_diagram(bool mirrored) {
  const Projection shadow = load_gpd(support::fixture("trefoil_shadow.gpd")).projection;
  const auto p = std::make_shared<const Projection>(shadow);
  for (const auto& f : enumerate_lifts(p)) {
    const LinkDiagram d = restrict(f, cycles(shadow.graph()));
    if (support::brute_tricolorings(support::to_pd(d)) != 9) continue;
    std::string bits = f.bits();
    if (mirrored)
      for (char& b : bits) b = b == '0' ? '1' : '0';
    return restrict(lift_from_bits(p, bits), cycles(shadow.graph()));
  }
  throw std::logic_error("no alternating lift");
}

const LaurentPoly kTrefoilBracket = poly({{1, -7}, {-1, -3}, {-1, 5}});

}  // namespace

TEST_CASE("PD oracle reproduces textbook brackets") {
  // Standard trefoil and Hopf codes, edges renumbered from 0.
  const PdCode trefoil{{{{0, 4, 1, 3}}, {{2, 0, 3, 5}}, {{4, 2, 5, 1}}}, 6, 0};
  const LaurentPoly t = support::pd_bracket(trefoil);
  CHECK((t == kTrefoilBracket || t == kTrefoilBracket.reflected()));
  CHECK(support::brute_tricolorings(trefoil) == 9);
  const PdCode hopf{{{{3, 0, 2, 1}}, {{1, 2, 0, 3}}}, 4, 0};
  CHECK(support::pd_bracket(hopf) == poly({{-1, 4}, {-1, -4}}));
  CHECK(support::brute_tricolorings(hopf) == 3);
}

TEST_CASE("writhe examples") {
  const LinkDiagram circle = diagrams_of(circle_from_gauss("", {})).front();
  CHECK(writhe(circle) == 0);
  const auto kink = add_kink_free(circle, 0, 0);
  REQUIRE(kink);
  CHECK(std::abs(writhe(*kink)) == 1);
  CHECK(writhe(*add_kink_free(circle, 0, 1)) == -writhe(*kink));
  CHECK(std::abs(writhe(trefoil_diagram(false))) == 3);
}

TEST_CASE("linking number examples") {
  const Projection split = generate_corpus(GraphFamily::TwoUnknots, 0).front();
  const LinkDiagram none = diagrams_of(split).back();
  REQUIRE(none.component_count == 2);
  CHECK(linking_number(none) == 0);
  int hopf = 0, unlinked = 0;
  for (const auto& p : generate_corpus(GraphFamily::TwoUnknots, 2)) {
    if (p.crossing_number() != 2) continue;
    for (const auto& d : diagrams_of(p)) {
      if (d.component_count != 2) continue;
      int mixed = 0, signs = 0;
      for (const auto& c : d.crossings)
        if (is_mixed(c)) {
          ++mixed;
          signs += crossing_sign(c);
        }
      if (mixed != 2) continue;
      CHECK(linking_number(d) * 2 == signs);
      if (signs == 2) {
        ++hopf;
        CHECK(linking_number(d) == 1);
      }
      if (signs == 0) {
        ++unlinked;
        CHECK(classify_small_link(d) == LinkClass::unlink(2));
      }
    }
  }
  CHECK(hopf > 0);
  CHECK(unlinked > 0);
  CHECK_THROWS_WITH_AS(linking_number(trefoil_diagram(false)), "component count", std::invalid_argument);
}

TEST_CASE("bracket examples") {
  const LinkDiagram circle = diagrams_of(circle_from_gauss("", {})).front();
  CHECK(kauffman_bracket(circle) == LaurentPoly::monomial(1, 0));
  const LaurentPoly kink = kauffman_bracket(*add_kink_free(circle, 0, 0));
  CHECK((kink == LaurentPoly::monomial(-1, 3) || kink == LaurentPoly::monomial(-1, -3)));
  const LaurentPoly t = kauffman_bracket(trefoil_diagram(false));
  CHECK((t == kTrefoilBracket || t == kTrefoilBracket.reflected()));
  CHECK(normalized_bracket(trefoil_diagram(false)) != LaurentPoly::monomial(1, 0));
}

TEST_CASE("bracket and 3-colorings agree with the PD oracles") {
  int checked = 0;
  for (const auto& d : small_diagrams()) {
    const PdCode pd = support::to_pd(d);
    CHECK(kauffman_bracket(d) == support::pd_bracket(pd));
    CHECK(tricolor_count(d) == support::brute_tricolorings(pd));
    ++checked;
  }
  CHECK(checked > 1000);
}

TEST_CASE("oracles agree on randomized larger diagrams") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    LinkDiagram d = small_diagrams()[rng() % small_diagrams().size()];
    for (int step = 0; step < 12; ++step) d = random_move(d, rng, 5);
    const PdCode pd = support::to_pd(d);
    CHECK(kauffman_bracket(d) == support::pd_bracket(pd));
    CHECK(tricolor_count(d) == support::brute_tricolorings(pd));
  }
}

TEST_CASE("3-coloring examples") {
  const LinkDiagram circle = diagrams_of(circle_from_gauss("", {})).front();
  CHECK(tricolor_count(circle) == 3);
  CHECK(tricolor_count(*add_kink_free(circle, 0, 1)) == 3);
  CHECK(tricolor_count(trefoil_diagram(false)) == 9);
}

TEST_CASE("classification examples") {
  const LinkDiagram circle = diagrams_of(circle_from_gauss("", {})).front();
  CHECK(classify_small_link(circle) == LinkClass::unknot());
  const LinkClass t = classify_small_link(trefoil_diagram(false));
  CHECK(t.kind == LinkClass::Kind::Trefoil);
  CHECK(classify_small_link(trefoil_diagram(true)) == LinkClass::trefoil(-t.parameter));

  const auto hopf = std::make_shared<const Projection>(load_gpd(support::fixture("handcuff_hopf.gpd")).projection);
  bool seen = false;
  for (const auto& f : enumerate_lifts(hopf))
    for (const auto& c : constituents(f))
      if (c.diagram.component_count == 2 && linking_number(c.diagram) == 1) {
        CHECK(classify_small_link(c.diagram) == LinkClass::hopf(1));
        CHECK(normalized_bracket(c.diagram) == hopf_polynomial(1));
        seen = true;
      }
  CHECK(seen);

  const auto long_handcuff = std::make_shared<const Projection>(load_gpd(support::fixture("handcuff_four.gpd")).projection);
  for (const auto& f : enumerate_lifts(long_handcuff))
    for (const auto& c : constituents(f))
      if (c.diagram.crossing_count() > 3) CHECK(classify_small_link(c.diagram) == LinkClass::unclassified());
}

TEST_CASE("classification is complete and consistent at three crossings") {
  for (const auto& d : small_diagrams()) {
    if (d.crossing_count() > 3) continue;
    const LinkClass k = classify_small_link(d);
    CHECK(k.kind != LinkClass::Kind::Unclassified);
    if (k.kind == LinkClass::Kind::Trefoil) {
      CHECK(tricolor_count(d) == (d.component_count == 1 ? 9 : 27));
    }
    if (k.kind == LinkClass::Kind::Hopf) CHECK(std::abs(linking_number(d)) == 1);
    if (k.kind == LinkClass::Kind::Unknot) CHECK(normalized_bracket(d) == LaurentPoly::monomial(1, 0));
  }
}

TEST_CASE("mirror images flip chirality and linking sign") {
  for (const auto& d : small_diagrams()) {
    if (d.crossing_count() > 3) continue;
    const LinkClass k = classify_small_link(d);
    const LinkClass switched = classify_small_link(switch_crossings(d));
    const LinkClass reflected = classify_small_link(reflect(d));
    CHECK(switched == reflected);
    if (k.kind == LinkClass::Kind::Hopf || k.kind == LinkClass::Kind::Trefoil) {
      CHECK(switched.kind == k.kind);
      CHECK(switched.parameter == -k.parameter);
    } else {
      CHECK(switched == k);
    }
    CHECK(normalized_bracket(switch_crossings(d)) == normalized_bracket(d).reflected());
  }
}

TEST_CASE("orientation flips do not change the unoriented class") {
  for (const auto& d : small_diagrams()) {
    if (d.crossing_count() > 3) continue;
    const LinkClass k = classify_small_link(d);
    std::vector<bool> flip(d.component_count, false);
    for (int c = 0; c < d.component_count; ++c) {
      flip.assign(d.component_count, false);
      flip[c] = true;
      const LinkDiagram r = reorient(d, flip);
      CHECK(check_diagram(r).empty());
      CHECK(classify_small_link(r).unoriented() == k.unoriented());
      if (d.component_count == 2) CHECK(linking_number(r) == -linking_number(d));
      else CHECK(normalized_bracket(r) == normalized_bracket(d));
    }
  }
}
