#include "regproj/curve_catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "regproj/invariants.hpp"
#include "regproj/lift.hpp"

namespace regproj {

namespace {

bool is_circle_graph(const AbstractGraph& g) {
  if (g.vertex_count() == 0) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(VertexId{static_cast<int>(v)}) != 2) return false;
  const Suppression s = suppress_degree_two(g);
  return s.graph.vertex_count() == 1 && s.graph.edge_count() == 1;
}

// The 4-valent map of double points: for each dart at a double point, the
// double-point dart reached by following its arc through branch nodes.
std::map<int, int> crossing_links(const Projection& p) {
  std::map<int, int> link;
  for (int i = 0; i < p.crossing_number(); ++i) {
    for (int x : p.node_rotation(p.double_point_node(i))) {
      int y = Projection::arc_partner(x);
      while (!p.is_double_point_node(p.node_of(y))) y = Projection::arc_partner(p.next_ccw(y));
      link[x] = y;
    }
  }
  return link;
}

std::string encode_from(const Projection& p, const std::map<int, int>& link, int root, bool reversed) {
  auto step = [&](int d) {
    if (!reversed) return p.next_ccw(d);
    return p.next_ccw(p.next_ccw(p.next_ccw(d)));
  };
  std::map<int, int> label;       // node -> label
  std::vector<int> start;         // label -> first dart
  std::map<int, int> offset;      // dart -> offset from its node's start
  auto visit = [&](int d) {
    const int node = p.node_of(d);
    if (label.count(node)) return;
    label[node] = static_cast<int>(start.size());
    start.push_back(d);
    int x = d;
    for (int k = 0; k < 4; ++k, x = step(x)) offset[x] = k;
  };
  visit(root);
  std::string code;
  for (std::size_t l = 0; l < start.size(); ++l) {
    int x = start[l];
    for (int k = 0; k < 4; ++k, x = step(x)) {
      const int y = link.at(x);
      visit(y);
      code += std::to_string(label.at(p.node_of(y))) + "." + std::to_string(offset.at(y)) + " ";
    }
  }
  return code;
}

// Words where symbols first appear in increasing order.
void gauss_words(int n, std::string& prefix, std::vector<int>& used, int next_new,
                 std::vector<std::string>& out) {
  if (static_cast<int>(prefix.size()) == 2 * n) {
    out.push_back(prefix);
    return;
  }
  for (int s = 0; s < n; ++s) {
    if (used[s] == 2 || (used[s] == 0 && s != next_new)) continue;
    prefix.push_back(static_cast<char>('1' + s));
    ++used[s];
    gauss_words(n, prefix, used, used[s] == 1 && s == next_new ? next_new + 1 : next_new, out);
    --used[s];
    prefix.pop_back();
  }
}

}  // namespace

Projection circle_from_gauss(const std::string& word, const std::vector<bool>& flips) {
  AbstractGraph g({"v"}, {{"e", "v", "v"}});
  const EdgeId e{0};
  const int n = static_cast<int>(word.size());
  std::map<char, std::vector<int>> where;
  for (int i = 0; i < n; ++i) where[word[i]].push_back(i);
  std::vector<DoublePoint> dps;
  std::size_t k = 0;
  for (auto& [sym, pos] : where) {
    if (pos.size() != 2) throw std::invalid_argument("Gauss word symbols must appear twice");
    const int i = pos[0], j = pos[1];
    DoublePoint dp{std::string("d") + sym, {Passage{e, i}, Passage{e, j}}, {}};
    const bool flip = k < flips.size() && flips[k];
    dp.darts = {DartRef{e, 2 * i + 1}, DartRef{e, flip ? 2 * j + 2 : 2 * j + 1}, DartRef{e, 2 * i + 2},
                DartRef{e, flip ? 2 * j + 1 : 2 * j + 2}};
    dps.push_back(std::move(dp));
    ++k;
  }
  return Projection(g, {{DartRef{e, 0}, DartRef{e, 2 * n + 1}}}, std::move(dps));
}

std::string canonical_form(const Projection& p, MirrorConvention mirrors) {
  if (!is_circle_graph(p.graph())) throw std::invalid_argument("canonical_form needs a single circle");
  const int n = p.crossing_number();
  const std::string head = std::to_string(n) + ":";
  if (n == 0) return head;
  const auto link = crossing_links(p);
  std::string best;
  for (auto [dart, target] : link) {
    (void)target;
    for (bool reversed : {false, true}) {
      if (reversed && mirrors == MirrorConvention::Distinct) continue;
      std::string code = encode_from(p, link, dart, reversed);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return head + best;
}

CurveCatalog enumerate_classes(int max_cr, MirrorConvention mirrors) {
  if (max_cr > 3) throw std::out_of_range("out of catalog range");
  CurveCatalog catalog;
  catalog.mirrors = mirrors;
  for (int n = 0; n <= max_cr; ++n) {
    std::vector<std::string> words;
    std::string prefix;
    std::vector<int> used(n, 0);
    gauss_words(n, prefix, used, 0, words);
    std::map<std::string, SphericalCurveClass> found;
    for (const auto& w : words) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<bool> flips(n);
        for (int i = 0; i < n; ++i) flips[i] = (mask >> i) & 1;
        Projection p = circle_from_gauss(w, flips);
        if (!validate(p).empty()) continue;
        std::string code = canonical_form(p, mirrors);
        if (found.count(code)) continue;
        SphericalCurveClass c;
        c.crossing_number = n;
        c.code = code;
        c.gauss_word = w;
        c.representative = std::move(p);
        found.emplace(code, std::move(c));
      }
    }
    int index = 0;
    for (auto& [code, c] : found) {
      c.id = "C" + std::to_string(n);
      if (found.size() > 1) c.id += static_cast<char>('a' + index);
      ++index;
      auto rep = std::make_shared<const Projection>(c.representative);
      const auto cs = cycles(rep->graph());
      for (const auto& f : enumerate_lifts(rep))
        if (classify_small_link(restrict(f, cs)).kind == LinkClass::Kind::Trefoil) c.is_trefoil_shadow = true;
      catalog.classes.push_back(std::move(c));
    }
  }
  return catalog;
}

const CurveCatalog& standard_catalog() {
  static const CurveCatalog catalog = [] {
    for (auto convention : {MirrorConvention::Identified, MirrorConvention::Distinct}) {
      CurveCatalog c = enumerate_classes(3, convention);
      if (c.classes.size() == 10) return c;
    }
    throw std::logic_error("no mirror convention yields ten classes");
  }();
  return catalog;
}

const SphericalCurveClass* find_class(const CurveCatalog& catalog, const Projection& p) {
  const std::string code = canonical_form(p, catalog.mirrors);
  for (const auto& c : catalog.classes)
    if (c.code == code) return &c;
  return nullptr;
}

bool is_trivial_circle_projection(const Projection& p) {
  if (p.crossing_number() > 3) throw std::out_of_range("out of catalog range");
  const SphericalCurveClass* c = find_class(standard_catalog(), p);
  if (!c) throw std::logic_error("circle projection missing from the catalog");
  return !c->is_trefoil_shadow;
}

}  // namespace regproj
