#include "regproj/projection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace regproj {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

template <class T>
std::vector<T> reverse_cyclic(const std::vector<T>& v) {
  if (v.empty()) return v;
  std::vector<T> r{v.front()};
  r.insert(r.end(), v.rbegin(), v.rend() - 1);
  return r;
}

}  // namespace

Projection::Projection(AbstractGraph graph, std::vector<std::vector<DartRef>> rotation,
                       std::vector<DoublePoint> double_points)
    : graph_(std::move(graph)), rotation_(std::move(rotation)),
      double_points_(std::move(double_points)) {
  const int ne = static_cast<int>(graph_.edge_count());
  passage_count_.assign(ne, 0);
  for (const auto& dp : double_points_)
    for (const auto& pa : dp.passages)
      if (pa.edge.value >= 0 && pa.edge.value < ne && pa.ordinal >= 0)
        passage_count_[pa.edge.value] = std::max(passage_count_[pa.edge.value], pa.ordinal + 1);
  dart_offset_.assign(ne, 0);
  for (int e = 0; e < ne; ++e) {
    dart_offset_[e] = dart_count_;
    for (int j = 0; j < 2 * passage_count_[e] + 2; ++j) dart_refs_.push_back({EdgeId{e}, j});
    dart_count_ += 2 * passage_count_[e] + 2;
  }

  const int nv = static_cast<int>(graph_.vertex_count());
  node_rotation_.assign(nv + double_points_.size(), {});
  for (int v = 0; v < nv && v < static_cast<int>(rotation_.size()); ++v)
    for (DartRef d : rotation_[v])
      if (int id = dart_id(d); id >= 0) node_rotation_[v].push_back(id);
  for (std::size_t i = 0; i < double_points_.size(); ++i)
    for (DartRef d : double_points_[i].darts)
      if (int id = dart_id(d); id >= 0) node_rotation_[nv + i].push_back(id);

  node_of_.assign(dart_count_, -1);
  next_ccw_.assign(dart_count_, -1);
  for (int n = 0; n < node_count(); ++n) {
    const auto& rot = node_rotation_[n];
    for (std::size_t k = 0; k < rot.size(); ++k) {
      int d = rot[k];
      node_of_[d] = node_of_[d] == -1 ? n : -2;
      next_ccw_[d] = rot[(k + 1) % rot.size()];
    }
  }
  for (int& n : node_of_)
    if (n == -2) n = -1;
}

int Projection::dart_id(DartRef d) const {
  if (d.edge.value < 0 || d.edge.value >= static_cast<int>(graph_.edge_count())) return -1;
  if (d.index < 0 || d.index >= 2 * passage_count_[d.edge.value] + 2) return -1;
  return dart_offset_[d.edge.value] + d.index;
}

int Projection::double_point_at(Passage p) const {
  for (std::size_t i = 0; i < double_points_.size(); ++i)
    for (const auto& q : double_points_[i].passages)
      if (q == p) return static_cast<int>(i);
  return -1;
}

bool Projection::is_branch_dart(int dart) const {
  DartRef r = dart_refs_.at(dart);
  return r.index == 0 || r.index == 2 * passage_count_[r.edge.value] + 1;
}

bool Projection::same_double_points(const Projection& o) const {
  if (double_points_.size() != o.double_points_.size()) return false;
  for (std::size_t i = 0; i < double_points_.size(); ++i) {
    const auto& a = double_points_[i];
    const auto& b = o.double_points_[i];
    if (a.name != b.name || a.passages != b.passages || a.darts != b.darts) return false;
  }
  return true;
}

std::string dart_name(const AbstractGraph& g, DartRef d) {
  if (d.edge.value < 0 || d.edge.value >= static_cast<int>(g.edge_count()))
    return "?." + std::to_string(d.index);
  return g.edge(d.edge).name + "." + std::to_string(d.index);
}

std::vector<Violation> validate(const Projection& p) {
  std::vector<Violation> out;
  const AbstractGraph& g = p.graph();
  const int ne = static_cast<int>(g.edge_count());
  const int nv = static_cast<int>(g.vertex_count());

  std::vector<std::vector<int>> ordinals(ne);
  for (const auto& dp : p.double_points()) {
    for (const auto& pa : dp.passages) {
      if (pa.edge.value < 0 || pa.edge.value >= ne) {
        out.push_back({"unknown edge", dp.name, "passage cites an edge not in the graph"});
      } else if (pa.ordinal < 0) {
        out.push_back({"passage ordinals", dp.name, "negative ordinal"});
      } else {
        ordinals[pa.edge.value].push_back(pa.ordinal);
      }
    }
  }
  for (int e = 0; e < ne; ++e) {
    auto ords = ordinals[e];
    std::sort(ords.begin(), ords.end());
    for (std::size_t k = 0; k < ords.size(); ++k) {
      if (ords[k] != static_cast<int>(k)) {
        out.push_back({"passage ordinals", g.edge(EdgeId{e}).name,
                       "passages along the edge must be numbered 0..n-1 exactly once"});
        break;
      }
    }
  }
  if (!out.empty()) return out;

  std::vector<int> listed(p.dart_count(), 0);
  for (const auto& dp : p.double_points()) {
    if (dp.darts.size() != 4) {
      out.push_back({"double point valence", dp.name,
                     "expected 4 darts, found " + std::to_string(dp.darts.size())});
      continue;
    }
    bool ok = true;
    for (DartRef d : dp.darts) {
      int id = p.dart_id(d);
      if (id < 0) {
        out.push_back({"unknown dart", dp.name, dart_name(g, d)});
        ok = false;
      } else if (p.is_branch_dart(id)) {
        out.push_back({"double point at vertex", dp.name, dart_name(g, d) + " is a vertex end"});
        ok = false;
      }
    }
    if (!ok) continue;
    auto passage_darts = [](Passage pa) {
      return std::set<DartRef>{{pa.edge, 2 * pa.ordinal + 1}, {pa.edge, 2 * pa.ordinal + 2}};
    };
    std::set<DartRef> s02{dp.darts[0], dp.darts[2]};
    std::set<DartRef> s13{dp.darts[1], dp.darts[3]};
    auto a = passage_darts(dp.passages[0]);
    auto b = passage_darts(dp.passages[1]);
    if (!((s02 == a && s13 == b) || (s02 == b && s13 == a))) {
      out.push_back({"not transversal", dp.name,
                     "opposite darts must belong to the same passage"});
    }
  }
  for (int n = 0; n < p.node_count(); ++n)
    for (int d : p.node_rotation(n)) ++listed[d];

  if (static_cast<int>(p.rotation().size()) != nv) {
    out.push_back({"rotation mismatch", "graph", "one rotation per vertex is required"});
  } else {
    for (int v = 0; v < nv; ++v) {
      std::multiset<DartRef> expected;
      for (int e = 0; e < ne; ++e) {
        const Edge& edge = g.edge(EdgeId{e});
        if (edge.source.value == v) expected.insert({EdgeId{e}, 0});
        if (edge.target.value == v) expected.insert({EdgeId{e}, 2 * p.passage_count(EdgeId{e}) + 1});
      }
      std::multiset<DartRef> got(p.rotation()[v].begin(), p.rotation()[v].end());
      if (got != expected)
        out.push_back({"rotation mismatch", g.vertex_name(VertexId{v}),
                       "rotation must list exactly the edge ends at this vertex"});
    }
  }
  for (int d = 0; d < p.dart_count(); ++d) {
    if (listed[d] != 1) {
      out.push_back({"dart listing", dart_name(g, p.dart_ref(d)),
                     "listed " + std::to_string(listed[d]) + " times"});
    }
  }
  if (!out.empty()) return out;

  const auto comps = image_components(p);
  const auto fs = faces(p);
  std::vector<int> comp_of_node(p.node_count(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int n : comps[c]) comp_of_node[n] = static_cast<int>(c);
  std::vector<long> euler(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) euler[c] += static_cast<long>(comps[c].size());
  for (int d = 0; d < p.dart_count(); d += 2) euler[comp_of_node[p.node_of(d)]] -= 1;
  for (const auto& f : fs) euler[comp_of_node[p.node_of(f.front())]] += 1;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (euler[c] != 2) {
      out.push_back({"not spherical", "component " + std::to_string(c),
                     "V - E + F = " + std::to_string(euler[c])});
    }
  }
  return out;
}

std::vector<std::vector<int>> faces(const Projection& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.dart_count(), false);
  for (int d0 = 0; d0 < p.dart_count(); ++d0) {
    if (seen[d0]) continue;
    std::vector<int> face;
    int d = d0;
    while (!seen[d]) {
      seen[d] = true;
      face.push_back(d);
      d = p.next_ccw(Projection::arc_partner(d));
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<std::vector<int>> image_components(const Projection& p) {
  UnionFind uf(p.node_count());
  for (int d = 0; d < p.dart_count(); d += 2) uf.unite(p.node_of(d), p.node_of(d + 1));
  std::map<int, std::vector<int>> groups;
  for (int n = 0; n < p.node_count(); ++n)
    if (!p.node_rotation(n).empty()) groups[uf.find(n)].push_back(n);
  std::vector<std::vector<int>> out;
  for (auto& [root, nodes] : groups) out.push_back(std::move(nodes));
  std::sort(out.begin(), out.end());
  return out;
}

Projection mirror(const Projection& p) {
  std::vector<std::vector<DartRef>> rot;
  for (const auto& r : p.rotation()) rot.push_back(reverse_cyclic(r));
  auto dps = p.double_points();
  for (auto& dp : dps) dp.darts = reverse_cyclic(dp.darts);
  return Projection(p.graph(), std::move(rot), std::move(dps));
}

namespace {

// Rebuilds a projection on `target` given, for each old dart, its new
// reference (or an invalid one when the dart disappears) and the surviving
// double points with their new passages.
Projection rebuild(const Projection& p, const AbstractGraph& target,
                   const std::vector<std::optional<VertexId>>& vertex_map,
                   const std::vector<std::optional<DartRef>>& dart_map,
                   const std::vector<std::optional<std::array<Passage, 2>>>& dp_map) {
  std::vector<std::vector<DartRef>> rot(target.vertex_count());
  for (std::size_t v = 0; v < p.rotation().size(); ++v) {
    if (!vertex_map[v]) continue;
    for (DartRef d : p.rotation()[v])
      if (auto m = dart_map[p.dart_id(d)]) rot[vertex_map[v]->value].push_back(*m);
  }
  std::vector<DoublePoint> dps;
  for (std::size_t i = 0; i < p.double_points().size(); ++i) {
    if (!dp_map[i]) continue;
    const auto& old = p.double_points()[i];
    DoublePoint dp{old.name, *dp_map[i], {}};
    for (DartRef d : old.darts) dp.darts.push_back(*dart_map[p.dart_id(d)]);
    dps.push_back(std::move(dp));
  }
  return Projection(target, std::move(rot), std::move(dps));
}

}  // namespace

Projection suppress_degree_two(const Projection& p) {
  const Suppression s = suppress_degree_two(p.graph());
  std::vector<std::optional<DartRef>> dart_map(p.dart_count());
  std::vector<std::optional<std::array<Passage, 2>>> dp_map(p.double_points().size());
  std::map<Passage, Passage> passage_map;

  for (std::size_t ne = 0; ne < s.chains.size(); ++ne) {
    const auto& chain = s.chains[ne];
    int total = 0;
    for (const auto& oe : chain) total += p.passage_count(oe.edge);
    int before = 0;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const EdgeId e = chain[k].edge;
      const int n = p.passage_count(e);
      const EdgeId new_edge{static_cast<int>(ne)};
      for (int i = 0; i < n; ++i) {
        const int ni = chain[k].forward ? before + i : before + (n - 1 - i);
        passage_map[{e, i}] = {new_edge, ni};
        const int src_side = chain[k].forward ? 2 * ni + 1 : 2 * ni + 2;
        const int tgt_side = chain[k].forward ? 2 * ni + 2 : 2 * ni + 1;
        dart_map[p.dart_id({e, 2 * i + 1})] = DartRef{new_edge, src_side};
        dart_map[p.dart_id({e, 2 * i + 2})] = DartRef{new_edge, tgt_side};
      }
      const DartRef start{e, chain[k].forward ? 0 : 2 * n + 1};
      const DartRef end{e, chain[k].forward ? 2 * n + 1 : 0};
      if (k == 0) dart_map[p.dart_id(start)] = DartRef{new_edge, 0};
      if (k + 1 == chain.size()) dart_map[p.dart_id(end)] = DartRef{new_edge, 2 * total + 1};
      before += n;
    }
  }
  for (std::size_t i = 0; i < p.double_points().size(); ++i) {
    const auto& pa = p.double_points()[i].passages;
    dp_map[i] = std::array<Passage, 2>{passage_map.at(pa[0]), passage_map.at(pa[1])};
  }
  return rebuild(p, s.graph, s.vertex_map, dart_map, dp_map);
}

Projection restrict_projection(const Projection& p, const std::vector<CycleSubgraph>& cycles) {
  const AbstractGraph& g = p.graph();
  std::vector<bool> keep_edge(g.edge_count(), false);
  std::vector<bool> keep_vertex(g.vertex_count(), false);
  for (const auto& c : cycles) {
    for (const auto& oe : c.edges()) keep_edge[oe.edge.value] = true;
    for (VertexId v : c.vertices()) keep_vertex[v.value] = true;
  }
  std::vector<std::optional<VertexId>> vertex_map(g.vertex_count());
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!keep_vertex[v]) continue;
    vertex_map[v] = VertexId{static_cast<int>(names.size())};
    names.push_back(g.vertex_name(VertexId{static_cast<int>(v)}));
  }
  std::vector<EdgeSpec> specs;
  std::vector<int> new_edge(g.edge_count(), -1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!keep_edge[e]) continue;
    const Edge& ed = g.edge(EdgeId{static_cast<int>(e)});
    new_edge[e] = static_cast<int>(specs.size());
    specs.push_back({ed.name, g.vertex_name(ed.source), g.vertex_name(ed.target)});
  }
  AbstractGraph sub(std::move(names), specs);

  auto kept_dp = [&](const DoublePoint& dp) {
    return keep_edge[dp.passages[0].edge.value] && keep_edge[dp.passages[1].edge.value];
  };
  std::vector<std::optional<DartRef>> dart_map(p.dart_count());
  std::vector<std::optional<std::array<Passage, 2>>> dp_map(p.double_points().size());
  std::map<Passage, Passage> passage_map;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!keep_edge[e]) continue;
    const EdgeId old{static_cast<int>(e)};
    const EdgeId ne{new_edge[e]};
    int k = 0;
    for (int i = 0; i < p.passage_count(old); ++i) {
      const int dp = p.double_point_at({old, i});
      if (!kept_dp(p.double_points()[dp])) continue;
      passage_map[{old, i}] = {ne, k};
      dart_map[p.dart_id({old, 2 * i + 1})] = DartRef{ne, 2 * k + 1};
      dart_map[p.dart_id({old, 2 * i + 2})] = DartRef{ne, 2 * k + 2};
      ++k;
    }
    dart_map[p.dart_id({old, 0})] = DartRef{ne, 0};
    dart_map[p.dart_id({old, 2 * p.passage_count(old) + 1})] = DartRef{ne, 2 * k + 1};
  }
  for (std::size_t i = 0; i < p.double_points().size(); ++i) {
    const auto& dp = p.double_points()[i];
    if (kept_dp(dp))
      dp_map[i] = std::array<Passage, 2>{passage_map.at(dp.passages[0]),
                                         passage_map.at(dp.passages[1])};
  }
  return rebuild(p, sub, vertex_map, dart_map, dp_map);
}

}  // namespace regproj
