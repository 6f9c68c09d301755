#include "regproj/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace regproj {

AbstractGraph::AbstractGraph(std::vector<std::string> vertex_names,
                             const std::vector<EdgeSpec>& edges)
    : vertex_names_(std::move(vertex_names)) {
  std::set<std::string> seen;
  for (const auto& n : vertex_names_) {
    if (n.empty()) throw GraphError("empty vertex name");
    if (!seen.insert(n).second) throw GraphError("duplicate vertex '" + n + "'");
  }
  std::set<std::string> seen_edges;
  for (const auto& spec : edges) {
    if (spec.name.empty()) throw GraphError("empty edge name");
    if (!seen_edges.insert(spec.name).second) throw GraphError("duplicate edge '" + spec.name + "'");
    auto s = find_vertex(spec.source);
    auto t = find_vertex(spec.target);
    if (!s) throw GraphError("edge '" + spec.name + "' has undeclared endpoint '" + spec.source + "'");
    if (!t) throw GraphError("edge '" + spec.name + "' has undeclared endpoint '" + spec.target + "'");
    edges_.push_back(Edge{spec.name, *s, *t});
  }
}

std::optional<VertexId> AbstractGraph::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertex_names_.size(); ++i)
    if (vertex_names_[i] == name) return VertexId{static_cast<int>(i)};
  return std::nullopt;
}

std::optional<EdgeId> AbstractGraph::find_edge(const std::string& name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return EdgeId{static_cast<int>(i)};
  return std::nullopt;
}

int AbstractGraph::degree(VertexId v) const {
  int d = 0;
  for (const auto& e : edges_) {
    if (e.source == v) ++d;
    if (e.target == v) ++d;
  }
  return d;
}

std::vector<EdgeId> AbstractGraph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].source == v || edges_[i].target == v) out.push_back(EdgeId{static_cast<int>(i)});
  return out;
}

bool AbstractGraph::shares_endpoint(EdgeId a, EdgeId b) const {
  const Edge& x = edge(a);
  const Edge& y = edge(b);
  return x.source == y.source || x.source == y.target || x.target == y.source ||
         x.target == y.target;
}

namespace {

std::vector<OrientedEdge> reversed_walk(const std::vector<OrientedEdge>& w) {
  std::vector<OrientedEdge> r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->edge, !it->forward});
  return r;
}

// Orders forward traversal before backward for the same edge.
bool walk_less(const std::vector<OrientedEdge>& a, const std::vector<OrientedEdge>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const OrientedEdge& x, const OrientedEdge& y) {
        if (x.edge != y.edge) return x.edge < y.edge;
        return x.forward && !y.forward;
      });
}

std::vector<OrientedEdge> least_rotation(const std::vector<OrientedEdge>& w) {
  std::vector<OrientedEdge> best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::vector<OrientedEdge> r(w.begin() + k, w.end());
    r.insert(r.end(), w.begin(), w.begin() + k);
    if (walk_less(r, best)) best = std::move(r);
  }
  return best;
}

VertexId tail_of(const AbstractGraph& g, OrientedEdge oe) {
  const Edge& e = g.edge(oe.edge);
  return oe.forward ? e.source : e.target;
}

VertexId head_of(const AbstractGraph& g, OrientedEdge oe) {
  const Edge& e = g.edge(oe.edge);
  return oe.forward ? e.target : e.source;
}

}  // namespace

CycleSubgraph::CycleSubgraph(const AbstractGraph& g, std::vector<OrientedEdge> walk) {
  if (walk.empty()) throw GraphError("empty cycle");
  std::set<int> edge_set;
  std::set<VertexId> vertex_set;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i].edge.value < 0 || walk[i].edge.value >= static_cast<int>(g.edge_count()))
      throw GraphError("cycle references unknown edge");
    if (!edge_set.insert(walk[i].edge.value).second) throw GraphError("cycle repeats an edge");
    const auto& next = walk[(i + 1) % walk.size()];
    if (head_of(g, walk[i]) != tail_of(g, next)) throw GraphError("cycle walk is not closed");
    if (!vertex_set.insert(tail_of(g, walk[i])).second)
      throw GraphError("cycle revisits a vertex");
  }
  auto fwd = least_rotation(walk);
  auto bwd = least_rotation(reversed_walk(walk));
  edges_ = walk_less(bwd, fwd) ? std::move(bwd) : std::move(fwd);
  vertices_.assign(vertex_set.begin(), vertex_set.end());
}

bool CycleSubgraph::contains_edge(EdgeId e) const { return direction_of(e) != 0; }

bool CycleSubgraph::contains_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int CycleSubgraph::direction_of(EdgeId e) const {
  for (const auto& oe : edges_)
    if (oe.edge == e) return oe.forward ? 1 : -1;
  return 0;
}

bool CycleSubgraph::disjoint_from(const CycleSubgraph& other) const {
  for (VertexId v : vertices_)
    if (other.contains_vertex(v)) return false;
  return true;
}

std::string CycleSubgraph::describe(const AbstractGraph& g) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ' ';
    os << (edges_[i].forward ? "+" : "-") << g.edge(edges_[i].edge).name;
  }
  return os.str();
}

std::vector<CycleSubgraph> cycles(const AbstractGraph& g) {
  std::set<CycleSubgraph> found;
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::vector<EdgeId>> incident(n);
  for (int v = 0; v < n; ++v) incident[v] = g.incident_edges(VertexId{v});

  std::vector<OrientedEdge> path;
  std::vector<bool> on_path(n, false);
  std::vector<bool> edge_used(g.edge_count(), false);

  // Simple cycles whose least vertex is `start`; each is met once per direction.
  auto extend = [&](auto&& self, int start, int cur) -> void {
    for (EdgeId e : incident[cur]) {
      if (edge_used[e.value]) continue;
      const Edge& edge = g.edge(e);
      if (edge.is_loop()) continue;
      const bool forward = edge.source.value == cur;
      const int next = forward ? edge.target.value : edge.source.value;
      if (next < start) continue;
      path.push_back({e, forward});
      edge_used[e.value] = true;
      if (next == start) {
        found.insert(CycleSubgraph(g, path));
      } else if (!on_path[next]) {
        on_path[next] = true;
        self(self, start, next);
        on_path[next] = false;
      }
      edge_used[e.value] = false;
      path.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    for (EdgeId e : incident[s])
      if (g.edge(e).is_loop()) found.insert(CycleSubgraph(g, {{e, true}}));
    on_path[s] = true;
    extend(extend, s, s);
    on_path[s] = false;
  }
  return {found.begin(), found.end()};
}

std::vector<std::pair<std::size_t, std::size_t>> disjoint_cycle_pairs(
    const std::vector<CycleSubgraph>& cs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (cs[i].disjoint_from(cs[j])) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<CycleSubgraph, CycleSubgraph>> disjoint_cycle_pairs(const AbstractGraph& g) {
  auto cs = cycles(g);
  std::vector<std::pair<CycleSubgraph, CycleSubgraph>> out;
  for (auto [i, j] : disjoint_cycle_pairs(cs)) out.emplace_back(cs[i], cs[j]);
  return out;
}

bool is_planar(const AbstractGraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  const int n = static_cast<int>(g.vertex_count());
  BoostGraph bg(n);
  std::set<std::pair<int, int>> simple;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    auto key = std::minmax(e.source.value, e.target.value);
    if (simple.insert(key).second) boost::add_edge(key.first, key.second, bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

Suppression suppress_degree_two(const AbstractGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<bool> has_loop(n, false);
  for (const auto& e : g.edges())
    if (e.is_loop()) has_loop[e.source.value] = true;
  std::vector<bool> smoothed(n, false);
  for (int v = 0; v < n; ++v) smoothed[v] = g.degree(VertexId{v}) == 2 && !has_loop[v];

  struct Chain {
    std::vector<EdgeId> edges;
    VertexId from;
    VertexId to;
  };
  std::vector<Chain> chains;
  std::vector<bool> used(g.edge_count(), false);

  auto walk_from = [&](VertexId v, EdgeId first) {
    Chain c{{first}, v, v};
    used[first.value] = true;
    EdgeId prev = first;
    const Edge& fe = g.edge(first);
    VertexId cur = fe.source == v ? fe.target : fe.source;
    while (smoothed[cur.value] && cur != v) {
      EdgeId next{-1};
      for (EdgeId e : g.incident_edges(cur))
        if (e != prev) next = e;
      if (next.value < 0 || used[next.value]) break;
      used[next.value] = true;
      c.edges.push_back(next);
      const Edge& ne = g.edge(next);
      cur = ne.source == cur ? ne.target : ne.source;
      prev = next;
    }
    c.to = cur;
    return c;
  };

  for (int v = 0; v < n; ++v) {
    if (smoothed[v]) continue;
    for (EdgeId e : g.incident_edges(VertexId{v}))
      if (!used[e.value]) chains.push_back(walk_from(VertexId{v}, e));
  }
  // Circles made only of smoothed vertices keep their least vertex.
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (used[i]) continue;
    std::set<VertexId> circle;
    EdgeId prev{static_cast<int>(i)};
    VertexId start = g.edge(prev).source;
    VertexId cur = start;
    do {
      circle.insert(cur);
      EdgeId next{-1};
      for (EdgeId e : g.incident_edges(cur))
        if (e != prev) next = e;
      const Edge& ne = g.edge(next);
      cur = ne.source == cur ? ne.target : ne.source;
      prev = next;
    } while (cur != start);
    VertexId keeper = *circle.begin();
    smoothed[keeper.value] = false;
    EdgeId first{-1};
    for (EdgeId e : g.incident_edges(keeper))
      if (first.value < 0 || e < first) first = e;
    chains.push_back(walk_from(keeper, first));
  }

  // Orient each chain along its least original edge; order chains by it.
  for (auto& c : chains) {
    auto it = std::min_element(c.edges.begin(), c.edges.end());
    std::size_t k = static_cast<std::size_t>(it - c.edges.begin());
    VertexId at = c.from;
    for (std::size_t j = 0; j < k; ++j) {
      const Edge& e = g.edge(c.edges[j]);
      at = e.source == at ? e.target : e.source;
    }
    const Edge& least = g.edge(*it);
    const bool forward = least.is_loop() || least.source == at;
    if (!forward) {
      std::reverse(c.edges.begin(), c.edges.end());
      std::swap(c.from, c.to);
    }
  }
  std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    return *std::min_element(a.edges.begin(), a.edges.end()) <
           *std::min_element(b.edges.begin(), b.edges.end());
  });

  Suppression out;
  out.vertex_map.assign(n, std::nullopt);
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) {
    if (smoothed[v]) continue;
    out.vertex_map[v] = VertexId{static_cast<int>(names.size())};
    names.push_back(g.vertex_name(VertexId{v}));
  }
  std::vector<EdgeSpec> specs;
  out.edge_map.assign(g.edge_count(), EdgeId{-1});
  for (std::size_t i = 0; i < chains.size(); ++i) {
    std::string name;
    std::vector<OrientedEdge> walk;
    VertexId at = chains[i].from;
    for (EdgeId e : chains[i].edges) {
      const Edge& ge = g.edge(e);
      const bool fwd = ge.source == at;
      walk.push_back({e, fwd});
      at = fwd ? ge.target : ge.source;
      if (!name.empty()) name += '+';
      name += g.edge(e).name;
      out.edge_map[e.value] = EdgeId{static_cast<int>(i)};
    }
    out.chains.push_back(std::move(walk));
    specs.push_back({name, g.vertex_name(chains[i].from), g.vertex_name(chains[i].to)});
  }
  out.graph = AbstractGraph(std::move(names), specs);
  return out;
}

}  // namespace regproj
