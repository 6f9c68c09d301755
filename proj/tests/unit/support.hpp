#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "regproj/gpd.hpp"
#include "regproj/graph.hpp"
#include "regproj/laurent.hpp"
#include "regproj/link_diagram.hpp"
#include "regproj/projection.hpp"

namespace support {

using namespace regproj;

inline std::string fixture(const std::string& name) { return std::string(REGPROJ_TEST_FIXTURES) + "/" + name; }

inline std::shared_ptr<const Projection> load_shared(const std::string& name) {
  return std::make_shared<const Projection>(load_gpd(fixture(name)).projection);
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "cube_knotted.gpd", "three_pieces.gpd",   "handcuff_four.gpd", "nonplanar_pair.gpd",
      "figure_eight.gpd",  "handcuff_hopf.gpd",  "k4_interferency3.gpd", "k4_smoothing.gpd",
      "theta_embedded.gpd", "theta_type_a.gpd", "trefoil_shadow.gpd"};
  return names;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int roots() {
    int r = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) r += find(i) == i;
    return r;
  }
};

// Planar diagram code: one quadruple per crossing, counterclockwise from the
// incoming under edge; edges are numbered by the slot they leave from.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;
  int edges = 0;
  int free_loops = 0;
};

inline PdCode to_pd(const LinkDiagram& d) {
  std::map<SlotRef, int> id;
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s)
      if (d.crossings[c].outgoing[s]) id.emplace(SlotRef{c, s}, static_cast<int>(id.size()));
  auto label = [&](SlotRef s) {
    return d.crossings[s.crossing].outgoing[s.slot] ? id.at(s) : id.at(d.link(s));
  };
  PdCode pd;
  pd.edges = static_cast<int>(id.size());
  pd.free_loops = static_cast<int>(d.free_components.size());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings[c];
    const int under = x.over == 0 ? 1 : 0;
    const int in = x.outgoing[under] ? under + 2 : under;
    std::array<int, 4> q{};
    for (int k = 0; k < 4; ++k) q[k] = label({c, (in + k) % 4});
    pd.crossings.push_back(q);
  }
  return pd;
}

// Bracket straight from the PD code: A-smoothing joins (a,b),(c,d).
inline LaurentPoly pd_bracket(const PdCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  LaurentPoly total;
  for (long state = 0; state < (1L << n); ++state) {
    UnionFind uf(pd.edges);
    int a_count = 0;
    for (int i = 0; i < n; ++i) {
      const auto& q = pd.crossings[i];
      if ((state >> i) & 1) {
        uf.unite(q[0], q[3]);
        uf.unite(q[1], q[2]);
      } else {
        ++a_count;
        uf.unite(q[0], q[1]);
        uf.unite(q[2], q[3]);
      }
    }
    const int loops = uf.roots() + pd.free_loops;
    LaurentPoly term = LaurentPoly::monomial(1, a_count - (n - a_count));
    for (int k = 1; k < loops; ++k) term *= delta;
    total += term;
  }
  if (n == 0 && pd.free_loops == 0) return LaurentPoly::monomial(1, 0);
  return total;
}

// Fox 3-colorings by exhaustive search over edge colors.
inline long long brute_tricolorings(const PdCode& pd) {
  long long count = 0;
  std::vector<int> color(pd.edges, 0);
  std::function<void(int)> rec = [&](int e) {
    if (e == pd.edges) {
      for (const auto& q : pd.crossings)
        if (color[q[1]] != color[q[3]] || (2 * color[q[1]] - color[q[0]] - color[q[2]]) % 3 != 0) return;
      ++count;
      return;
    }
    for (int c = 0; c < 3; ++c) {
      color[e] = c;
      rec(e + 1);
    }
  };
  rec(0);
  for (int i = 0; i < pd.free_loops; ++i) count *= 3;
  return count;
}

// Edge sets of every circle subgraph, by trying all edge subsets.
inline std::set<std::set<int>> brute_cycles(const AbstractGraph& g) {
  std::set<std::set<int>> out;
  const int m = static_cast<int>(g.edge_count());
  for (long mask = 1; mask < (1L << m); ++mask) {
    std::vector<int> degree(g.vertex_count(), 0);
    UnionFind uf(static_cast<int>(g.vertex_count()));
    std::set<int> used, edges;
    for (int e = 0; e < m; ++e) {
      if (!((mask >> e) & 1)) continue;
      const Edge& ed = g.edge(EdgeId{e});
      ++degree[ed.source.value];
      ++degree[ed.target.value];
      uf.unite(ed.source.value, ed.target.value);
      used.insert(ed.source.value);
      used.insert(ed.target.value);
      edges.insert(e);
    }
    bool ok = true;
    for (int v : used) ok = ok && degree[v] == 2;
    std::set<int> roots;
    for (int v : used) roots.insert(uf.find(v));
    if (ok && roots.size() == 1) out.insert(edges);
  }
  return out;
}

inline std::set<int> edge_set(const CycleSubgraph& c) {
  std::set<int> s;
  for (const auto& e : c.edges()) s.insert(e.edge.value);
  return s;
}

// Sphere embedding search over every rotation system of the underlying
// simple graph, after the edge-count bound.
inline bool brute_planar(const AbstractGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : g.edges())
    if (e.source != e.target) {
      adj[e.source.value].insert(e.target.value);
      adj[e.target.value].insert(e.source.value);
    }
  int m = 0;
  for (const auto& a : adj) m += static_cast<int>(a.size());
  m /= 2;
  if (n >= 3 && m > 3 * n - 6) return false;
  UnionFind comp(n);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) comp.unite(v, w);
  std::map<int, std::vector<int>> members;
  for (int v = 0; v < n; ++v) members[comp.find(v)].push_back(v);
  for (const auto& [root, vs] : members) {
    std::vector<std::vector<int>> rot;
    int edges = 0;
    for (int v : vs) {
      rot.emplace_back(adj[v].begin(), adj[v].end());
      edges += static_cast<int>(adj[v].size());
    }
    edges /= 2;
    if (edges == 0) continue;
    std::map<int, int> slot;
    for (std::size_t i = 0; i < vs.size(); ++i) slot[vs[i]] = static_cast<int>(i);
    bool found = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (found) return;
      if (i == vs.size()) {
        std::set<std::pair<int, int>> seen;
        int faces = 0;
        for (std::size_t a = 0; a < vs.size(); ++a)
          for (int b : rot[a]) {
            if (seen.count({vs[a], b})) continue;
            ++faces;
            int u = vs[a], w = b;
            while (seen.insert({u, w}).second) {
              const auto& r = rot[slot[w]];
              const auto pos = std::find(r.begin(), r.end(), u) - r.begin();
              const int next = r[(pos + 1) % r.size()];
              u = w;
              w = next;
            }
          }
        if (static_cast<int>(vs.size()) - edges + faces == 2) found = true;
        return;
      }
      auto& r = rot[i];
      if (r.size() <= 2) {
        rec(i + 1);
        return;
      }
      std::sort(r.begin() + 1, r.end());
      do rec(i + 1);
      while (!found && std::next_permutation(r.begin() + 1, r.end()));
    };
    rec(0);
    if (!found) return false;
  }
  return true;
}

}  // namespace support
