#include "regproj/decision.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "regproj/curve_catalog.hpp"

namespace regproj {

std::string to_string(DoublePointType t) {
  switch (t) {
    case DoublePointType::TypeS: return "TypeS";
    case DoublePointType::TypeA: return "TypeA";
    case DoublePointType::TypeD: return "TypeD";
  }
  return "?";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

std::vector<bool> edges_of(const AbstractGraph& g, const CycleSubgraph& gamma) {
  std::vector<bool> on(g.edge_count(), false);
  for (const auto& oe : gamma.edges()) on[oe.edge.value] = true;
  return on;
}

std::vector<int> face_index(const Projection& p, const std::vector<std::vector<int>>& fs) {
  std::vector<int> of(p.dart_count(), -1);
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int d : fs[f]) of[d] = static_cast<int>(f);
  return of;
}

}  // namespace

std::vector<DoublePointType> double_point_types(const Projection& p) {
  const Projection q = suppress_degree_two(p);
  std::vector<DoublePointType> out;
  for (const auto& dp : q.double_points()) {
    const EdgeId e1 = dp.passages[0].edge;
    const EdgeId e2 = dp.passages[1].edge;
    if (e1 == e2) out.push_back(DoublePointType::TypeS);
    else if (q.graph().shares_endpoint(e1, e2)) out.push_back(DoublePointType::TypeA);
    else out.push_back(DoublePointType::TypeD);
  }
  return out;
}

DoublePointType double_point_type(const Projection& p, int double_point) {
  return double_point_types(p).at(double_point);
}

TypeCensus type_census(const Projection& p) {
  TypeCensus c;
  for (auto t : double_point_types(p)) {
    if (t == DoublePointType::TypeS) ++c.s;
    else if (t == DoublePointType::TypeA) ++c.a;
    else ++c.d;
  }
  return c;
}

int interferency(const Projection& p, const CycleSubgraph& gamma) {
  const auto on = edges_of(p.graph(), gamma);
  int n = 0;
  for (const auto& dp : p.double_points())
    n += on[dp.passages[0].edge.value] != on[dp.passages[1].edge.value];
  return n;
}

RegionDecomposition regions_of_cycle(const Projection& p, const CycleSubgraph& gamma) {
  const AbstractGraph& g = p.graph();
  const auto on = edges_of(g, gamma);
  RegionDecomposition out;
  out.cycle = gamma;
  out.cycle_projection = restrict_projection(p, {gamma});
  const Projection& cp = out.cycle_projection;

  std::set<EdgeId> crossing;
  for (const auto& dp : p.double_points()) {
    const EdgeId a = dp.passages[0].edge, b = dp.passages[1].edge;
    if (on[a.value] && !on[b.value]) crossing.insert(b);
    if (on[b.value] && !on[a.value]) crossing.insert(a);
  }
  out.crossing_edges.assign(crossing.begin(), crossing.end());

  const auto cycle_faces = faces(cp);
  const auto cycle_face_of = face_index(cp, cycle_faces);
  for (const auto& f : cycle_faces) out.regions.push_back({f, {}});

  // Faces of the whole picture merge across every arc that is not on the cycle.
  const auto all_faces = faces(p);
  const auto face_of = face_index(p, all_faces);
  UnionFind uf(static_cast<int>(all_faces.size()));
  for (int d = 0; d < p.dart_count(); d += 2)
    if (!on[p.dart_ref(d).edge.value]) uf.unite(face_of[d], face_of[d + 1]);

  std::map<int, int> region_of_group;
  std::map<int, int> cycle_edge;  // original edge -> edge id in cp
  for (std::size_t e = 0, k = 0; e < g.edge_count(); ++e)
    if (on[e]) cycle_edge[static_cast<int>(e)] = static_cast<int>(k++);
  for (const auto& oe : gamma.edges()) {
    const EdgeId e = oe.edge;
    int kept_before = 0;
    for (int j = 0; j <= p.passage_count(e); ++j) {
      for (int side = 0; side < 2; ++side) {
        const int group = uf.find(face_of[p.dart_id({e, 2 * j + side})]);
        const int region = cycle_face_of[cp.dart_id({EdgeId{cycle_edge[e.value]}, 2 * kept_before + side})];
        auto [it, inserted] = region_of_group.emplace(group, region);
        if (!inserted && it->second != region) throw std::logic_error("inconsistent region assignment");
      }
      if (j < p.passage_count(e)) {
        const auto& dp = p.double_points()[p.double_point_at({e, j})];
        if (on[dp.passages[0].edge.value] && on[dp.passages[1].edge.value]) ++kept_before;
      }
    }
  }

  // Residual pieces: edges off the cycle that do not cross it, glued at
  // vertices off the cycle.
  const int ne = static_cast<int>(g.edge_count());
  const int nv = static_cast<int>(g.vertex_count());
  std::vector<bool> on_vertex(nv, false);
  for (VertexId v : gamma.vertices()) on_vertex[v.value] = true;
  auto residual_edge = [&](int e) { return !on[e] && !crossing.count(EdgeId{e}); };
  UnionFind pieces(ne + nv);  // edges first, then vertices
  for (int e = 0; e < ne; ++e) {
    if (!residual_edge(e)) continue;
    const Edge& ed = g.edge(EdgeId{e});
    for (VertexId v : {ed.source, ed.target})
      if (!on_vertex[v.value]) pieces.unite(e, ne + v.value);
  }
  std::map<int, ResidualPiece> by_root;
  std::map<int, int> some_dart;  // root -> a dart locating the piece
  for (int e = 0; e < ne; ++e) {
    if (!residual_edge(e)) continue;
    const int root = pieces.find(e);
    auto& piece = by_root[root];
    piece.edges.push_back(EdgeId{e});
    const Edge& ed = g.edge(EdgeId{e});
    for (VertexId v : {ed.source, ed.target})
      if (on_vertex[v.value]) piece.ends.push_back({EdgeId{e}, v, false});
    some_dart.emplace(root, p.dart_id({EdgeId{e}, 0}));
  }
  for (int v = 0; v < nv; ++v) {
    if (on_vertex[v]) continue;
    const int root = pieces.find(ne + v);
    auto& piece = by_root[root];
    piece.vertices.push_back(VertexId{v});
    for (EdgeId e : crossing) {
      const Edge& ed = g.edge(e);
      if (ed.source.value == v) piece.ends.push_back({e, VertexId{v}, true});
      if (ed.target.value == v && ed.source.value != v) piece.ends.push_back({e, VertexId{v}, true});
    }
    const auto& rot = p.node_rotation(p.branch_node(VertexId{v}));
    if (!rot.empty()) some_dart.emplace(root, rot.front());
  }
  for (auto& [root, piece] : by_root) {
    auto it = some_dart.find(root);
    auto region = it == some_dart.end() ? region_of_group.end()
                                        : region_of_group.find(uf.find(face_of[it->second]));
    if (region == region_of_group.end()) out.unlocated.push_back(std::move(piece));
    else out.regions[region->second].pieces.push_back(std::move(piece));
  }
  return out;
}

bool disk_certificate(const Projection& p, const CycleSubgraph& gamma) {
  const Projection cp = restrict_projection(p, {gamma});
  if (cp.crossing_number() > 3) return false;
  return interferency(p, gamma) <= 1 && is_trivial_circle_projection(cp);
}

namespace {

LiftVerdict judge(const Lift& f, const std::vector<CycleSubgraph>& cs,
                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  LiftVerdict v;
  v.bits = f.bits();
  for (const auto& c : constituents(f, cs, pairs)) {
    const LinkClass k = classify_small_link(c.diagram);
    v.classes.push_back(k);
    if (k.nontrivial()) v.nontrivial.push_back({c.label, k});
  }
  v.totally_free = v.nontrivial.empty();
  v.trivial = v.totally_free;
  return v;
}

void require_range(const Projection& p) {
  if (p.crossing_number() > 3) throw DecisionError("out of theorem range");
}

void require_planar(const Projection& p) {
  if (!is_planar(p.graph())) throw DecisionError("planarity required");
}

}  // namespace

std::vector<LiftVerdict> analyze_lifts(const Projection& p, int jobs) {
  auto shared = std::make_shared<const Projection>(p);
  const auto lifts = enumerate_lifts(shared);
  const auto cs = cycles(p.graph());
  const auto pairs = disjoint_cycle_pairs(cs);
  std::vector<LiftVerdict> out(lifts.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(lifts.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < lifts.size(); ++i) out[i] = judge(lifts[i], cs, pairs);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < lifts.size(); i += workers) out[i] = judge(lifts[i], cs, pairs);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

bool totally_free(const Lift& f) {
  require_range(*f.projection);
  const auto cs = cycles(f.projection->graph());
  return judge(f, cs, disjoint_cycle_pairs(cs)).totally_free;
}

bool lift_trivial(const Lift& f) {
  require_range(*f.projection);
  require_planar(*f.projection);
  return totally_free(f);
}

DecisionReport projection_knotted(const Projection& p, int jobs) {
  require_range(p);
  require_planar(p);
  DecisionReport r;
  r.crossing_number = p.crossing_number();
  r.types = double_point_types(p);
  r.census = type_census(p);
  r.lifts = analyze_lifts(p, jobs);
  r.knotted = true;
  for (const auto& v : r.lifts) {
    if (v.trivial) {
      r.knotted = false;
      r.witness = v.bits;
      break;
    }
  }
  return r;
}

namespace {

struct Walk {
  std::vector<DartRef> darts;
  VertexId start, end;
};

Walk half_ending_at(const Projection& q, DartRef x) {
  const Edge& e = q.graph().edge(x.edge);
  const int last = 2 * q.passage_count(x.edge) + 1;
  Walk w;
  if (x.index % 2 == 1) {
    for (int i = 0; i <= x.index; ++i) w.darts.push_back({x.edge, i});
    w.start = e.source;
  } else {
    for (int i = last; i >= x.index; --i) w.darts.push_back({x.edge, i});
    w.start = e.target;
  }
  return w;
}

Walk half_starting_at(const Projection& q, DartRef y) {
  const Edge& e = q.graph().edge(y.edge);
  const int last = 2 * q.passage_count(y.edge) + 1;
  Walk w;
  if (y.index % 2 == 0) {
    for (int i = y.index; i <= last; ++i) w.darts.push_back({y.edge, i});
    w.end = e.target;
  } else {
    for (int i = y.index; i >= 0; --i) w.darts.push_back({y.edge, i});
    w.end = e.source;
  }
  return w;
}

// Arriving along `in`, leaving along `out`; the two darts vanish.
Walk join(const Walk& in, const Walk& out) {
  Walk w;
  w.darts.assign(in.darts.begin(), in.darts.end() - 1);
  w.darts.insert(w.darts.end(), out.darts.begin() + 1, out.darts.end());
  w.start = in.start;
  w.end = out.end;
  return w;
}

std::multiset<std::pair<std::string, std::string>> endpoint_pairs(const AbstractGraph& g) {
  std::multiset<std::pair<std::string, std::string>> s;
  for (const auto& e : g.edges()) {
    auto a = g.vertex_name(e.source), b = g.vertex_name(e.target);
    if (b < a) std::swap(a, b);
    s.insert({a, b});
  }
  return s;
}

Projection smoothed(const Projection& q, int dpi, const std::array<DartRef, 2>& pair1,
                    const std::array<DartRef, 2>& pair2) {
  const auto& dp = q.double_points()[dpi];
  const EdgeId e1 = dp.passages[0].edge;
  auto on_e1 = [&](DartRef d) { return d.edge == e1; };
  // Each pair joins a half of e1 with a half of e2; the new e1 arrives along
  // e1's half of the first pair, the new e2 along e2's half of the second.
  const DartRef a = on_e1(pair1[0]) ? pair1[0] : pair1[1];
  const DartRef b = on_e1(pair1[0]) ? pair1[1] : pair1[0];
  const DartRef a2 = on_e1(pair2[0]) ? pair2[0] : pair2[1];
  const DartRef b2 = on_e1(pair2[0]) ? pair2[1] : pair2[0];
  const Walk w1 = join(half_ending_at(q, a), half_starting_at(q, b));
  const Walk w2 = join(half_ending_at(q, b2), half_starting_at(q, a2));
  const EdgeId e2 = b.edge;

  const AbstractGraph& g = q.graph();
  std::vector<EdgeSpec> specs;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(EdgeId{static_cast<int>(e)});
    EdgeSpec s{ed.name, g.vertex_name(ed.source), g.vertex_name(ed.target)};
    if (static_cast<int>(e) == e1.value) s = {ed.name, g.vertex_name(w1.start), g.vertex_name(w1.end)};
    if (static_cast<int>(e) == e2.value) s = {ed.name, g.vertex_name(w2.start), g.vertex_name(w2.end)};
    specs.push_back(std::move(s));
  }
  AbstractGraph ng(g.vertex_names(), specs);

  std::map<DartRef, DartRef> dart_map;
  std::map<Passage, Passage> passage_map;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const EdgeId id{static_cast<int>(e)};
    if (id == e1 || id == e2) continue;
    for (int i = 0; i < 2 * q.passage_count(id) + 2; ++i) dart_map[{id, i}] = {id, i};
    for (int k = 0; k < q.passage_count(id); ++k) passage_map[{id, k}] = {id, k};
  }
  for (const auto& [walk, id] : {std::pair{w1, e1}, std::pair{w2, e2}}) {
    for (std::size_t i = 0; i < walk.darts.size(); ++i) dart_map[walk.darts[i]] = {id, static_cast<int>(i)};
    for (std::size_t i = 1; i + 1 < walk.darts.size(); i += 2) {
      const DartRef old = walk.darts[i];
      passage_map[{old.edge, (old.index - 1) / 2}] = {id, static_cast<int>(i - 1) / 2};
    }
  }
  std::vector<std::vector<DartRef>> rot;
  for (const auto& r : q.rotation()) {
    rot.emplace_back();
    for (DartRef d : r) rot.back().push_back(dart_map.at(d));
  }
  std::vector<DoublePoint> dps;
  for (int i = 0; i < q.crossing_number(); ++i) {
    if (i == dpi) continue;
    const auto& old = q.double_points()[i];
    DoublePoint n{old.name, {passage_map.at(old.passages[0]), passage_map.at(old.passages[1])}, {}};
    for (DartRef d : old.darts) n.darts.push_back(dart_map.at(d));
    dps.push_back(std::move(n));
  }
  return Projection(std::move(ng), std::move(rot), std::move(dps));
}

}  // namespace

Projection smooth_type_a(const Projection& p, int double_point) {
  if (double_point < 0 || double_point >= p.crossing_number())
    throw std::out_of_range("no such double point");
  if (double_point_type(p, double_point) != DoublePointType::TypeA) throw DecisionError("type mismatch");
  const Projection q = suppress_degree_two(p);
  const auto& darts = q.double_points()[double_point].darts;
  const auto want = endpoint_pairs(q.graph());
  for (int shift : {0, 1}) {
    const std::array<DartRef, 2> pair1{darts[shift], darts[shift + 1]};
    const std::array<DartRef, 2> pair2{darts[shift + 2], darts[(shift + 3) % 4]};
    Projection r = smoothed(q, double_point, pair1, pair2);
    if (endpoint_pairs(r.graph()) != want) continue;
    if (auto problems = validate(r); !problems.empty())
      throw std::logic_error("smoothing produced an invalid projection: " + problems.front().code);
    return r;
  }
  throw std::logic_error("no smoothing keeps the graph");
}

}  // namespace regproj
