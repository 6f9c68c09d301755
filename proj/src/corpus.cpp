#include "regproj/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace regproj {

std::string to_string(GraphFamily f) {
  switch (f) {
    case GraphFamily::Circle: return "circle";
    case GraphFamily::Theta: return "theta";
    case GraphFamily::Handcuff: return "handcuff";
    case GraphFamily::K4: return "K4";
    case GraphFamily::TwoUnknots: return "two-unknots";
  }
  return "?";
}

const std::vector<GraphFamily>& all_families() {
  static const std::vector<GraphFamily> families{GraphFamily::Circle, GraphFamily::Theta, GraphFamily::Handcuff,
                                                 GraphFamily::K4, GraphFamily::TwoUnknots};
  return families;
}

AbstractGraph family_graph(GraphFamily f) {
  switch (f) {
    case GraphFamily::Circle: return AbstractGraph({"v"}, {{"e", "v", "v"}});
    case GraphFamily::Theta: return AbstractGraph({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}, {"c", "u", "v"}});
    case GraphFamily::Handcuff: return AbstractGraph({"u", "v"}, {{"a", "u", "u"}, {"b", "v", "v"}, {"c", "u", "v"}});
    case GraphFamily::K4:
      return AbstractGraph({"v1", "v2", "v3", "v4"}, {{"e12", "v1", "v2"}, {"e13", "v1", "v3"}, {"e14", "v1", "v4"},
                                                      {"e23", "v2", "v3"}, {"e24", "v2", "v4"}, {"e34", "v3", "v4"}});
    case GraphFamily::TwoUnknots: return AbstractGraph({"u", "v"}, {{"a", "u", "u"}, {"b", "v", "v"}});
  }
  throw std::invalid_argument("unknown family");
}

namespace {

void distributions(int edges, int total, std::vector<int>& counts, const std::function<void()>& emit) {
  const int k = static_cast<int>(counts.size());
  if (k == edges - 1) {
    counts.push_back(total);
    emit();
    counts.pop_back();
    return;
  }
  for (int c = 0; c <= total; ++c) {
    counts.push_back(c);
    distributions(edges, total - c, counts, emit);
    counts.pop_back();
  }
}

void pairings(std::vector<int>& free, std::vector<std::pair<int, int>>& pairs,
              const std::function<void()>& emit) {
  if (free.empty()) {
    emit();
    return;
  }
  const int first = free.front();
  for (std::size_t j = 1; j < free.size(); ++j) {
    const int second = free[j];
    std::vector<int> rest;
    for (std::size_t k = 1; k < free.size(); ++k)
      if (k != j) rest.push_back(free[k]);
    pairs.push_back({first, second});
    pairings(rest, pairs, emit);
    pairs.pop_back();
  }
}

// Every cyclic order of each vertex's darts, first dart fixed.
std::vector<std::vector<std::vector<DartRef>>> rotation_systems(const AbstractGraph& g, const std::vector<int>& counts) {
  std::vector<std::vector<std::vector<DartRef>>> per_vertex;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<DartRef> ends;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(EdgeId{static_cast<int>(e)});
      if (ed.source.value == static_cast<int>(v)) ends.push_back({EdgeId{static_cast<int>(e)}, 0});
      if (ed.target.value == static_cast<int>(v))
        ends.push_back({EdgeId{static_cast<int>(e)}, 2 * counts[e] + 1});
    }
    std::vector<std::vector<DartRef>> options;
    if (ends.size() <= 2) {
      options.push_back(ends);
    } else {
      std::sort(ends.begin() + 1, ends.end());
      do options.push_back(ends);
      while (std::next_permutation(ends.begin() + 1, ends.end()));
    }
    per_vertex.push_back(std::move(options));
  }
  std::vector<std::vector<std::vector<DartRef>>> systems{{}};
  for (const auto& options : per_vertex) {
    std::vector<std::vector<std::vector<DartRef>>> next;
    for (const auto& partial : systems)
      for (const auto& o : options) {
        auto s = partial;
        s.push_back(o);
        next.push_back(std::move(s));
      }
    systems = std::move(next);
  }
  return systems;
}

}  // namespace

void for_each_projection(GraphFamily family, int cr, const std::function<void(const Projection&)>& visit) {
  const AbstractGraph g = family_graph(family);
  const int ne = static_cast<int>(g.edge_count());
  std::vector<int> counts;
  distributions(ne, 2 * cr, counts, [&] {
    std::vector<Passage> positions;
    for (int e = 0; e < ne; ++e)
      for (int k = 0; k < counts[e]; ++k) positions.push_back({EdgeId{e}, k});
    const auto systems = rotation_systems(g, counts);
    std::vector<int> free(positions.size());
    for (std::size_t i = 0; i < free.size(); ++i) free[i] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    pairings(free, pairs, [&] {
      for (int mask = 0; mask < (1 << cr); ++mask) {
        std::vector<DoublePoint> dps;
        for (int i = 0; i < cr; ++i) {
          const Passage p = positions[pairs[i].first];
          const Passage q = positions[pairs[i].second];
          const DartRef p_in{p.edge, 2 * p.ordinal + 1}, p_out{p.edge, 2 * p.ordinal + 2};
          const DartRef q_in{q.edge, 2 * q.ordinal + 1}, q_out{q.edge, 2 * q.ordinal + 2};
          const bool flip = (mask >> i) & 1;
          dps.push_back({"d" + std::to_string(i + 1), {p, q},
                         {p_in, flip ? q_out : q_in, p_out, flip ? q_in : q_out}});
        }
        for (const auto& rotation : systems) {
          Projection candidate(g, rotation, dps);
          if (validate(candidate).empty()) visit(candidate);
        }
      }
    });
  });
}

std::vector<Projection> generate_corpus(GraphFamily family, int max_cr) {
  if (max_cr > 3) throw std::out_of_range("out of corpus range");
  std::vector<Projection> out;
  for (int cr = 0; cr <= max_cr; ++cr)
    for_each_projection(family, cr, [&](const Projection& p) { out.push_back(p); });
  return out;
}

}  // namespace regproj
