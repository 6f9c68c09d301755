#include "regproj/lift.hpp"

#include <map>
#include <set>

namespace regproj {

std::string Lift::bits() const {
  std::string s;
  for (auto b : over) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<Lift> enumerate_lifts(std::shared_ptr<const Projection> p) {
  const int n = p->crossing_number();
  if (n > 30) throw std::invalid_argument("too many double points to enumerate lifts");
  std::vector<Lift> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Lift f{p, std::vector<std::uint8_t>(n)};
    for (int i = 0; i < n; ++i) f.over[i] = (m >> (n - 1 - i)) & 1;
    out.push_back(std::move(f));
  }
  return out;
}

Lift lift_from_bits(std::shared_ptr<const Projection> p, const std::string& bits) {
  if (static_cast<int>(bits.size()) != p->crossing_number())
    throw std::invalid_argument("lift needs one bit per double point");
  Lift f{std::move(p), {}};
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("lift bits must be 0 or 1");
    f.over.push_back(c == '1');
  }
  return f;
}

namespace {

void require_disjoint(const std::vector<CycleSubgraph>& cycles) {
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if (!cycles[i].disjoint_from(cycles[j])) throw RestrictError("overlapping components");
}

// Position of a dart inside its double point's quadruple.
int slot_of(const DoublePoint& dp, DartRef d) {
  for (int s = 0; s < 4; ++s)
    if (dp.darts[s] == d) return s;
  return -1;
}

}  // namespace

LinkDiagram restrict(const Lift& f, const std::vector<CycleSubgraph>& cycles) {
  require_disjoint(cycles);
  const Projection& p = *f.projection;
  std::vector<bool> selected(p.graph().edge_count(), false);
  std::vector<int> component_of_edge(p.graph().edge_count(), -1);
  for (std::size_t k = 0; k < cycles.size(); ++k)
    for (const auto& oe : cycles[k].edges()) {
      selected[oe.edge.value] = true;
      component_of_edge[oe.edge.value] = static_cast<int>(k);
    }

  LinkDiagram d;
  d.component_count = static_cast<int>(cycles.size());
  std::map<int, int> crossing_of_dp;
  for (int i = 0; i < p.crossing_number(); ++i) {
    const auto& dp = p.double_points()[i];
    if (!selected[dp.passages[0].edge.value] || !selected[dp.passages[1].edge.value]) continue;
    crossing_of_dp[i] = d.crossing_count();
    Crossing c;
    c.source = dp.name;
    const DartRef d0 = dp.darts[0];
    const Passage& first = dp.passages[0];
    const bool slot0_on_first = d0.edge == first.edge &&
                                (d0.index == 2 * first.ordinal + 1 || d0.index == 2 * first.ordinal + 2);
    const int strand02_passage = slot0_on_first ? 0 : 1;
    c.over = f.over[i] == strand02_passage ? 0 : 1;
    d.crossings.push_back(c);
  }

  for (std::size_t k = 0; k < cycles.size(); ++k) {
    // (crossing, entry slot, exit slot) along the walk
    std::vector<std::array<int, 3>> visits;
    for (const auto& oe : cycles[k].edges()) {
      const int n = p.passage_count(oe.edge);
      for (int step = 0; step < n; ++step) {
        const int i = oe.forward ? step : n - 1 - step;
        const int dpi = p.double_point_at({oe.edge, i});
        auto it = crossing_of_dp.find(dpi);
        if (it == crossing_of_dp.end()) continue;
        const auto& dp = p.double_points()[dpi];
        const DartRef before{oe.edge, oe.forward ? 2 * i + 1 : 2 * i + 2};
        const DartRef after{oe.edge, oe.forward ? 2 * i + 2 : 2 * i + 1};
        visits.push_back({it->second, slot_of(dp, before), slot_of(dp, after)});
      }
    }
    if (visits.empty()) {
      d.free_components.push_back(static_cast<int>(k));
      continue;
    }
    for (std::size_t v = 0; v < visits.size(); ++v) {
      const auto& [c, in, out] = visits[v];
      const auto& next = visits[(v + 1) % visits.size()];
      Crossing& x = d.crossings[c];
      x.outgoing[in] = false;
      x.outgoing[out] = true;
      x.component[in % 2] = static_cast<int>(k);
      x.link[out] = {next[0], next[1]};
      d.crossings[next[0]].link[next[1]] = {c, out};
    }
  }
  return d;
}

Lift restrict_lift(const Lift& f, const std::vector<CycleSubgraph>& cycles) {
  require_disjoint(cycles);
  auto sub = std::make_shared<const Projection>(restrict_projection(*f.projection, cycles));
  const Projection& p = *f.projection;
  std::map<std::string, int> index_of;
  for (int i = 0; i < p.crossing_number(); ++i) index_of[p.double_points()[i].name] = i;
  Lift out{sub, {}};
  for (const auto& dp : sub->double_points()) out.over.push_back(f.over[index_of.at(dp.name)]);
  return out;
}

std::vector<Constituent> constituents(const Lift& f, const std::vector<CycleSubgraph>& cs,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const AbstractGraph& g = f.projection->graph();
  std::vector<Constituent> out;
  for (const auto& c : cs) out.push_back({{c}, c.describe(g), restrict(f, {c})});
  for (auto [i, j] : pairs)
    out.push_back({{cs[i], cs[j]}, cs[i].describe(g) + " | " + cs[j].describe(g), restrict(f, {cs[i], cs[j]})});
  return out;
}

std::vector<Constituent> constituents(const Lift& f) {
  const auto cs = cycles(f.projection->graph());
  return constituents(f, cs, disjoint_cycle_pairs(cs));
}

}  // namespace regproj
