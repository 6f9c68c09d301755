#include "regproj/link_diagram.hpp"

#include <map>
#include <numeric>
#include <set>

namespace regproj {

int crossing_sign(const Crossing& c) {
  const int dir02 = c.outgoing[2] ? 1 : -1;
  const int dir13 = c.outgoing[3] ? 1 : -1;
  return dir02 * dir13 * (c.over == 0 ? 1 : -1);
}

bool is_mixed(const Crossing& c) { return c.component[0] != c.component[1]; }

std::vector<std::vector<SlotRef>> diagram_faces(const LinkDiagram& d) {
  std::vector<std::vector<SlotRef>> out;
  std::set<SlotRef> seen;
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      SlotRef start{c, s};
      if (seen.count(start)) continue;
      std::vector<SlotRef> face;
      SlotRef x = start;
      while (seen.insert(x).second) {
        face.push_back(x);
        x = next_ccw(d.link(x));
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<std::string> check_diagram(const LinkDiagram& d) {
  std::vector<std::string> out;
  const int n = d.crossing_count();
  for (int c = 0; c < n; ++c) {
    const Crossing& x = d.crossings[c];
    for (int s = 0; s < 4; ++s) {
      const SlotRef t = x.link[s];
      if (t.crossing < 0 || t.crossing >= n || t.slot < 0 || t.slot > 3) {
        out.push_back("dangling link at crossing " + std::to_string(c));
        return out;
      }
      if (d.link(t) != SlotRef{c, s}) out.push_back("link not involutive at crossing " + std::to_string(c));
      if (x.outgoing[s] == d.crossings[t.crossing].outgoing[t.slot])
        out.push_back("orientation clash at crossing " + std::to_string(c));
      if (x.component[s % 2] != d.crossings[t.crossing].component[t.slot % 2])
        out.push_back("component clash at crossing " + std::to_string(c));
    }
    if (x.outgoing[0] == x.outgoing[2] || x.outgoing[1] == x.outgoing[3])
      out.push_back("strand direction at crossing " + std::to_string(c));
  }
  if (!out.empty()) return out;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) parent[find(c)] = find(d.crossings[c].link[s].crossing);
  std::map<int, long> euler;
  for (int c = 0; c < n; ++c) euler[find(c)] += 1 - 2;  // V - E, four half-edges per crossing
  for (const auto& f : diagram_faces(d)) euler[find(f.front().crossing)] += 1;
  for (auto [root, chi] : euler)
    if (chi != 2) out.push_back("piece at crossing " + std::to_string(root) + " has Euler characteristic " + std::to_string(chi));
  return out;
}

LinkDiagram reorient(const LinkDiagram& d, const std::vector<bool>& flip) {
  LinkDiagram out = d;
  for (auto& c : out.crossings)
    for (int s = 0; s < 4; ++s)
      if (flip.at(c.component[s % 2])) c.outgoing[s] = !c.outgoing[s];
  return out;
}

LinkDiagram switch_crossings(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& c : out.crossings) c.over = 1 - c.over;
  return out;
}

LinkDiagram reflect(const LinkDiagram& d) {
  auto m = [](int s) { return (4 - s) % 4; };
  LinkDiagram out = d;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& c = d.crossings[i];
    Crossing& r = out.crossings[i];
    for (int s = 0; s < 4; ++s) {
      r.link[m(s)] = {c.link[s].crossing, m(c.link[s].slot)};
      r.outgoing[m(s)] = c.outgoing[s];
    }
  }
  return out;
}

}  // namespace regproj
