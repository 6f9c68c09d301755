#include "regproj/reidemeister.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace regproj {

namespace {

void connect(LinkDiagram& d, SlotRef a, SlotRef b) {
  d.crossings[a.crossing].link[a.slot] = b;
  d.crossings[b.crossing].link[b.slot] = a;
}

bool out_at(const LinkDiagram& d, SlotRef s) { return d.crossings[s.crossing].outgoing[s.slot]; }
int component_at(const LinkDiagram& d, SlotRef s) { return d.crossings[s.crossing].component[s.slot % 2]; }
bool over_at(const LinkDiagram& d, SlotRef s) { return d.crossings[s.crossing].over == s.slot % 2; }

std::vector<SlotRef> face_from(const LinkDiagram& d, SlotRef start) {
  std::vector<SlotRef> face{start};
  for (SlotRef x = next_ccw(d.link(start)); x != start; x = next_ccw(d.link(x))) face.push_back(x);
  return face;
}

LinkDiagram checked(LinkDiagram d, const char* move) {
  if (auto problems = check_diagram(d); !problems.empty())
    throw std::logic_error(std::string(move) + " broke the diagram: " + problems.front());
  return d;
}

}  // namespace

LinkDiagram erase_crossings(const LinkDiagram& d, const std::vector<int>& erased) {
  const std::set<int> gone(erased.begin(), erased.end());
  std::vector<int> renumber(d.crossing_count(), -1);
  LinkDiagram out;
  out.component_count = d.component_count;
  out.free_components = d.free_components;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (gone.count(c)) continue;
    renumber[c] = out.crossing_count();
    out.crossings.push_back(d.crossings[c]);
  }
  std::set<SlotRef> visited;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (gone.count(c)) continue;
    for (int s = 0; s < 4; ++s) {
      SlotRef x = d.crossings[c].link[s];
      while (gone.count(x.crossing)) {
        visited.insert(x);
        const SlotRef through = opposite(x);
        visited.insert(through);
        x = d.link(through);
      }
      out.crossings[renumber[c]].link[s] = {renumber[x.crossing], x.slot};
    }
  }
  for (int c : gone) {
    for (int s = 0; s < 4; ++s) {
      SlotRef start{c, s};
      if (visited.count(start)) continue;
      SlotRef x = start;
      do {
        visited.insert(x);
        visited.insert(opposite(x));
        x = d.link(opposite(x));
      } while (x != start && !visited.count(x));
      out.free_components.push_back(component_at(d, start));
    }
  }
  std::sort(out.free_components.begin(), out.free_components.end());
  return out;
}

std::optional<LinkDiagram> add_kink(const LinkDiagram& d, SlotRef a, int side, int over) {
  if (a.crossing < 0 || a.crossing >= d.crossing_count()) return std::nullopt;
  LinkDiagram out = d;
  const SlotRef b = d.link(a);
  const int k = out.crossing_count();
  Crossing c;
  c.over = over;
  c.source = "k" + std::to_string(k);
  c.component = {component_at(d, a), component_at(d, a)};
  out.crossings.push_back(c);
  // Walking from a: enter slot 0, leave 2, loop back into `back`, leave `exit`.
  const int back = side == 0 ? 1 : 3;
  const int exit = side == 0 ? 3 : 1;
  connect(out, a, {k, 0});
  connect(out, {k, 2}, {k, back});
  connect(out, {k, exit}, b);
  const bool forward = out_at(d, a);
  auto& x = out.crossings[k];
  x.outgoing[0] = !forward;
  x.outgoing[2] = forward;
  x.outgoing[back] = !forward;
  x.outgoing[exit] = forward;
  return checked(std::move(out), "R1+");
}

std::optional<LinkDiagram> add_kink_free(const LinkDiagram& d, int component, int over) {
  auto it = std::find(d.free_components.begin(), d.free_components.end(), component);
  if (it == d.free_components.end()) return std::nullopt;
  LinkDiagram out = d;
  out.free_components.erase(out.free_components.begin() + (it - d.free_components.begin()));
  const int k = out.crossing_count();
  Crossing c;
  c.over = over;
  c.source = "k" + std::to_string(k);
  c.component = {component, component};
  c.outgoing = {false, false, true, true};
  out.crossings.push_back(c);
  connect(out, {k, 2}, {k, 1});
  connect(out, {k, 3}, {k, 0});
  return checked(std::move(out), "R1+");
}

std::optional<LinkDiagram> remove_kink(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.crossing_count()) return std::nullopt;
  for (int s = 0; s < 4; ++s) {
    const SlotRef t = d.crossings[c].link[s];
    if (t.crossing == c && (t.slot == (s + 1) % 4 || t.slot == (s + 3) % 4))
      return checked(erase_crossings(d, {c}), "R1-");
  }
  return std::nullopt;
}

std::optional<LinkDiagram> add_bigon(const LinkDiagram& d, SlotRef s1, SlotRef t1, bool s_over) {
  if (s1 == t1 || d.link(s1) == t1) return std::nullopt;
  const auto face = face_from(d, s1);
  if (std::find(face.begin(), face.end(), t1) == face.end()) return std::nullopt;
  const SlotRef s2 = d.link(s1);
  const SlotRef t2 = d.link(t1);
  LinkDiagram out = d;
  const int c1 = out.crossing_count();
  const int c2 = c1 + 1;
  // With s running west to east and the face below it, t comes up from the
  // face east of c1, crosses s at c2 and returns across s at c1.
  Crossing a;
  a.over = s_over ? 0 : 1;
  a.component = {component_at(d, s1), component_at(d, t1)};
  Crossing b = a;
  a.source = "k" + std::to_string(c1);
  b.source = "k" + std::to_string(c2);
  out.crossings.push_back(a);
  out.crossings.push_back(b);
  connect(out, {c1, 0}, {c2, 2});
  connect(out, {c1, 1}, {c2, 1});
  connect(out, {c1, 2}, s1);
  connect(out, {c1, 3}, t2);
  connect(out, {c2, 0}, s2);
  connect(out, {c2, 3}, t1);
  const bool sf = out_at(d, s1);
  const bool tf = out_at(d, t1);
  auto& x = out.crossings[c1];
  auto& y = out.crossings[c2];
  x.outgoing[2] = !sf; x.outgoing[0] = sf;
  y.outgoing[2] = !sf; y.outgoing[0] = sf;
  y.outgoing[3] = !tf; y.outgoing[1] = tf;
  x.outgoing[1] = !tf; x.outgoing[3] = tf;
  return checked(std::move(out), "R2+");
}

std::optional<LinkDiagram> remove_bigon(const LinkDiagram& d, SlotRef start) {
  const auto face = face_from(d, start);
  if (face.size() != 2) return std::nullopt;
  const SlotRef d0 = face[0];
  const SlotRef d1 = face[1];
  if (d0.crossing == d1.crossing) return std::nullopt;
  if (over_at(d, d0) != over_at(d, d.link(d0))) return std::nullopt;
  return checked(erase_crossings(d, {d0.crossing, d1.crossing}), "R2-");
}

std::optional<LinkDiagram> triangle_move(const LinkDiagram& d, SlotRef start) {
  const auto face = face_from(d, start);
  if (face.size() != 3) return std::nullopt;
  const std::set<int> corners{face[0].crossing, face[1].crossing, face[2].crossing};
  if (corners.size() != 3) return std::nullopt;
  bool has_top = false;
  for (const SlotRef x : face) has_top = has_top || (over_at(d, x) && over_at(d, d.link(x)));
  if (!has_top) return std::nullopt;

  // Each side of the triangle is a strand segment with two outer ends.
  std::map<SlotRef, SlotRef> partner;
  for (const SlotRef x : face) {
    const SlotRef e1 = opposite(x);
    const SlotRef e2 = opposite(d.link(x));
    partner[e1] = e2;
    partner[e2] = e1;
  }
  auto image = [&](SlotRef z) {
    auto it = partner.find(z);
    return it == partner.end() ? z : it->second;
  };
  // Turning the disk around the triangle by a half turn swaps the ends of
  // every segment and reverses the crossing order along it.
  LinkDiagram out = d;
  for (auto [y, py] : partner) {
    const SlotRef target = image(d.link(py));
    out.crossings[y.crossing].link[y.slot] = target;
    if (!partner.count(target)) out.crossings[target.crossing].link[target.slot] = y;
  }
  for (int c : corners)
    for (auto& o : out.crossings[c].outgoing) o = !o;
  return checked(std::move(out), "R3");
}

LinkDiagram random_move(const LinkDiagram& d, std::mt19937_64& rng, int soft_cap, std::string* applied) {
  std::vector<std::function<std::optional<LinkDiagram>()>> grow, shrink, keep;
  std::vector<std::string> grow_names, shrink_names, keep_names;
  auto add = [](auto& list, auto& names, std::string name, auto fn) {
    list.push_back(fn);
    names.push_back(std::move(name));
  };
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const SlotRef a{c, s};
      for (int side : {0, 1})
        for (int over : {0, 1})
          add(grow, grow_names, "R1+ arc", [&d, a, side, over] { return add_kink(d, a, side, over); });
    }
    if (remove_kink(d, c)) add(shrink, shrink_names, "R1-", [&d, c] { return remove_kink(d, c); });
  }
  for (int comp : d.free_components)
    for (int over : {0, 1})
      add(grow, grow_names, "R1+ free", [&d, comp, over] { return add_kink_free(d, comp, over); });
  for (const auto& face : diagram_faces(d)) {
    for (std::size_t i = 0; i < face.size(); ++i)
      for (std::size_t j = 0; j < face.size(); ++j) {
        if (i == j || d.link(face[i]) == face[j]) continue;
        for (bool s_over : {false, true}) {
          const SlotRef s = face[i], t = face[j];
          add(grow, grow_names, "R2+", [&d, s, t, s_over] { return add_bigon(d, s, t, s_over); });
        }
      }
    if (face.size() == 2 && remove_bigon(d, face[0]))
      add(shrink, shrink_names, "R2-", [&d, f = face[0]] { return remove_bigon(d, f); });
    if (face.size() == 3 && triangle_move(d, face[0]))
      add(keep, keep_names, "R3", [&d, f = face[0]] { return triangle_move(d, f); });
  }

  // Pick a move kind first so that the many growth locations do not swamp
  // the rare shrinking and triangle moves.
  std::vector<int> kinds;
  if (!grow.empty() && d.crossing_count() < soft_cap) kinds.push_back(0);
  if (!shrink.empty()) kinds.push_back(1);
  if (!keep.empty()) kinds.push_back(2);
  if (kinds.empty() && !grow.empty()) {
    // Stuck at the cap: only a single kink may be added.
    std::vector<std::function<std::optional<LinkDiagram>()>> kinks;
    std::vector<std::string> kink_names;
    for (std::size_t i = 0; i < grow.size(); ++i)
      if (grow_names[i].rfind("R1+", 0) == 0) add(kinks, kink_names, grow_names[i], grow[i]);
    grow = std::move(kinks);
    grow_names = std::move(kink_names);
    kinds.push_back(0);
  }
  if (kinds.empty()) return d;
  const int kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
  auto& list = kind == 0 ? grow : kind == 1 ? shrink : keep;
  auto& names = kind == 0 ? grow_names : kind == 1 ? shrink_names : keep_names;
  const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng);
  auto result = list[pick]();
  if (!result) throw std::logic_error("selected move is not applicable");
  if (applied) *applied = names[pick];
  return *std::move(result);
}

}  // namespace regproj
