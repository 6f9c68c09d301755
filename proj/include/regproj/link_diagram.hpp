#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace regproj {

// One end of a crossing: slots 0..3 are counterclockwise, and slots s and
// s+2 carry the same strand.
struct SlotRef {
  int crossing = -1;
  int slot = 0;
  auto operator<=>(const SlotRef&) const = default;
};

struct Crossing {
  std::array<SlotRef, 4> link;       // slot at the far end of the arc leaving each slot
  std::array<bool, 4> outgoing{};    // orientation of the strand through each slot
  int over = 0;                      // 0: strand through slots 0/2 is over; 1: slots 1/3
  std::array<int, 2> component{};    // component of strand 0/2 and of strand 1/3
  std::string source;                // name of the double point it came from
  bool operator==(const Crossing&) const = default;
};

// Oriented link diagram on the sphere. Components without crossings are
// kept as bare ids in `free_components`; the remaining pieces are 4-valent
// maps whose darts are the crossing slots.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<int> free_components;
  int component_count = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  const SlotRef& link(SlotRef s) const { return crossings.at(s.crossing).link.at(s.slot); }
  bool operator==(const LinkDiagram&) const = default;
};

inline SlotRef opposite(SlotRef s) { return {s.crossing, (s.slot + 2) % 4}; }
inline SlotRef next_ccw(SlotRef s) { return {s.crossing, (s.slot + 1) % 4}; }

// +1 or -1 with the right-hand rule.
int crossing_sign(const Crossing& c);
bool is_mixed(const Crossing& c);

// Empty when the diagram is a consistent oriented spherical map: links are
// involutive, every strand enters once and leaves once, and each connected
// piece has Euler characteristic 2.
std::vector<std::string> check_diagram(const LinkDiagram& d);

// Face boundaries of the crossing pieces as slot sequences; the face after
// slot s continues at next_ccw(link(s)).
std::vector<std::vector<SlotRef>> diagram_faces(const LinkDiagram& d);

// Same diagram with every component reversed when flip[component] is set.
LinkDiagram reorient(const LinkDiagram& d, const std::vector<bool>& flip);

// Mirror image: crossings switched.
LinkDiagram switch_crossings(const LinkDiagram& d);

// Reflection of the sphere: slot order reversed at every crossing.
LinkDiagram reflect(const LinkDiagram& d);

}  // namespace regproj
