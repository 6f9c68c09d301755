#pragma once

#include <optional>
#include <random>
#include <string>

#include "regproj/link_diagram.hpp"

namespace regproj {

// Local moves on LinkDiagram. Each returns nullopt when the move does not
// apply at the given location. Arcs are named by the slot they leave from;
// faces by any slot on their boundary (see diagram_faces).

// Kink on the arc leaving `arc`; side picks the face the loop lies in.
std::optional<LinkDiagram> add_kink(const LinkDiagram& d, SlotRef arc, int side, int over);
// Kink on a crossingless component.
std::optional<LinkDiagram> add_kink_free(const LinkDiagram& d, int component, int over);
std::optional<LinkDiagram> remove_kink(const LinkDiagram& d, int crossing);

// Pushes the arc leaving `t` across the arc leaving `s`; both must bound the
// face traced from s.
std::optional<LinkDiagram> add_bigon(const LinkDiagram& d, SlotRef s, SlotRef t, bool s_over);
std::optional<LinkDiagram> remove_bigon(const LinkDiagram& d, SlotRef face);
std::optional<LinkDiagram> triangle_move(const LinkDiagram& d, SlotRef face);

// Erases crossings, letting each strand run straight through.
LinkDiagram erase_crossings(const LinkDiagram& d, const std::vector<int>& crossings);

// Applies one uniformly chosen applicable move. Diagrams at or above
// `soft_cap` crossings only shrink or keep size, except that a diagram with
// no such move takes a kink, so results stay within soft_cap + 1. `applied`
// receives a short description.
LinkDiagram random_move(const LinkDiagram& d, std::mt19937_64& rng, int soft_cap,
                        std::string* applied = nullptr);

}  // namespace regproj
