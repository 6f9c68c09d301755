#pragma once

#include <functional>
#include <string>
#include <vector>

#include "regproj/projection.hpp"

namespace regproj {

enum class GraphFamily { Circle, Theta, Handcuff, K4, TwoUnknots };

std::string to_string(GraphFamily f);
const std::vector<GraphFamily>& all_families();
AbstractGraph family_graph(GraphFamily f);

// Visits every valid projection of the family graph with exactly `cr` double
// points, in a fixed order: passage counts per edge, then pairings of the
// passages, then the crossing rotation at each double point, then vertex
// rotations. Distinct visits are distinct labeled maps.
void for_each_projection(GraphFamily family, int cr, const std::function<void(const Projection&)>& visit);

// All projections with cr <= max_cr (max_cr <= 3).
std::vector<Projection> generate_corpus(GraphFamily family, int max_cr);

}  // namespace regproj
