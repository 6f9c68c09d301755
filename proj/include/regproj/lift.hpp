#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "regproj/link_diagram.hpp"
#include "regproj/projection.hpp"

namespace regproj {

// A projection with a crossing choice at every double point. over[i] is the
// index (0 or 1) into double_points()[i].passages of the passage on top.
struct Lift {
  std::shared_ptr<const Projection> projection;
  std::vector<std::uint8_t> over;

  // One character per double point, e.g. "010".
  std::string bits() const;
};

// All 2^cr lifts in lexicographic order of their bit strings.
std::vector<Lift> enumerate_lifts(std::shared_ptr<const Projection> p);
Lift lift_from_bits(std::shared_ptr<const Projection> p, const std::string& bits);

class RestrictError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Diagram of the selected cycles (one component each, oriented along the
// cycle walk). Double points with a passage off the selection disappear.
// Throws RestrictError("overlapping components") for non-disjoint cycles.
LinkDiagram restrict(const Lift& f, const std::vector<CycleSubgraph>& cycles);

// The lift induced on restrict_projection(p, cycles).
Lift restrict_lift(const Lift& f, const std::vector<CycleSubgraph>& cycles);

struct Constituent {
  std::vector<CycleSubgraph> cycles;  // 1 or 2
  std::string label;
  LinkDiagram diagram;
};

// Knot constituents for every cycle, then 2-component constituents for every
// disjoint pair, in the order of cycles() and disjoint_cycle_pairs().
std::vector<Constituent> constituents(const Lift& f);

// Same, with cycle enumeration hoisted out for callers iterating over lifts.
std::vector<Constituent> constituents(const Lift& f, const std::vector<CycleSubgraph>& cycles,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace regproj
