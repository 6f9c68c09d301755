#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "regproj/invariants.hpp"
#include "regproj/lift.hpp"
#include "regproj/projection.hpp"

namespace regproj {

enum class DoublePointType { TypeS, TypeA, TypeD };
std::string to_string(DoublePointType t);

// Raised when a decision is requested outside the range where it is exact:
// "out of theorem range", "planarity required", "type mismatch".
class DecisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Typed after smoothing degree-two vertices, so subdivision never changes it.
DoublePointType double_point_type(const Projection& p, int double_point);
std::vector<DoublePointType> double_point_types(const Projection& p);

struct TypeCensus {
  int s = 0, a = 0, d = 0;
};
TypeCensus type_census(const Projection& p);

struct RegionEnd {
  EdgeId edge;
  VertexId vertex;
  bool crossing_edge = false;  // end of an edge that crosses the cycle
};

struct ResidualPiece {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  std::vector<RegionEnd> ends;
};

struct Region {
  std::vector<int> boundary;  // face of the cycle's own projection, as dart ids
  std::vector<ResidualPiece> pieces;
};

struct RegionDecomposition {
  CycleSubgraph cycle;
  Projection cycle_projection;        // the cycle alone
  std::vector<EdgeId> crossing_edges; // edges off the cycle meeting it in double points
  std::vector<Region> regions;
  // Pieces in image components that do not touch the cycle; the map does not
  // record which region holds them.
  std::vector<ResidualPiece> unlocated;
};

RegionDecomposition regions_of_cycle(const Projection& p, const CycleSubgraph& gamma);

// Double points with exactly one passage on the cycle.
int interferency(const Projection& p, const CycleSubgraph& gamma);

// Sufficient condition for a trivialization disk in every lift: the cycle's
// own projection is not the trefoil shadow and interferency <= 1. Cycles
// with more than three self double points get false.
bool disk_certificate(const Projection& p, const CycleSubgraph& gamma);

struct ConstituentEvidence {
  std::string subgraph;
  LinkClass link_class;
};

struct LiftVerdict {
  std::string bits;
  std::vector<ConstituentEvidence> nontrivial;  // Hopf and trefoil constituents
  std::vector<LinkClass> classes;               // every constituent, in order
  bool trivial = false;
  bool totally_free = false;
};

// Classifies every constituent of every lift; `jobs` > 1 spreads lifts over
// threads. The result is ordered like enumerate_lifts.
std::vector<LiftVerdict> analyze_lifts(const Projection& p, int jobs = 1);

// A lift is totally free when no constituent is a Hopf link or a trefoil.
// Exact for cr <= 3 (for larger cr: DecisionError "out of theorem range").
// The converse direction relies on the standard facts that trivial spatial
// graphs have trivial constituents and that Hopf link and trefoil groups are
// not free.
bool totally_free(const Lift& f);

// Same test, additionally requiring a planar graph ("planarity required").
bool lift_trivial(const Lift& f);

struct DecisionReport {
  int crossing_number = 0;
  std::vector<DoublePointType> types;
  TypeCensus census;
  std::vector<LiftVerdict> lifts;
  bool knotted = false;
  std::string witness;  // least trivial lift when not knotted
};

// Knotted iff no lift is trivial. Planar graphs with cr <= 3 only.
DecisionReport projection_knotted(const Projection& p, int jobs = 1);

// Smooths a Type-A double point so that the result is again a projection of
// the same graph: each edge keeps the half at the shared vertex and takes
// over the far half of the other edge. Works on the reduced projection.
Projection smooth_type_a(const Projection& p, int double_point);

}  // namespace regproj
