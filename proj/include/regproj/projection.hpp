#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "regproj/graph.hpp"

namespace regproj {

// One passage of an edge through a double point: the `ordinal`-th double
// point met when walking `edge` from its source.
struct Passage {
  EdgeId edge;
  int ordinal = 0;
  auto operator<=>(const Passage&) const = default;
};

// Arc ends along an edge are numbered from the source: index 0 sits at the
// source vertex, passage k owns indices 2k+1 (source side) and 2k+2 (target
// side), and index 2n+1 sits at the target vertex when the edge has n
// passages. Arcs pair indices (2i, 2i+1).
struct DartRef {
  EdgeId edge;
  int index = 0;
  auto operator<=>(const DartRef&) const = default;
};

struct DoublePoint {
  std::string name;
  std::array<Passage, 2> passages;
  std::vector<DartRef> darts;  // counterclockwise; 4 when valid
};

struct Violation {
  std::string code;     // e.g. "double point valence", "not spherical"
  std::string element;  // offending element name
  std::string detail;
};

// A regular projection of a graph on the sphere, held as a combinatorial
// map: branch nodes (one per vertex) and 4-valent double points, with every
// arc labeled by the edge it belongs to. The constructor accepts any data;
// `validate` reports what is wrong with it. Other operations assume a valid
// projection.
class Projection {
 public:
  Projection() = default;
  Projection(AbstractGraph graph, std::vector<std::vector<DartRef>> rotation,
             std::vector<DoublePoint> double_points);

  const AbstractGraph& graph() const { return graph_; }
  const std::vector<std::vector<DartRef>>& rotation() const { return rotation_; }
  const std::vector<DoublePoint>& double_points() const { return double_points_; }
  int crossing_number() const { return static_cast<int>(double_points_.size()); }

  int passage_count(EdgeId e) const { return passage_count_.at(e.value); }
  int dart_count() const { return dart_count_; }
  // -1 for references outside the edge's index range.
  int dart_id(DartRef d) const;
  DartRef dart_ref(int id) const { return dart_refs_.at(id); }
  static int arc_partner(int dart) { return dart ^ 1; }

  // Nodes 0..V-1 are branch nodes, V..V+cr-1 are double points.
  int node_count() const { return static_cast<int>(node_rotation_.size()); }
  int branch_node(VertexId v) const { return v.value; }
  int double_point_node(int dp) const { return static_cast<int>(graph_.vertex_count()) + dp; }
  bool is_double_point_node(int node) const {
    return node >= static_cast<int>(graph_.vertex_count());
  }
  const std::vector<int>& node_rotation(int node) const { return node_rotation_.at(node); }
  // -1 when the dart is not listed at exactly one node.
  int node_of(int dart) const { return node_of_.at(dart); }
  int next_ccw(int dart) const { return next_ccw_.at(dart); }
  int double_point_at(Passage p) const;

  // True when the dart is the source or target end of its edge.
  bool is_branch_dart(int dart) const;

  bool operator==(const Projection& o) const {
    return graph_ == o.graph_ && rotation_ == o.rotation_ && same_double_points(o);
  }

 private:
  bool same_double_points(const Projection& o) const;

  AbstractGraph graph_;
  std::vector<std::vector<DartRef>> rotation_;
  std::vector<DoublePoint> double_points_;

  std::vector<int> passage_count_;
  std::vector<int> dart_offset_;
  std::vector<DartRef> dart_refs_;
  int dart_count_ = 0;
  std::vector<std::vector<int>> node_rotation_;
  std::vector<int> node_of_;
  std::vector<int> next_ccw_;
};

std::vector<Violation> validate(const Projection& p);

// Faces as cyclic dart sequences (orbits of next_ccw after crossing an arc).
std::vector<std::vector<int>> faces(const Projection& p);

// Connected components of the image, as lists of node ids carrying darts.
std::vector<std::vector<int>> image_components(const Projection& p);

// Reverses every rotation (orientation of the sphere). An involution.
Projection mirror(const Projection& p);

// Smooths degree-2 branch nodes into their edges; double points keep their
// names, passages are renumbered along the merged edges.
Projection suppress_degree_two(const Projection& p);

// Projection of the subgraph made of the given cycles: only their edges and
// vertices survive, and only double points with both passages on them.
Projection restrict_projection(const Projection& p, const std::vector<CycleSubgraph>& cycles);

std::string dart_name(const AbstractGraph& g, DartRef d);

}  // namespace regproj
