#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regproj {

struct VertexId {
  int value = -1;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  int value = -1;
  auto operator<=>(const EdgeId&) const = default;
};

struct Edge {
  std::string name;
  VertexId source;
  VertexId target;

  bool is_loop() const { return source == target; }
  bool operator==(const Edge&) const = default;
};

struct EdgeSpec {
  std::string name;
  std::string source;
  std::string target;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite multigraph with loops. Vertex and edge names are unique; ids are
// dense indices in declaration order.
class AbstractGraph {
 public:
  AbstractGraph() = default;
  AbstractGraph(std::vector<std::string> vertex_names, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v.value); }
  const Edge& edge(EdgeId e) const { return edges_.at(e.value); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;

  // Loops count twice.
  int degree(VertexId v) const;
  std::vector<EdgeId> incident_edges(VertexId v) const;

  bool shares_endpoint(EdgeId a, EdgeId b) const;

  bool operator==(const AbstractGraph&) const = default;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
};

struct OrientedEdge {
  EdgeId edge;
  bool forward = true;

  auto operator<=>(const OrientedEdge&) const = default;
};

// A subgraph homeomorphic to a circle, stored as a closed walk in canonical
// form: the lexicographically least rotation of the smaller traversal
// direction.
class CycleSubgraph {
 public:
  CycleSubgraph() = default;
  // Throws GraphError unless the walk is closed, edge-simple and vertex-simple.
  CycleSubgraph(const AbstractGraph& g, std::vector<OrientedEdge> walk);

  const std::vector<OrientedEdge>& edges() const { return edges_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool contains_edge(EdgeId e) const;
  bool contains_vertex(VertexId v) const;
  // +1 if the walk traverses e source->target, -1 if reversed, 0 if absent.
  int direction_of(EdgeId e) const;
  bool disjoint_from(const CycleSubgraph& other) const;

  std::string describe(const AbstractGraph& g) const;

  bool operator==(const CycleSubgraph& o) const { return edges_ == o.edges_; }
  bool operator<(const CycleSubgraph& o) const { return edges_ < o.edges_; }

 private:
  std::vector<OrientedEdge> edges_;
  std::vector<VertexId> vertices_;  // sorted
};

std::vector<CycleSubgraph> cycles(const AbstractGraph& g);

std::vector<std::pair<CycleSubgraph, CycleSubgraph>> disjoint_cycle_pairs(const AbstractGraph& g);
std::vector<std::pair<std::size_t, std::size_t>> disjoint_cycle_pairs(
    const std::vector<CycleSubgraph>& cs);

// Boyer-Myrvold via Boost.Graph on the underlying simple graph; O(V + E).
bool is_planar(const AbstractGraph& g);

struct Suppression {
  AbstractGraph graph;
  std::vector<EdgeId> edge_map;                  // original edge -> merged edge
  std::vector<std::optional<VertexId>> vertex_map;  // nullopt for smoothed vertices
  std::vector<std::vector<OrientedEdge>> chains;    // merged edge -> original walk
};

// Smooths every degree-2 vertex except one vertex per isolated circle.
Suppression suppress_degree_two(const AbstractGraph& g);

}  // namespace regproj
