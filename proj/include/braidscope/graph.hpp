#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "braidscope/errors.hpp"

namespace braidscope {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId a;
  VertexId b;
};

struct Incidence {
  EdgeId edge;
  VertexId neighbor;
};

/// Finite multigraph standing in for a compact 1-dimensional CW-complex.
/// Vertices and edges carry unique names; ids are dense and stable.
/// A loop appears twice in the incidence list of its vertex.
class Graph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(VertexId a, VertexId b, std::string name);

  /// Name derived from `base` that no vertex (resp. edge) uses yet.
  std::string fresh_vertex_name(std::string_view base) const;
  std::string fresh_edge_name(std::string_view base) const;

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(adjacency_.at(v).size()); }
  VertexId other_end(EdgeId e, VertexId v) const;
  /// Edge joining u and v in a simple graph.
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

  bool is_simple() const;
  bool is_loop(EdgeId e) const { return edges_[e].a == edges_[e].b; }
  /// True when the two edges share no endpoint (adjacency in the coloring graph).
  bool edges_disjoint(EdgeId e, EdgeId f) const;

  /// Component label per vertex, labels ordered by smallest member.
  std::vector<int> component_labels() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// Vertex subset plus edges of the parent with both endpoints in the subset.
class Subgraph {
 public:
  Subgraph() = default;
  static Subgraph whole(const Graph& g);
  static Subgraph induced(const Graph& g, std::span<const VertexId> vertices);
  /// Edges plus their endpoints plus any extra vertices.
  static Subgraph from_edges(const Graph& g, std::span<const EdgeId> edges,
                             std::span<const VertexId> extra_vertices = {});

  const Graph& parent() const { return *parent_; }
  bool contains_vertex(VertexId v) const { return vertex_mask_[v]; }
  bool contains_edge(EdgeId e) const { return edge_mask_[e]; }
  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  int vertex_count() const;
  int edge_count() const;
  int component_count() const;
  bool is_connected() const { return component_count() == 1; }
  bool disjoint_from(const Subgraph& other) const;
  /// Materializes the subgraph with the parent's names.
  Graph to_graph() const;

 private:
  const Graph* parent_ = nullptr;
  std::vector<bool> vertex_mask_;
  std::vector<bool> edge_mask_;
};

/// Simple cycle: vertices in cyclic order, edges[i] joins vertices[i] and
/// vertices[i+1 mod length].
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(VertexId v) const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

enum class ShapeKind {
  Segment,
  Cycle,
  Star,
  Theta,
  HGraph,
  CycleWithTwoRays,
  Rose,
  Sun,
  Pulsar,
  Tree,
  General,
};

std::string_view to_string(ShapeKind kind);

/// Topological type of a connected graph with its defining decomposition.
/// `cycles` is the number of petals (rose), glued cycles (pulsar) or the
/// first Betti number otherwise; `rays` counts pendant paths; `centers` names
/// the essential vertices of the smoothed graph.
struct Shape {
  ShapeKind kind = ShapeKind::General;
  int arms = 0;
  int cycles = 0;
  int rays = 0;
  std::vector<std::string> centers;

  /// Rose graphs in the wide sense: segments, cycles and stars included.
  bool is_rose() const;
  bool is_star_with_three_arms() const { return kind == ShapeKind::Star && arms == 3; }
};

/// Maximal path whose interior vertices have degree two.
struct Branch {
  VertexId from;
  VertexId to;
  std::vector<EdgeId> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

/// Vertices kept by smoothing: degree != 2, plus the smallest vertex of each
/// component consisting only of degree-2 vertices.
std::vector<bool> smoothing_anchors(const Graph& g);
std::vector<Branch> branches(const Graph& g);

Graph normalize(const Graph& g);
/// Subdivides edge `e`; the first half keeps the id and name of `e`.
Graph subdivide_edge(const Graph& g, EdgeId e);
Graph subdivide_for(const Graph& g, int particles);
Graph smooth(const Graph& g);
Shape classify_shape(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
std::vector<Cycle> simple_cycles(const Graph& g, const Limits& limits = Limits::from_env());
int first_betti(const Subgraph& s);
int first_betti(const Graph& g);

/// Built-in fixtures.
namespace families {
Graph complete(int m);
Graph complete_bipartite(int p, int q);
Graph cycle(int length);
Graph path(int vertices);
Graph star(int arms, int arm_length = 1);
/// `petals` cycles of the given length and `rays` pendant edges at one vertex.
Graph rose(int petals, int rays, int petal_length = 3);
}  // namespace families

}  // namespace braidscope
