#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidscope/errors.hpp"
#include "braidscope/graph.hpp"

namespace braidscope {

/// Sorted set of occupied vertices.
using Configuration = std::vector<VertexId>;

/// Cube of UC_n: pairwise disjoint moving edges (sorted by id) plus the
/// stationary vertices (sorted), which avoid every moving endpoint.
struct Cube {
  std::vector<EdgeId> moving;
  std::vector<VertexId> stationary;

  int dimension() const { return static_cast<int>(moving.size()); }
  friend bool operator==(const Cube&, const Cube&) = default;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

struct CubeHash {
  std::size_t operator()(const Cube& c) const noexcept;
};

/// Facet of `c` obtained by parking moving edge `i` at its first endpoint
/// (`upper == false`) or its second endpoint.
Cube facet(const Graph& g, const Cube& c, int i, bool upper);

class CubeComplex {
 public:
  /// Enumerates every cube of dimension <= min(n, max_dim).
  static CubeComplex build(const Graph& g, int particles, std::optional<int> max_dim = std::nullopt,
                           const Limits& limits = Limits::from_env());

  const Graph& graph() const { return graph_; }
  int particles() const { return particles_; }
  int top_dimension() const { return top_dimension_; }
  bool is_full() const { return top_dimension_ == particles_; }

  const std::vector<Cube>& cubes(int d) const { return cubes_.at(d); }
  std::size_t count(int d) const { return d < 0 || d > top_dimension_ ? 0 : cubes_[d].size(); }
  std::vector<std::uint64_t> f_vector() const;

  std::optional<int> find(const Cube& c) const;
  std::optional<int> find_vertex(const Configuration& s) const;
  const Configuration& configuration(int vertex) const { return cubes_[0][vertex].stationary; }

  /// Endpoints of a 1-cube: the configuration with the particle on the
  /// first endpoint of its moving edge, then the one with it on the second.
  std::pair<int, int> endpoints(int one_cube) const;

  int component_of(int vertex) const { return component_[vertex]; }
  int component_count() const { return component_count_; }

  /// Deletes a cube without touching its faces or cofaces. Test hook for
  /// building complexes that violate the cube-complex axioms.
  void remove_cube(int d, int index);

 private:
  void reindex(int d);
  void label_components();

  Graph graph_;
  int particles_ = 0;
  int top_dimension_ = 0;
  std::vector<std::vector<Cube>> cubes_;
  std::vector<std::unordered_map<Cube, int, CubeHash>> index_;
  std::vector<int> component_;
  int component_count_ = 0;
};

/// Alternating sum of cube counts. Requires a complex built to dimension n.
std::int64_t euler_characteristic(const CubeComplex& x);

/// Moves available at a vertex: one per 1-cube incident to it.
struct LinkVertex {
  int one_cube;
  VertexId from;
  VertexId to;
  EdgeId edge;
};
std::vector<LinkVertex> link_vertices(const CubeComplex& x, int vertex);

struct NpcReport {
  bool pass = true;
  std::optional<int> vertex;
  /// 1-cubes of the offending clique, or of the cube whose face is missing.
  std::vector<int> clique;
  std::string detail;
};

/// Checks that faces of cubes are cubes and that every vertex link is a flag
/// simplicial complex.
NpcReport verify_npc(const CubeComplex& x);

struct SurfaceReport {
  bool is_surface = false;
  /// Per vertex: length of the link when it is a single cycle, else 0.
  std::vector<int> link_cycle_lengths;
};

SurfaceReport is_surface(const CubeComplex& x);

/// Number of k-subsets of an m-set, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);

}  // namespace braidscope
