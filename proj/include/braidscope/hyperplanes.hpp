#pragma once

#include <string>
#include <vector>

#include "braidscope/config_space.hpp"

namespace braidscope {

/// Class of 1-cubes under square-parallelism. Every member moves the same
/// Γ-edge (`color`); `configurations` lists the stationary (n-1)-sets of the
/// members in sorted order, which identifies the hyperplane.
struct Hyperplane {
  EdgeId color = -1;
  std::vector<Configuration> configurations;
  /// 1-cube indices; empty when computed without a complex.
  std::vector<int> members;

  friend bool same_hyperplane(const Hyperplane& a, const Hyperplane& b) {
    return a.color == b.color && a.configurations == b.configurations;
  }
};

/// Breadth-first search through squares. Sorted by color, then configurations.
std::vector<Hyperplane> hyperplanes_by_bfs(const CubeComplex& x);

/// One hyperplane per component of UC_{n-1}(Γ minus both endpoints of e), for
/// each edge e. Same order as the search route.
std::vector<Hyperplane> hyperplanes_by_components(const Graph& g, int particles,
                                                  const Limits& limits = Limits::from_env());

/// Δ: one vertex per edge of g (same names), adjacent when vertex-disjoint.
Graph coloring_graph(const Graph& g);

struct ColoringReport {
  bool pass = true;
  /// 1..4 for the first violated axiom, 0 when all hold.
  int failed_axiom = 0;
  std::string detail;
};

/// Colors each oriented hyperplane by the oriented Γ-edge its members move
/// and checks the four special-coloring axioms.
ColoringReport verify_special_coloring(const CubeComplex& x);
ColoringReport verify_special_coloring(const CubeComplex& x, const std::vector<Hyperplane>& hyperplanes);

}  // namespace braidscope
