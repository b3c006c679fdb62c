#pragma once

#include "braidscope/classifier.hpp"
#include "fixtures.hpp"

namespace braidscope::testing {

/// Two bouquets (two triangles at one center, one triangle at the other) joined by a path of length three.
inline Graph joined_bouquets() {
  return from_pairs(12, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0},
                         {5, 6}, {6, 7}, {7, 5},
                         {0, 8}, {8, 9}, {9, 5},
                         {5, 10}, {10, 11}, {11, 5}});
}

/// The union of the two bouquets.
inline PeripheralCollection joined_bouquets_collection(const Graph& g) {
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto a = g.vertex_name(g.edge(e).a), b = g.vertex_name(g.edge(e).b);
    if (a != "9" && b != "9" && a != "10" && b != "10") edges.push_back(e);
  }
  return {Subgraph::from_edges(g, edges)};
}

/// Square 1-2-3-4 with two extra vertices joined to every square vertex.
inline Graph square_with_two_apexes() {
  return from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 1}, {5, 2}, {5, 3}});
}

/// Every pair of vertex-disjoint simple cycles of the given length.
inline PeripheralCollection disjoint_cycle_pairs(const Graph& g, int length) {
  const auto cycles = simple_cycles(g);
  PeripheralCollection out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].length() != length) continue;
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[j].length() != length) continue;
      bool disjoint = true;
      for (auto v : cycles[i].vertices) disjoint = disjoint && !cycles[j].contains(v);
      if (!disjoint) continue;
      std::vector<EdgeId> edges = cycles[i].edges;
      edges.insert(edges.end(), cycles[j].edges.begin(), cycles[j].edges.end());
      out.push_back(Subgraph::from_edges(g, edges));
    }
  }
  return out;
}

}  // namespace braidscope::testing
