#pragma once

#include <random>
#include <string>
#include <vector>

#include "braidscope/graph.hpp"

namespace braidscope::testing {

inline Graph from_pairs(int vertices, const std::vector<std::pair<int, int>>& pairs) {
  Graph g;
  for (int v = 1; v <= vertices; ++v) g.add_vertex(std::to_string(v));
  int id = 1;
  for (auto [a, b] : pairs) g.add_edge(a, b, std::to_string(id++));
  return g;
}

/// Two triangles sharing one vertex.
inline Graph bowtie() { return from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

/// Two triangles sharing one edge.
inline Graph diamond() { return from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}}); }

inline Graph two_triangles() { return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

/// Two degree-3 vertices joined by a segment, two leaves at each.
inline Graph h_graph() { return from_pairs(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

/// Cycle of the given length with one pendant edge at each listed position.
inline Graph cycle_with_rays(int length, const std::vector<int>& at) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < length; ++i) pairs.emplace_back(i, (i + 1) % length);
  int next = length;
  for (int p : at) pairs.emplace_back(p, next++);
  return from_pairs(next, pairs);
}

/// Tree with two essential vertices of degrees 3 and 4.
inline Graph spider_tree() {
  return from_pairs(9, {{0, 1}, {1, 2}, {1, 3}, {0, 4}, {0, 5}, {4, 6}, {6, 7}, {6, 8}});
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return from_pairs(10, pairs);
}

/// Random spanning tree plus independent extra edges, so always connected.
inline Graph random_connected_graph(std::mt19937& rng, int vertices, double extra) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<bool>> used(vertices, std::vector<bool>(vertices, false));
  for (int v = 1; v < vertices; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    pairs.emplace_back(u, v);
    used[u][v] = used[v][u] = true;
  }
  std::bernoulli_distribution coin(extra);
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v)
      if (!used[u][v] && coin(rng)) pairs.emplace_back(u, v);
  return from_pairs(vertices, pairs);
}

}  // namespace braidscope::testing
