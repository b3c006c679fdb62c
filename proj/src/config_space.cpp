#include "braidscope/config_space.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include <boost/container_hash/hash.hpp>

#include "braidscope/detail/disjoint_sets.hpp"

namespace braidscope {

std::size_t CubeHash::operator()(const Cube& c) const noexcept {
  std::size_t seed = c.moving.size();
  boost::hash_range(seed, c.moving.begin(), c.moving.end());
  boost::hash_range(seed, c.stationary.begin(), c.stationary.end());
  return seed;
}

Cube facet(const Graph& g, const Cube& c, int i, bool upper) {
  Cube out;
  out.moving.reserve(c.moving.size() - 1);
  for (int j = 0; j < c.dimension(); ++j)
    if (j != i) out.moving.push_back(c.moving[j]);
  const auto& e = g.edge(c.moving[i]);
  const VertexId parked = upper ? e.b : e.a;
  out.stationary = c.stationary;
  out.stationary.insert(std::upper_bound(out.stationary.begin(), out.stationary.end(), parked), parked);
  return out;
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  // Exact in 128 bits before the division at each step.
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (m - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

CubeComplex CubeComplex::build(const Graph& g, int particles, std::optional<int> max_dim, const Limits& limits) {
  if (particles < 1) throw PreconditionError("particle count must be at least 1");
  if (!g.is_simple()) throw PreconditionError("configuration spaces are built on normalized (simple) graphs");
  if (g.vertex_count() < particles)
    throw PreconditionError("graph has " + std::to_string(g.vertex_count()) + " vertices, fewer than " +
                            std::to_string(particles) + " particles");
  if (max_dim && *max_dim < 0) throw PreconditionError("dimension cap must be nonnegative");
  const auto vertices = binomial(g.vertex_count(), particles);
  if (vertices > limits.max_cells)
    throw ResourceLimit("UC_" + std::to_string(particles) + " has " + std::to_string(vertices) +
                        " vertices, above the cell cap of " + std::to_string(limits.max_cells));

  CubeComplex x;
  x.graph_ = g;
  x.particles_ = particles;
  x.top_dimension_ = std::min(particles, max_dim.value_or(particles));
  x.cubes_.resize(x.top_dimension_ + 1);
  x.index_.resize(x.top_dimension_ + 1);

  std::uint64_t total = 0;
  const int n = g.vertex_count();
  std::vector<int> blocked(n, 0);
  std::vector<EdgeId> moving;
  std::vector<VertexId> stationary;

  for (int d = 0; d <= x.top_dimension_; ++d) {
    auto& out = x.cubes_[d];
    std::function<void(VertexId)> choose_stationary = [&](VertexId from) {
      if (static_cast<int>(stationary.size()) == particles - d) {
        if (++total > limits.max_cells)
          throw ResourceLimit("cube count exceeds the cell cap of " + std::to_string(limits.max_cells));
        out.push_back({moving, stationary});
        return;
      }
      for (VertexId v = from; v < n; ++v) {
        if (blocked[v] != 0) continue;
        stationary.push_back(v);
        choose_stationary(v + 1);
        stationary.pop_back();
      }
    };
    std::function<void(EdgeId)> choose_moving = [&](EdgeId from) {
      if (static_cast<int>(moving.size()) == d) {
        choose_stationary(0);
        return;
      }
      for (EdgeId e = from; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (blocked[ed.a] != 0 || blocked[ed.b] != 0) continue;
        ++blocked[ed.a];
        ++blocked[ed.b];
        moving.push_back(e);
        choose_moving(e + 1);
        moving.pop_back();
        --blocked[ed.a];
        --blocked[ed.b];
      }
    };
    choose_moving(0);
    x.reindex(d);
  }
  x.label_components();
  return x;
}

void CubeComplex::reindex(int d) {
  auto& index = index_[d];
  index.clear();
  index.reserve(cubes_[d].size());
  for (int i = 0; i < static_cast<int>(cubes_[d].size()); ++i) index.emplace(cubes_[d][i], i);
}

void CubeComplex::label_components() {
  const int vertices = static_cast<int>(cubes_[0].size());
  detail::DisjointSets sets(vertices);
  if (top_dimension_ >= 1) {
    for (int i = 0; i < static_cast<int>(cubes_[1].size()); ++i) {
      const auto ends = endpoints(i);
      if (ends.first >= 0 && ends.second >= 0) sets.unite(ends.first, ends.second);
    }
  }
  component_.assign(vertices, -1);
  component_count_ = 0;
  std::unordered_map<int, int> label;
  for (int v = 0; v < vertices; ++v) {
    auto [it, inserted] = label.emplace(sets.find(v), component_count_);
    if (inserted) ++component_count_;
    component_[v] = it->second;
  }
}

std::vector<std::uint64_t> CubeComplex::f_vector() const {
  std::vector<std::uint64_t> out;
  for (const auto& level : cubes_) out.push_back(level.size());
  return out;
}

std::optional<int> CubeComplex::find(const Cube& c) const {
  const int d = c.dimension();
  if (d > top_dimension_) return std::nullopt;
  if (auto it = index_[d].find(c); it != index_[d].end()) return it->second;
  return std::nullopt;
}

std::optional<int> CubeComplex::find_vertex(const Configuration& s) const { return find(Cube{{}, s}); }

std::pair<int, int> CubeComplex::endpoints(int one_cube) const {
  const auto& c = cubes_.at(1).at(one_cube);
  return {find(facet(graph_, c, 0, false)).value_or(-1), find(facet(graph_, c, 0, true)).value_or(-1)};
}

void CubeComplex::remove_cube(int d, int index) {
  auto& level = cubes_.at(d);
  level.erase(level.begin() + index);
  reindex(d);
  if (d <= 1) label_components();
}

std::int64_t euler_characteristic(const CubeComplex& x) {
  if (!x.is_full()) throw PreconditionError("Euler characteristic needs a complex built to dimension n");
  std::int64_t chi = 0;
  for (int d = 0; d <= x.top_dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(x.count(d));
  return chi;
}

std::vector<LinkVertex> link_vertices(const CubeComplex& x, int vertex) {
  const auto& g = x.graph();
  const auto& s = x.configuration(vertex);
  std::vector<LinkVertex> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const VertexId from = s[k];
    Configuration rest = s;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    for (const auto& inc : g.incident(from)) {
      if (std::binary_search(s.begin(), s.end(), inc.neighbor)) continue;
      if (auto id = x.find(Cube{{inc.edge}, rest})) out.push_back({*id, from, inc.neighbor, inc.edge});
    }
  }
  std::sort(out.begin(), out.end(), [](const LinkVertex& a, const LinkVertex& b) { return a.one_cube < b.one_cube; });
  return out;
}

namespace {

/// Cube spanned at configuration `s` by the given moves, if it exists.
std::optional<int> spanned_cube(const CubeComplex& x, const Configuration& s, const std::vector<const LinkVertex*>& moves) {
  Cube c;
  c.stationary = s;
  for (const auto* m : moves) {
    const auto at = std::find(c.stationary.begin(), c.stationary.end(), m->from);
    if (at == c.stationary.end()) return std::nullopt;
    c.moving.push_back(m->edge);
    c.stationary.erase(at);
  }
  std::sort(c.moving.begin(), c.moving.end());
  return x.find(c);
}

}  // namespace

NpcReport verify_npc(const CubeComplex& x) {
  if (!x.is_full()) throw PreconditionError("verify_npc needs a complex built to dimension n");
  const auto& g = x.graph();
  NpcReport report;

  for (int d = 1; d <= x.top_dimension(); ++d) {
    for (int i = 0; i < static_cast<int>(x.count(d)); ++i) {
      const auto& c = x.cubes(d)[i];
      for (int k = 0; k < d; ++k) {
        for (bool upper : {false, true}) {
          if (x.find(facet(g, c, k, upper))) continue;
          report.pass = false;
          report.detail = "a facet of a " + std::to_string(d) + "-cube is missing";
          if (d == 1) report.clique = {i};
          return report;
        }
      }
    }
  }

  for (int v = 0; v < static_cast<int>(x.count(0)); ++v) {
    const auto& s = x.configuration(v);
    const auto link = link_vertices(x, v);
    const int m = static_cast<int>(link.size());
    std::vector<std::vector<bool>> adjacent(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        adjacent[a][b] = adjacent[b][a] = spanned_cube(x, s, {&link[a], &link[b]}).has_value();

    // Grow cliques in increasing order and demand a cube for each.
    std::vector<int> clique;
    std::function<bool(int)> extend = [&](int from) {
      for (int c = from; c < m; ++c) {
        bool fits = true;
        for (int member : clique) fits = fits && adjacent[member][c];
        if (!fits) continue;
        clique.push_back(c);
        if (clique.size() >= 3) {
          std::vector<const LinkVertex*> moves;
          for (int member : clique) moves.push_back(&link[member]);
          if (!spanned_cube(x, s, moves)) return false;
        }
        if (!extend(c + 1)) return false;
        clique.pop_back();
      }
      return true;
    };
    if (!extend(0)) {
      report.pass = false;
      report.vertex = v;
      for (int member : clique) report.clique.push_back(link[member].one_cube);
      report.detail = "link clique of size " + std::to_string(clique.size()) + " spans no cube";
      return report;
    }
  }
  return report;
}

SurfaceReport is_surface(const CubeComplex& x) {
  if (x.particles() != 2 || !x.is_full()) throw PreconditionError("is_surface needs a full complex with 2 particles");
  SurfaceReport report;
  report.is_surface = x.count(0) > 0;
  for (int v = 0; v < static_cast<int>(x.count(0)); ++v) {
    const auto& s = x.configuration(v);
    const auto link = link_vertices(x, v);
    const int m = static_cast<int>(link.size());
    std::vector<std::vector<int>> neighbours(m);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (spanned_cube(x, s, {&link[a], &link[b]})) {
          neighbours[a].push_back(b);
          neighbours[b].push_back(a);
        }
    bool cycle = m >= 3 && std::all_of(neighbours.begin(), neighbours.end(), [](const auto& nb) { return nb.size() == 2; });
    if (cycle) {
      // All degrees two: a single cycle iff the walk from 0 visits everything.
      int previous = -1;
      int current = 0;
      int steps = 0;
      do {
        const int next = neighbours[current][0] != previous ? neighbours[current][0] : neighbours[current][1];
        previous = current;
        current = next;
        ++steps;
      } while (current != 0 && steps <= m);
      cycle = steps == m;
    }
    report.link_cycle_lengths.push_back(cycle ? m : 0);
    report.is_surface = report.is_surface && cycle;
  }
  return report;
}

}  // namespace braidscope
