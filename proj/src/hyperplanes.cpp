#include "braidscope/hyperplanes.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace braidscope {

namespace {

struct SquareSides {
  // Sides moving the first edge, then sides moving the second; lower first.
  int first_lower, first_upper, second_lower, second_upper;
};

std::optional<SquareSides> sides(const CubeComplex& x, const Cube& square) {
  const auto& g = x.graph();
  // facet(k, upper) parks moving edge k; the side that survives moves the other edge.
  auto a = x.find(facet(g, square, 1, false));
  auto b = x.find(facet(g, square, 1, true));
  auto c = x.find(facet(g, square, 0, false));
  auto d = x.find(facet(g, square, 0, true));
  if (!a || !b || !c || !d) return std::nullopt;
  return SquareSides{*a, *b, *c, *d};
}

void sort_hyperplanes(std::vector<Hyperplane>& hs) {
  std::sort(hs.begin(), hs.end(), [](const Hyperplane& a, const Hyperplane& b) {
    if (a.color != b.color) return a.color < b.color;
    return a.configurations < b.configurations;
  });
}

}  // namespace

std::vector<Hyperplane> hyperplanes_by_bfs(const CubeComplex& x) {
  if (x.top_dimension() < 2 && x.particles() >= 2)
    throw PreconditionError("hyperplanes need the 2-skeleton");
  const int edges = static_cast<int>(x.count(1));
  std::vector<std::vector<int>> parallel(edges);
  const std::vector<Cube> none;
  for (const auto& square : x.top_dimension() >= 2 ? x.cubes(2) : none) {
    const auto s = sides(x, square);
    if (!s) continue;
    parallel[s->first_lower].push_back(s->first_upper);
    parallel[s->first_upper].push_back(s->first_lower);
    parallel[s->second_lower].push_back(s->second_upper);
    parallel[s->second_upper].push_back(s->second_lower);
  }

  std::vector<Hyperplane> out;
  std::vector<bool> seen(edges, false);
  for (int start = 0; start < edges; ++start) {
    if (seen[start]) continue;
    Hyperplane h;
    h.color = x.cubes(1)[start].moving[0];
    std::queue<int> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop();
      h.members.push_back(i);
      for (int j : parallel[i]) {
        if (seen[j]) continue;
        seen[j] = true;
        queue.push(j);
      }
    }
    std::sort(h.members.begin(), h.members.end());
    for (int i : h.members) h.configurations.push_back(x.cubes(1)[i].stationary);
    std::sort(h.configurations.begin(), h.configurations.end());
    out.push_back(std::move(h));
  }
  sort_hyperplanes(out);
  return out;
}

std::vector<Hyperplane> hyperplanes_by_components(const Graph& g, int particles, const Limits& limits) {
  if (particles < 1) throw PreconditionError("particle count must be at least 1");
  std::vector<Hyperplane> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (v != ed.a && v != ed.b) keep.push_back(v);
    if (particles == 1) {
      out.push_back({e, {Configuration{}}, {}});
      continue;
    }
    if (static_cast<int>(keep.size()) < particles - 1) continue;
    const auto rest = Subgraph::induced(g, keep).to_graph();
    const auto y = CubeComplex::build(rest, particles - 1, 1, limits);
    std::vector<Hyperplane> per_component(y.component_count());
    for (int v = 0; v < static_cast<int>(y.count(0)); ++v) {
      Configuration lifted;
      for (auto u : y.configuration(v)) lifted.push_back(keep[u]);
      per_component[y.component_of(v)].configurations.push_back(std::move(lifted));
    }
    for (auto& h : per_component) {
      h.color = e;
      std::sort(h.configurations.begin(), h.configurations.end());
      out.push_back(std::move(h));
    }
  }
  sort_hyperplanes(out);
  return out;
}

Graph coloring_graph(const Graph& g) {
  Graph delta;
  for (EdgeId e = 0; e < g.edge_count(); ++e) delta.add_vertex(g.edge_name(e));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (EdgeId f = e + 1; f < g.edge_count(); ++f)
      if (g.edges_disjoint(e, f)) delta.add_edge(e, f, g.edge_name(e) + "|" + g.edge_name(f));
  return delta;
}

ColoringReport verify_special_coloring(const CubeComplex& x) { return verify_special_coloring(x, hyperplanes_by_bfs(x)); }

ColoringReport verify_special_coloring(const CubeComplex& x, const std::vector<Hyperplane>& hyperplanes) {
  const auto& g = x.graph();
  ColoringReport report;
  auto fail = [&](int axiom, std::string detail) {
    report.pass = false;
    report.failed_axiom = axiom;
    report.detail = std::move(detail);
    return report;
  };

  std::vector<int> owner(x.count(1), -1);
  for (int h = 0; h < static_cast<int>(hyperplanes.size()); ++h)
    for (int i : hyperplanes[h].members) owner.at(i) = h;

  // Axiom 1: a hyperplane is monochromatic and parallel sides keep their
  // orientation, so reversing it inverts the color.
  for (int h = 0; h < static_cast<int>(hyperplanes.size()); ++h)
    for (int i : hyperplanes[h].members)
      if (x.cubes(1)[i].moving[0] != hyperplanes[h].color)
        return fail(1, "hyperplane " + std::to_string(h) + " carries two colors");
  const std::vector<Cube> none;
  for (const auto& square : x.top_dimension() >= 2 ? x.cubes(2) : none) {
    const auto s = sides(x, square);
    if (!s) return fail(1, "a square is missing a side");
    // The two sides moving the first edge are joined at their lower ends by
    // the lower side moving the second edge.
    const auto lower_ends = std::pair{x.endpoints(s->first_lower).first, x.endpoints(s->first_upper).first};
    const auto joining = x.endpoints(s->second_lower);
    if (lower_ends != joining && lower_ends != std::pair{joining.second, joining.first})
      return fail(1, "parallel sides disagree on orientation");
    if (owner[s->first_lower] != owner[s->first_upper] || owner[s->second_lower] != owner[s->second_upper])
      return fail(1, "opposite sides of a square lie in different hyperplanes");
    // Axiom 2: the two hyperplanes crossing here have adjacent colors.
    if (!g.edges_disjoint(square.moving[0], square.moving[1]))
      return fail(2, "transverse hyperplanes colored " + g.edge_name(square.moving[0]) + " and " +
                         g.edge_name(square.moving[1]) + " are not adjacent in the coloring graph");
  }

  for (int v = 0; v < static_cast<int>(x.count(0)); ++v) {
    const auto& s = x.configuration(v);
    const auto link = link_vertices(x, v);
    // Axiom 3: outgoing oriented colors are pairwise distinct.
    std::set<std::pair<EdgeId, bool>> colors;
    for (const auto& m : link) {
      const bool forward = g.edge(m.edge).a == m.from;
      if (!colors.emplace(m.edge, forward).second)
        return fail(3, "two hyperplanes at a vertex share color " + g.edge_name(m.edge));
    }
    // Axiom 4: outgoing edges with adjacent colors span a square.
    for (std::size_t a = 0; a < link.size(); ++a) {
      for (std::size_t b = a + 1; b < link.size(); ++b) {
        if (!g.edges_disjoint(link[a].edge, link[b].edge)) continue;
        Cube square;
        square.moving = {std::min(link[a].edge, link[b].edge), std::max(link[a].edge, link[b].edge)};
        for (auto u : s)
          if (u != link[a].from && u != link[b].from) square.stationary.push_back(u);
        if (!x.find(square)) {
          std::string where;
          for (auto u : s) where += (where.empty() ? "" : ",") + g.vertex_name(u);
          return fail(4, "moves along " + g.edge_name(link[a].edge) + " and " + g.edge_name(link[b].edge) +
                             " at {" + where + "} span no square");
        }
      }
    }
  }
  return report;
}

}  // namespace braidscope
