#include "braidscope/graph.hpp"

#include "braidscope/detail/disjoint_sets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <utility>

namespace braidscope {

using detail::DisjointSets;

// ---------------------------------------------------------------- Graph

VertexId Graph::add_vertex(std::string name) {
  if (vertex_index_.contains(name)) throw PreconditionError("duplicate vertex name '" + name + "'");
  const auto id = static_cast<VertexId>(vertex_names_.size());
  vertex_index_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(VertexId a, VertexId b, std::string name) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw PreconditionError("edge '" + name + "' references a missing vertex");
  if (edge_index_.contains(name)) throw PreconditionError("duplicate edge name '" + name + "'");
  const auto id = static_cast<EdgeId>(edges_.size());
  edge_index_.emplace(name, id);
  edge_names_.push_back(std::move(name));
  edges_.push_back({a, b});
  adjacency_[a].push_back({id, b});
  adjacency_[b].push_back({id, a});
  return id;
}

std::string Graph::fresh_vertex_name(std::string_view base) const {
  std::string name(base);
  for (int k = 1; vertex_index_.contains(name); ++k) name = std::string(base) + "_" + std::to_string(k);
  return name;
}

std::string Graph::fresh_edge_name(std::string_view base) const {
  std::string name(base);
  for (int k = 1; edge_index_.contains(name); ++k) name = std::string(base) + "_" + std::to_string(k);
  return name;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  if (auto it = vertex_index_.find(std::string(name)); it != vertex_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  if (auto it = edge_index_.find(std::string(name)); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
  const auto& ed = edges_.at(e);
  return ed.a == v ? ed.b : ed.a;
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
  for (const auto& inc : adjacency_.at(u))
    if (inc.neighbor == v) return inc.edge;
  return std::nullopt;
}

bool Graph::is_simple() const {
  std::vector<std::pair<int, int>> keys;
  keys.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.a == e.b) return false;
    keys.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

bool Graph::edges_disjoint(EdgeId e, EdgeId f) const {
  const auto& x = edges_.at(e);
  const auto& y = edges_.at(f);
  return x.a != y.a && x.a != y.b && x.b != y.a && x.b != y.b;
}

std::vector<int> Graph::component_labels() const {
  DisjointSets sets(vertex_count());
  for (const auto& e : edges_) sets.unite(e.a, e.b);
  std::vector<int> label(vertex_count(), -1);
  std::map<int, int> root_label;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const int root = sets.find(v);
    auto [it, inserted] = root_label.emplace(root, static_cast<int>(root_label.size()));
    label[v] = it->second;
  }
  return label;
}

int Graph::component_count() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

// ---------------------------------------------------------------- Subgraph

Subgraph Subgraph::whole(const Graph& g) {
  Subgraph s;
  s.parent_ = &g;
  s.vertex_mask_.assign(g.vertex_count(), true);
  s.edge_mask_.assign(g.edge_count(), true);
  return s;
}

Subgraph Subgraph::induced(const Graph& g, std::span<const VertexId> vertices) {
  Subgraph s;
  s.parent_ = &g;
  s.vertex_mask_.assign(g.vertex_count(), false);
  s.edge_mask_.assign(g.edge_count(), false);
  for (auto v : vertices) s.vertex_mask_.at(v) = true;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    s.edge_mask_[e] = s.vertex_mask_[g.edge(e).a] && s.vertex_mask_[g.edge(e).b];
  return s;
}

Subgraph Subgraph::from_edges(const Graph& g, std::span<const EdgeId> edges,
                              std::span<const VertexId> extra_vertices) {
  Subgraph s;
  s.parent_ = &g;
  s.vertex_mask_.assign(g.vertex_count(), false);
  s.edge_mask_.assign(g.edge_count(), false);
  for (auto e : edges) {
    s.edge_mask_.at(e) = true;
    s.vertex_mask_[g.edge(e).a] = true;
    s.vertex_mask_[g.edge(e).b] = true;
  }
  for (auto v : extra_vertices) s.vertex_mask_.at(v) = true;
  return s;
}

std::vector<VertexId> Subgraph::vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<int>(vertex_mask_.size()); ++v)
    if (vertex_mask_[v]) out.push_back(v);
  return out;
}

std::vector<EdgeId> Subgraph::edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<int>(edge_mask_.size()); ++e)
    if (edge_mask_[e]) out.push_back(e);
  return out;
}

int Subgraph::vertex_count() const {
  return static_cast<int>(std::count(vertex_mask_.begin(), vertex_mask_.end(), true));
}

int Subgraph::edge_count() const {
  return static_cast<int>(std::count(edge_mask_.begin(), edge_mask_.end(), true));
}

int Subgraph::component_count() const {
  if (parent_ == nullptr) return 0;
  DisjointSets sets(parent_->vertex_count());
  int components = vertex_count();
  for (EdgeId e = 0; e < parent_->edge_count(); ++e)
    if (edge_mask_[e] && sets.unite(parent_->edge(e).a, parent_->edge(e).b)) --components;
  return components;
}

bool Subgraph::disjoint_from(const Subgraph& other) const {
  for (std::size_t v = 0; v < vertex_mask_.size() && v < other.vertex_mask_.size(); ++v)
    if (vertex_mask_[v] && other.vertex_mask_[v]) return false;
  return true;
}

Graph Subgraph::to_graph() const {
  Graph out;
  std::vector<VertexId> remap(parent_->vertex_count(), -1);
  for (auto v : vertices()) remap[v] = out.add_vertex(parent_->vertex_name(v));
  for (auto e : edges()) out.add_edge(remap[parent_->edge(e).a], remap[parent_->edge(e).b], parent_->edge_name(e));
  return out;
}

bool Cycle::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

// ---------------------------------------------------------------- shapes

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Segment: return "segment";
    case ShapeKind::Cycle: return "cycle";
    case ShapeKind::Star: return "star";
    case ShapeKind::Theta: return "theta";
    case ShapeKind::HGraph: return "h-graph";
    case ShapeKind::CycleWithTwoRays: return "cycle-with-two-rays";
    case ShapeKind::Rose: return "rose";
    case ShapeKind::Sun: return "sun";
    case ShapeKind::Pulsar: return "pulsar";
    case ShapeKind::Tree: return "tree";
    case ShapeKind::General: return "general";
  }
  return "general";
}

bool Shape::is_rose() const {
  return kind == ShapeKind::Segment || kind == ShapeKind::Cycle || kind == ShapeKind::Star ||
         kind == ShapeKind::Rose;
}

// ---------------------------------------------------------------- branches

std::vector<bool> smoothing_anchors(const Graph& g) {
  std::vector<bool> anchor(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) anchor[v] = g.degree(v) != 2;
  const auto labels = g.component_labels();
  std::map<int, bool> has_anchor;
  for (VertexId v = 0; v < g.vertex_count(); ++v) has_anchor[labels[v]] = has_anchor[labels[v]] || anchor[v];
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!has_anchor[labels[v]]) {
      anchor[v] = true;
      has_anchor[labels[v]] = true;
    }
  }
  return anchor;
}

std::vector<Branch> branches(const Graph& g) {
  const auto anchor = smoothing_anchors(g);
  std::vector<bool> used(g.edge_count(), false);
  std::vector<Branch> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!anchor[v]) continue;
    for (const auto& start : g.incident(v)) {
      if (used[start.edge]) continue;
      Branch branch{v, v, {start.edge}};
      used[start.edge] = true;
      EdgeId previous = start.edge;
      VertexId current = start.neighbor;
      while (!anchor[current]) {
        const auto inc = g.incident(current);
        const auto& next = inc[0].edge == previous ? inc[1] : inc[0];
        used[next.edge] = true;
        branch.edges.push_back(next.edge);
        previous = next.edge;
        current = next.neighbor;
      }
      branch.to = current;
      out.push_back(std::move(branch));
    }
  }
  return out;
}

Graph smooth(const Graph& g) {
  const auto anchor = smoothing_anchors(g);
  Graph out;
  std::vector<VertexId> remap(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (anchor[v]) remap[v] = out.add_vertex(g.vertex_name(v));
  for (const auto& b : branches(g)) out.add_edge(remap[b.from], remap[b.to], g.edge_name(b.edges.front()));
  return out;
}

// ---------------------------------------------------------------- transforms

Graph normalize(const Graph& g) {
  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto& e : g.edges())
    if (e.a != e.b) ++multiplicity[{std::min(e.a, e.b), std::max(e.a, e.b)}];

  Graph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.vertex_name(v));
  // Fresh names are drawn only after every original edge name is reserved.
  std::vector<EdgeId> pending;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const bool parallel = ed.a != ed.b && multiplicity[{std::min(ed.a, ed.b), std::max(ed.a, ed.b)}] > 1;
    if (ed.a != ed.b && !parallel) {
      out.add_edge(ed.a, ed.b, g.edge_name(e));
    } else {
      pending.push_back(e);
    }
  }
  for (auto e : pending) {
    const auto& ed = g.edge(e);
    const auto& name = g.edge_name(e);
    if (ed.a == ed.b) {
      const auto x = out.add_vertex(out.fresh_vertex_name(name + "_x"));
      const auto y = out.add_vertex(out.fresh_vertex_name(name + "_y"));
      out.add_edge(ed.a, x, out.fresh_edge_name(name));
      out.add_edge(x, y, out.fresh_edge_name(name + "_2"));
      out.add_edge(y, ed.a, out.fresh_edge_name(name + "_3"));
    } else {
      const auto m = out.add_vertex(out.fresh_vertex_name(name + "_m"));
      out.add_edge(ed.a, m, out.fresh_edge_name(name));
      out.add_edge(m, ed.b, out.fresh_edge_name(name + "_2"));
    }
  }
  return out;
}

Graph subdivide_edge(const Graph& g, EdgeId e) {
  Graph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.vertex_name(v));
  const auto mid = out.add_vertex(out.fresh_vertex_name(g.edge_name(e) + "_s"));
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) {
      out.add_edge(g.edge(f).a, mid, g.edge_name(f));
    } else {
      out.add_edge(g.edge(f).a, g.edge(f).b, g.edge_name(f));
    }
  }
  out.add_edge(mid, g.edge(e).b, out.fresh_edge_name(g.edge_name(e) + "_s"));
  return out;
}

namespace {

/// Edges of one shortest cycle of a simple graph; empty for forests.
/// Ties resolve to the first root in id order.
std::vector<EdgeId> shortest_cycle_edges(const Graph& g) {
  std::vector<EdgeId> best;
  int best_length = 0;
  const int n = g.vertex_count();
  std::vector<int> dist(n);
  std::vector<EdgeId> parent_edge(n);
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    std::queue<VertexId> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop();
      if (best_length > 0 && 2 * dist[u] + 1 >= best_length) break;
      for (const auto& inc : g.incident(u)) {
        if (inc.edge == parent_edge[u]) continue;
        const auto w = inc.neighbor;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = inc.edge;
          queue.push(w);
          continue;
        }
        const int length = dist[u] + dist[w] + 1;
        if (best_length != 0 && length >= best_length) continue;
        // Accept only when the two tree paths meet at the root.
        std::vector<EdgeId> left;
        std::vector<EdgeId> right;
        std::vector<VertexId> left_vertices;
        for (VertexId x = u; x != root; x = g.other_end(parent_edge[x], x)) {
          left.push_back(parent_edge[x]);
          left_vertices.push_back(x);
        }
        bool simple = true;
        for (VertexId x = w; x != root; x = g.other_end(parent_edge[x], x)) {
          if (std::find(left_vertices.begin(), left_vertices.end(), x) != left_vertices.end()) {
            simple = false;
            break;
          }
          right.push_back(parent_edge[x]);
        }
        if (!simple) continue;
        best_length = length;
        best = left;
        best.insert(best.end(), right.begin(), right.end());
        best.push_back(inc.edge);
      }
    }
  }
  return best;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  if (!g.is_simple()) throw PreconditionError("girth requires a simple graph");
  const auto edges = shortest_cycle_edges(g);
  if (edges.empty()) return std::nullopt;
  return static_cast<int>(edges.size());
}

Graph subdivide_for(const Graph& g, int particles) {
  if (particles < 1) throw PreconditionError("particle count must be at least 1");
  if (!g.is_simple()) throw PreconditionError("subdivide_for requires a normalized (simple) graph");
  Graph out = g;

  // Paths between distinct essential vertices: length >= n - 1.
  for (const auto& branch : branches(g)) {
    if (branch.from == branch.to) continue;
    if (g.degree(branch.from) < 3 || g.degree(branch.to) < 3) continue;
    for (int k = branch.length(); k < particles - 1; ++k) out = subdivide_edge(out, branch.edges.front());
  }
  // Essential closed paths: length >= n + 1.
  while (true) {
    auto cycle = shortest_cycle_edges(out);
    if (cycle.empty() || static_cast<int>(cycle.size()) >= particles + 1) break;
    out = subdivide_edge(out, *std::min_element(cycle.begin(), cycle.end()));
  }
  while (out.vertex_count() < particles) {
    if (out.edge_count() == 0)
      throw PreconditionError("graph has too few vertices and no edge to subdivide");
    out = subdivide_edge(out, 0);
  }
  return out;
}

Shape classify_shape(const Graph& g) {
  if (g.vertex_count() == 0 || !g.is_connected()) throw PreconditionError("classify_shape requires a connected graph");
  const Graph s = smooth(g);
  const int vertices = s.vertex_count();
  const int edges = s.edge_count();
  const int betti = edges - vertices + 1;

  Shape shape;
  std::vector<VertexId> essential;
  int leaves = 0;
  for (VertexId v = 0; v < vertices; ++v) {
    if (s.degree(v) >= 3) {
      essential.push_back(v);
      shape.centers.push_back(s.vertex_name(v));
    }
    if (s.degree(v) == 1) ++leaves;
  }
  int loops = 0;
  for (EdgeId e = 0; e < edges; ++e) loops += s.is_loop(e) ? 1 : 0;
  shape.cycles = betti;
  shape.rays = leaves;
  auto with = [&](ShapeKind kind) {
    shape.kind = kind;
    return shape;
  };

  if (edges == 0) return with(ShapeKind::Segment);
  if (vertices == 2 && edges == 1) return with(ShapeKind::Segment);
  if (vertices == 1 && edges == 1) return with(ShapeKind::Cycle);
  if (betti == 0 && essential.size() == 1) {
    shape.arms = s.degree(essential[0]);
    return with(ShapeKind::Star);
  }

  const bool two_degree_three =
      essential.size() == 2 && s.degree(essential[0]) == 3 && s.degree(essential[1]) == 3;
  auto count_between = [&](VertexId u, VertexId v) {
    int count = 0;
    for (const auto& e : s.edges())
      if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) ++count;
    return count;
  };
  if (two_degree_three && betti == 2 && vertices == 2 && loops == 0) return with(ShapeKind::Theta);
  if (two_degree_three && betti == 0) return with(ShapeKind::HGraph);
  if (two_degree_three && betti == 1 && vertices == 4 && count_between(essential[0], essential[1]) == 2)
    return with(ShapeKind::CycleWithTwoRays);

  if (essential.size() == 1) {
    const auto c = essential[0];
    const bool all_at_center =
        std::all_of(s.edges().begin(), s.edges().end(), [&](const Edge& e) { return e.a == c || e.b == c; });
    if (all_at_center) {
      shape.cycles = loops;
      shape.rays = edges - loops;
      return with(ShapeKind::Rose);
    }
  }

  if (betti == 1) {
    // Strip pendant trees; what is left is the unique cycle.
    std::vector<int> degree(vertices);
    std::vector<bool> removed(vertices, false);
    for (VertexId v = 0; v < vertices; ++v) degree[v] = s.degree(v);
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v = 0; v < vertices; ++v) {
        if (removed[v] || degree[v] > 1) continue;
        removed[v] = true;
        changed = true;
        for (const auto& inc : s.incident(v))
          if (!removed[inc.neighbor]) --degree[inc.neighbor];
      }
    }
    bool sun = true;
    for (VertexId v = 0; v < vertices && sun; ++v) {
      if (!removed[v]) continue;
      sun = s.degree(v) == 1 && !removed[s.incident(v)[0].neighbor];
    }
    if (sun) return with(ShapeKind::Sun);
  }

  if (essential.size() == 2 && loops == 0) {
    const auto u = essential[0];
    const auto v = essential[1];
    int between = 0;
    bool pulsar = true;
    for (const auto& e : s.edges()) {
      if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) {
        ++between;
      } else if (e.a == u || e.a == v) {
        pulsar = pulsar && s.degree(e.b) == 1;
      } else if (e.b == u || e.b == v) {
        pulsar = pulsar && s.degree(e.a) == 1;
      } else {
        pulsar = false;
      }
    }
    if (pulsar && between >= 2) {
      shape.cycles = between - 1;
      return with(ShapeKind::Pulsar);
    }
  }

  if (betti == 0) return with(ShapeKind::Tree);
  return with(ShapeKind::General);
}

// ---------------------------------------------------------------- cycles

std::vector<Cycle> simple_cycles(const Graph& g, const Limits& limits) {
  if (!g.is_simple()) throw PreconditionError("simple_cycles requires a normalized (simple) graph");
  const int n = g.vertex_count();
  std::vector<Cycle> found;
  std::vector<VertexId> path;
  std::vector<EdgeId> path_edges;
  std::vector<bool> on_path(n, false);

  std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId u) {
    for (const auto& inc : g.incident(u)) {
      const auto w = inc.neighbor;
      if (w == start) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (found.size() >= limits.max_cycles)
            throw ResourceLimit("simple cycle count exceeds cap of " + std::to_string(limits.max_cycles));
          Cycle c{path, path_edges};
          c.edges.push_back(inc.edge);
          found.push_back(std::move(c));
        }
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      path_edges.push_back(inc.edge);
      extend(start, w);
      path.pop_back();
      path_edges.pop_back();
      on_path[w] = false;
    }
  };

  for (VertexId s = 0; s < n; ++s) {
    path.assign(1, s);
    path_edges.clear();
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }

  std::vector<std::pair<std::vector<VertexId>, std::size_t>> keys;
  keys.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    auto sorted = found[i].vertices;
    std::sort(sorted.begin(), sorted.end());
    keys.emplace_back(std::move(sorted), i);
  }
  std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return found[x.second].vertices < found[y.second].vertices;
  });
  std::vector<Cycle> ordered;
  ordered.reserve(found.size());
  for (const auto& [key, index] : keys) ordered.push_back(std::move(found[index]));
  return ordered;
}

int first_betti(const Subgraph& s) { return s.edge_count() - s.vertex_count() + s.component_count(); }

int first_betti(const Graph& g) { return g.edge_count() - g.vertex_count() + g.component_count(); }

// ---------------------------------------------------------------- families

namespace families {

Graph complete(int m) {
  Graph g;
  for (int i = 1; i <= m; ++i) g.add_vertex(std::to_string(i));
  int id = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j, std::to_string(id++));
  return g;
}

Graph complete_bipartite(int p, int q) {
  Graph g;
  for (int i = 1; i <= p; ++i) g.add_vertex("a" + std::to_string(i));
  for (int j = 1; j <= q; ++j) g.add_vertex("b" + std::to_string(j));
  int id = 1;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j, std::to_string(id++));
  return g;
}

Graph cycle(int length) {
  Graph g;
  for (int i = 1; i <= length; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < length; ++i) g.add_edge(i, (i + 1) % length, std::to_string(i + 1));
  return g;
}

Graph path(int vertices) {
  Graph g;
  for (int i = 1; i <= vertices; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1, std::to_string(i + 1));
  return g;
}

Graph star(int arms, int arm_length) {
  Graph g;
  const auto center = g.add_vertex("c");
  int id = 1;
  for (int i = 1; i <= arms; ++i) {
    VertexId previous = center;
    for (int j = 1; j <= arm_length; ++j) {
      const auto v = g.add_vertex("v" + std::to_string(i) + "_" + std::to_string(j));
      g.add_edge(previous, v, std::to_string(id++));
      previous = v;
    }
  }
  return g;
}

Graph rose(int petals, int rays, int petal_length) {
  Graph g;
  const auto center = g.add_vertex("c");
  int id = 1;
  for (int i = 1; i <= petals; ++i) {
    VertexId previous = center;
    for (int j = 1; j < petal_length; ++j) {
      const auto v = g.add_vertex("p" + std::to_string(i) + "_" + std::to_string(j));
      g.add_edge(previous, v, std::to_string(id++));
      previous = v;
    }
    g.add_edge(previous, center, std::to_string(id++));
  }
  for (int i = 1; i <= rays; ++i) {
    const auto v = g.add_vertex("r" + std::to_string(i));
    g.add_edge(center, v, std::to_string(id++));
  }
  return g;
}

}  // namespace families

}  // namespace braidscope
