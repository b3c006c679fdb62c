#include "braidscope/diagrams.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "braidscope/detail/disjoint_sets.hpp"

namespace braidscope {

VertexId origin(const Graph& g, Letter x) { return x.inverse ? g.edge(x.edge).b : g.edge(x.edge).a; }

VertexId target(const Graph& g, Letter x) { return x.inverse ? g.edge(x.edge).a : g.edge(x.edge).b; }

bool commute(const Graph& g, Letter x, Letter y) { return x.edge != y.edge && g.edges_disjoint(x.edge, y.edge); }

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

std::string format_letter(const Graph& g, Letter x) { return (x.inverse ? "-e" : "+e") + g.edge_name(x.edge); }

std::string format_word(const Graph& g, const Word& w) {
  std::string out;
  for (const auto& x : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(g, x);
  }
  return out;
}

Letter parse_letter(const Graph& g, std::string_view token) {
  if (token.size() < 2 || (token[0] != '+' && token[0] != '-'))
    throw ParseError("word token '" + std::string(token) + "' must start with + or -");
  const bool inv = token[0] == '-';
  auto name = token.substr(1);
  if (name.size() > 1 && name[0] == 'e') {
    if (auto e = g.find_edge(name.substr(1))) return {*e, inv};
  }
  if (auto e = g.find_edge(name)) return {*e, inv};
  throw ParseError("word token '" + std::string(token) + "' names no edge");
}

Word parse_word(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  Word out;
  for (std::string token; in >> token;) out.push_back(parse_letter(g, token));
  return out;
}

std::optional<Configuration> apply(const Graph& g, const Configuration& s, Letter x) {
  const auto from = origin(g, x);
  const auto to = target(g, x);
  auto at = std::lower_bound(s.begin(), s.end(), from);
  if (at == s.end() || *at != from) return std::nullopt;
  if (std::binary_search(s.begin(), s.end(), to)) return std::nullopt;
  Configuration out = s;
  out.erase(out.begin() + (at - s.begin()));
  out.insert(std::upper_bound(out.begin(), out.end(), to), to);
  return out;
}

LegalWord check_legal(const Graph& g, Configuration base, Word letters) {
  if (!std::is_sorted(base.begin(), base.end()) || std::adjacent_find(base.begin(), base.end()) != base.end())
    throw PreconditionError("base configuration must be a set");
  for (auto v : base)
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("base configuration names a missing vertex");
  Configuration current = base;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto x = letters[i];
    if (x.edge < 0 || x.edge >= g.edge_count()) throw IllegalMove(i, "unknown edge");
    if (!std::binary_search(current.begin(), current.end(), origin(g, x)))
      throw IllegalMove(i, "origin " + g.vertex_name(origin(g, x)) + " is unoccupied");
    if (std::binary_search(current.begin(), current.end(), target(g, x)))
      throw IllegalMove(i, "target " + g.vertex_name(target(g, x)) + " is occupied");
    current = *apply(g, current, x);
  }
  return {std::move(base), std::move(letters), std::move(current)};
}

Word reduce_word(const Graph& g, const Word& w) {
  Word out = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (out[j] == out[i].inverted()) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!commute(g, out[i], out[j])) break;
      }
    }
  }
  return out;
}

Word normal_form(const Graph& g, const Word& w) {
  Word rest = reduce_word(g, w);
  Word out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (!(rest[k] < rest[best])) continue;
      bool available = true;
      for (std::size_t p = 0; p < k && available; ++p) available = commute(g, rest[p], rest[k]);
      if (available) best = k;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Diagram identity(Configuration base) {
  Diagram d;
  d.terminus = base;
  d.base = std::move(base);
  return d;
}

Diagram reduce(const Graph& g, const LegalWord& w) {
  Diagram d;
  d.base = w.base;
  d.normal_form = normal_form(g, w.letters);
  try {
    d.terminus = check_legal(g, d.base, d.normal_form).terminus;
  } catch (const IllegalMove& e) {
    throw std::logic_error(std::string("normal form lost legality: ") + e.what());
  }
  if (d.terminus != w.terminus) throw std::logic_error("normal form changed the terminus");
  return d;
}

Diagram reduce(const Graph& g, const Configuration& base, const Word& letters) {
  return reduce(g, check_legal(g, base, letters));
}

Diagram concat(const Graph& g, const Diagram& d1, const Diagram& d2) {
  if (d1.terminus != d2.base) throw PreconditionError("diagrams are not composable: terminus differs from base");
  Word w = d1.normal_form;
  w.insert(w.end(), d2.normal_form.begin(), d2.normal_form.end());
  return reduce(g, d1.base, w);
}

Diagram inverse(const Graph& g, const Diagram& d) { return reduce(g, d.terminus, inverse(d.normal_form)); }

bool equal(const Diagram& d1, const Diagram& d2) {
  return d1.base == d2.base && d1.normal_form == d2.normal_form && d1.terminus == d2.terminus;
}

SupportData cyclically_reduce(const Graph& g, const Diagram& d) {
  if (!d.spherical()) throw PreconditionError("cyclic reduction needs a spherical diagram");
  SupportData out;
  Configuration base = d.base;
  Word w = d.normal_form;
  while (true) {
    bool stripped = false;
    for (std::size_t p = 0; p < w.size() && !stripped; ++p) {
      bool front = true;
      for (std::size_t i = 0; i < p && front; ++i) front = commute(g, w[i], w[p]);
      if (!front) continue;
      for (std::size_t q = w.size(); q-- > p + 1;) {
        if (w[q] != w[p].inverted()) continue;
        bool back = true;
        for (std::size_t i = q + 1; i < w.size() && back; ++i) back = commute(g, w[i], w[q]);
        if (!back) continue;
        out.conjugator.push_back(w[p]);
        base = *apply(g, base, w[p]);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(q));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
        stripped = true;
        break;
      }
    }
    if (!stripped) break;
  }
  out.cyclic_reduction = reduce(g, base, w);

  for (const auto& x : out.cyclic_reduction.normal_form) out.support_edges.push_back(x.edge);
  std::sort(out.support_edges.begin(), out.support_edges.end());
  out.support_edges.erase(std::unique(out.support_edges.begin(), out.support_edges.end()), out.support_edges.end());
  detail::DisjointSets sets(g.vertex_count());
  for (auto e : out.support_edges) {
    out.support_vertices.push_back(g.edge(e).a);
    out.support_vertices.push_back(g.edge(e).b);
    sets.unite(g.edge(e).a, g.edge(e).b);
  }
  std::sort(out.support_vertices.begin(), out.support_vertices.end());
  out.support_vertices.erase(std::unique(out.support_vertices.begin(), out.support_vertices.end()),
                             out.support_vertices.end());
  for (auto v : out.support_vertices) out.support_connected = out.support_connected && sets.find(v) == sets.find(out.support_vertices.front());
  std::set_intersection(base.begin(), base.end(), out.support_vertices.begin(), out.support_vertices.end(),
                        std::back_inserter(out.particles));
  return out;
}

bool cyclic_centralizer_witness(const Graph& g, const Diagram& d) {
  const auto data = cyclically_reduce(g, d);
  if (data.cyclic_reduction.empty()) return false;
  return data.support_connected && data.particles.size() == d.base.size();
}

Diagram make_rotation(const Graph& g, const Cycle& cycle, const Configuration& base) {
  const int length = cycle.length();
  const int n = static_cast<int>(base.size());
  if (n < 1) throw PreconditionError("rotation needs at least one particle");
  if (length < n + 1) throw PreconditionError("rotation needs a cycle longer than the particle count");
  std::vector<bool> occupied(length, false);
  for (auto v : base) {
    auto at = std::find(cycle.vertices.begin(), cycle.vertices.end(), v);
    if (at == cycle.vertices.end()) throw PreconditionError("every particle must sit on the cycle");
    occupied[at - cycle.vertices.begin()] = true;
  }
  const auto step = [&](int slot) {
    const auto e = cycle.edges[slot];
    return Letter{e, g.edge(e).a != cycle.vertices[slot]};
  };

  Word w;
  const std::vector<bool> start = occupied;
  do {
    std::vector<int> slots;
    for (int i = 0; i < length; ++i)
      if (occupied[i]) slots.push_back(i);
    // Begin with a particle whose next slot is free, then walk backwards.
    int k = 0;
    while (occupied[(slots[k] + 1) % length]) ++k;
    for (int moved = 0; moved < n; ++moved) {
      const int slot = slots[(k - moved + n) % n];
      w.push_back(step(slot));
      occupied[slot] = false;
      occupied[(slot + 1) % length] = true;
    }
  } while (occupied != start);
  return reduce(g, base, w);
}

namespace {

std::string line_name(int k) {
  if (k < 0) return "l" + std::to_string(-k);
  if (k > 0) return "r" + std::to_string(k);
  return "c";
}

VertexId require_vertex(const Graph& g, const std::string& name) {
  if (auto v = g.find_vertex(name)) return *v;
  throw PreconditionError("graph has no tripod vertex '" + name + "'");
}

}  // namespace

Graph tripod_graph(int particles) {
  if (particles < 2) throw PreconditionError("tripod swap needs at least two particles");
  Graph g;
  for (int k = -particles + 1; k <= particles - 1; ++k) g.add_vertex(line_name(k));
  const auto p = g.add_vertex("p");
  int id = 1;
  for (int i = 0; i + 1 < 2 * particles - 1; ++i) g.add_edge(i, i + 1, "s" + std::to_string(id++));
  g.add_edge(particles - 1, p, "t");
  return g;
}

Configuration tripod_base(const Graph& g, int particles) {
  Configuration base;
  for (int k = -particles + 1; k <= 0; ++k) base.push_back(require_vertex(g, line_name(k)));
  std::sort(base.begin(), base.end());
  return base;
}

Diagram make_tripod_swap(const Graph& g, int particles) {
  if (particles < 2) throw PreconditionError("tripod swap needs at least two particles");
  const int n = particles;
  std::map<int, VertexId> line;
  for (int k = -n + 1; k <= n - 1; ++k) line[k] = require_vertex(g, line_name(k));
  const auto p = require_vertex(g, "p");
  const auto move = [&](VertexId from, VertexId to) {
    auto e = g.edge_between(from, to);
    if (!e) throw PreconditionError("graph lacks tripod edge " + g.vertex_name(from) + "-" + g.vertex_name(to));
    return Letter{*e, g.edge(*e).a != from};
  };
  const auto along_line = [&](Word& w, int from, int to) {
    const int dir = to > from ? 1 : -1;
    for (int k = from; k != to; k += dir) w.push_back(move(line[k], line[k + dir]));
  };

  Word w;
  w.push_back(move(line[0], p));
  for (int k = -1; k >= -n + 1; --k) along_line(w, k, n + k);
  w.push_back(move(p, line[0]));
  along_line(w, 0, -n + 1);
  for (int k = 1; k <= n - 1; ++k) along_line(w, k, -n + k + 1);
  return reduce(g, tripod_base(g, n), w);
}

// ---------------------------------------------------------------- cover ball

CoverBall::CoverBall(const CubeComplex& x, Configuration base, int radius, const Limits& limits)
    : x_(&x), radius_(radius) {
  if (radius < 0 || radius > 12) throw PreconditionError("ball radius must lie in 0..12");
  if (x.top_dimension() < std::min(2, x.particles())) throw PreconditionError("ball oracle needs the 2-skeleton");
  const auto root = x.find_vertex(base);
  if (!root) throw PreconditionError("base is not a vertex of the complex");
  const auto& g = x.graph();
  nodes_.push_back({*root, 0, {}, {}});

  std::vector<int> layer{0};
  std::vector<int> previous;
  for (int depth = 0; depth < radius && !layer.empty(); ++depth) {
    // Candidate up-edges out of the current layer.
    std::vector<std::pair<int, int>> candidates;
    std::map<std::pair<int, int>, int> candidate_index;
    for (int u : layer) {
      for (const auto& m : link_vertices(x, nodes_[u].vertex)) {
        const int oriented = 2 * m.one_cube + (g.edge(m.edge).a == m.from ? 0 : 1);
        bool down = false;
        for (const auto& [parent, edge] : nodes_[u].parents) down = down || (edge ^ 1) == oriented;
        if (down) continue;
        candidate_index.emplace(std::pair{u, oriented}, static_cast<int>(candidates.size()));
        candidates.emplace_back(u, oriented);
      }
    }
    // Two candidates meet when they close a square over a common grandparent.
    detail::DisjointSets sets(static_cast<int>(candidates.size()));
    for (int z : previous) {
      std::vector<std::pair<int, int>> ups;
      for (const auto& [edge, child] : nodes_[z].moves)
        if (nodes_[child].depth == depth) ups.emplace_back(edge, child);
      for (std::size_t i = 0; i < ups.size(); ++i) {
        for (std::size_t j = i + 1; j < ups.size(); ++j) {
          const auto l1 = letter_of(ups[i].first);
          const auto l2 = letter_of(ups[j].first);
          if (!commute(g, l1, l2)) continue;
          Cube square;
          square.moving = {std::min(l1.edge, l2.edge), std::max(l1.edge, l2.edge)};
          for (auto v : x.configuration(nodes_[z].vertex))
            if (v != origin(g, l1) && v != origin(g, l2)) square.stationary.push_back(v);
          if (!x.find(square)) continue;
          const auto side1 = oriented_edge(nodes_[ups[i].second].vertex, l2);
          const auto side2 = oriented_edge(nodes_[ups[j].second].vertex, l1);
          if (!side1 || !side2) continue;
          auto c1 = candidate_index.find({ups[i].second, *side1});
          auto c2 = candidate_index.find({ups[j].second, *side2});
          if (c1 == candidate_index.end() || c2 == candidate_index.end()) continue;
          sets.unite(c1->second, c2->second);
        }
      }
    }
    std::vector<int> next;
    std::unordered_map<int, int> node_of_root;
    for (int c = 0; c < static_cast<int>(candidates.size()); ++c) {
      const auto [u, oriented] = candidates[c];
      auto [it, fresh] = node_of_root.emplace(sets.find(c), static_cast<int>(nodes_.size()));
      if (fresh) {
        if (nodes_.size() >= limits.max_ball_nodes)
          throw ResourceLimit("cover ball exceeds " + std::to_string(limits.max_ball_nodes) + " nodes");
        nodes_.push_back({head(oriented), depth + 1, {}, {}});
        next.push_back(it->second);
      }
      const int v = it->second;
      nodes_[v].parents.emplace_back(u, oriented);
      nodes_[u].moves.emplace_back(oriented, v);
      nodes_[v].moves.emplace_back(oriented ^ 1, u);
    }
    previous = std::move(layer);
    layer = std::move(next);
  }
}

Letter CoverBall::letter_of(int oriented) const {
  return {x_->cubes(1)[oriented / 2].moving[0], (oriented & 1) != 0};
}

std::optional<int> CoverBall::oriented_edge(int vertex, Letter x) const {
  const auto& g = x_->graph();
  const auto& s = x_->configuration(vertex);
  if (!apply(g, s, x)) return std::nullopt;
  Cube c{{x.edge}, {}};
  for (auto v : s)
    if (v != origin(g, x)) c.stationary.push_back(v);
  const auto id = x_->find(c);
  if (!id) return std::nullopt;
  return 2 * *id + (x.inverse ? 1 : 0);
}

int CoverBall::head(int oriented) const {
  const auto ends = x_->endpoints(oriented / 2);
  return (oriented & 1) != 0 ? ends.first : ends.second;
}

std::optional<int> CoverBall::walk(const Word& w) const {
  int current = 0;
  for (const auto& x : w) {
    const auto oriented = oriented_edge(nodes_[current].vertex, x);
    if (!oriented) return std::nullopt;
    const auto& moves = nodes_[current].moves;
    auto it = std::find_if(moves.begin(), moves.end(), [&](const auto& m) { return m.first == *oriented; });
    if (it == moves.end()) return std::nullopt;
    current = it->second;
  }
  return current;
}

Word CoverBall::geodesic(int node) const {
  Word w;
  while (node != 0) {
    const auto [parent, edge] = nodes_[node].parents.front();
    w.push_back(letter_of(edge));
    node = parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<Diagram> CoverBall::diagrams() const {
  std::vector<Diagram> out;
  const auto& base = x_->configuration(nodes_[0].vertex);
  for (int v = 0; v < static_cast<int>(nodes_.size()); ++v) out.push_back(reduce(x_->graph(), base, geodesic(v)));
  return out;
}

std::size_t CoverBall::spherical_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.vertex == nodes_[0].vertex; }));
}

}  // namespace braidscope
