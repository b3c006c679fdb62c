#include "braidscope/classifier.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>

#include "braidscope/config_space.hpp"

namespace braidscope {

int ParticleAssignment::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

namespace {

std::vector<std::vector<VertexId>> component_vertices(const Graph& g) {
  const auto labels = g.component_labels();
  std::vector<std::vector<VertexId>> out(g.component_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[labels[v]].push_back(v);
  return out;
}

std::vector<Graph> component_graphs(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& vs : component_vertices(g)) out.push_back(Subgraph::induced(g, vs).to_graph());
  return out;
}

void require_connected(const Graph& g) {
  if (g.vertex_count() == 0 || !g.is_connected()) throw PreconditionError("graph must be connected and nonempty");
}

void require_particles(int n) {
  if (n < 1) throw PreconditionError("particle count must be at least 1");
}

/// The input as the predicates see it: normalized, subdivided, with its simple cycles.
struct Prepared {
  const Graph* input = nullptr;
  Graph h;
  std::vector<Cycle> cycles;
  std::vector<bool> essential;

  Prepared(const Graph& g, int n, const Limits& limits) : input(&g) {
    h = subdivide_for(normalize(g), std::max(n, 3));
    cycles = simple_cycles(h, limits);
    essential.resize(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v) essential[v] = h.degree(v) >= 3;
  }

  /// Names of h-vertices that exist in the input, order kept.
  std::vector<std::string> names(const std::vector<VertexId>& vs) const {
    std::vector<std::string> out;
    for (auto v : vs)
      if (input->find_vertex(h.vertex_name(v))) out.push_back(h.vertex_name(v));
    return out;
  }
  std::vector<std::string> sorted_names(const std::vector<VertexId>& vs) const {
    auto out = names(vs);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<bool> mask(const Cycle& c) const {
    std::vector<bool> m(h.vertex_count(), false);
    for (auto v : c.vertices) m[v] = true;
    return m;
  }
};

/// Component of h minus a vertex set.
struct Piece {
  std::vector<VertexId> vertices;
  int betti = 0;
  int essential = 0;        // vertices of degree >= 3 in h
  bool has_degree_four = false;
  bool essential_on_cycle = false;
};

std::vector<Piece> pieces_without(const Prepared& p, const std::vector<bool>& removed) {
  const Graph& h = p.h;
  const int n = h.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<Piece> out;
  for (VertexId s = 0; s < n; ++s) {
    if (removed[s] || label[s] >= 0) continue;
    Piece piece;
    const int id = static_cast<int>(out.size());
    std::vector<VertexId> stack{s};
    label[s] = id;
    int edge_ends = 0;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      piece.vertices.push_back(v);
      if (p.essential[v]) ++piece.essential;
      if (h.degree(v) >= 4) piece.has_degree_four = true;
      for (const auto& inc : h.incident(v)) {
        if (removed[inc.neighbor]) continue;
        ++edge_ends;
        if (label[inc.neighbor] < 0) {
          label[inc.neighbor] = id;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(piece.vertices.begin(), piece.vertices.end());
    piece.betti = edge_ends / 2 - static_cast<int>(piece.vertices.size()) + 1;
    out.push_back(std::move(piece));
  }

  // Essential vertices on a cycle of their piece: some incident edge is not a bridge.
  std::vector<int> order(n, -1), low(n, 0);
  int clock = 0;
  std::vector<bool> on_cycle(n, false);
  std::function<void(VertexId, EdgeId)> dfs = [&](VertexId v, EdgeId via) {
    order[v] = low[v] = clock++;
    for (const auto& inc : h.incident(v)) {
      if (removed[inc.neighbor] || inc.edge == via) continue;
      if (order[inc.neighbor] < 0) {
        dfs(inc.neighbor, inc.edge);
        low[v] = std::min(low[v], low[inc.neighbor]);
        if (low[inc.neighbor] <= order[v]) on_cycle[v] = on_cycle[inc.neighbor] = true;
      } else {
        low[v] = std::min(low[v], order[inc.neighbor]);
        on_cycle[v] = on_cycle[inc.neighbor] = true;
      }
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (!removed[v] && order[v] < 0) dfs(v, -1);
  for (auto& piece : out)
    for (auto v : piece.vertices)
      if (p.essential[v] && on_cycle[v]) piece.essential_on_cycle = true;
  return out;
}

struct CyclePiece {
  const Cycle* cycle;
  Piece piece;
};

std::optional<CyclePiece> find_cycle_piece(const Prepared& p, const std::function<bool(const Piece&)>& pred) {
  for (const auto& c : p.cycles)
    for (auto& piece : pieces_without(p, p.mask(c)))
      if (pred(piece)) return CyclePiece{&c, std::move(piece)};
  return std::nullopt;
}

Witness cycle_piece_witness(const Prepared& p, const CyclePiece& found, std::string kind, std::string detail) {
  return {std::move(kind), {p.names(found.cycle->vertices), p.sorted_names(found.piece.vertices)}, std::move(detail)};
}

std::optional<Witness> disjoint_cycles(const Prepared& p) {
  const auto found = find_cycle_piece(p, [](const Piece& x) { return x.betti >= 1; });
  if (!found) return std::nullopt;
  std::vector<bool> in_piece(p.h.vertex_count(), false);
  for (auto v : found->piece.vertices) in_piece[v] = true;
  for (const auto& other : p.cycles) {
    if (std::all_of(other.vertices.begin(), other.vertices.end(), [&](VertexId v) { return in_piece[v]; }))
      return Witness{"disjoint_cycles", {p.names(found->cycle->vertices), p.names(other.vertices)}, ""};
  }
  return cycle_piece_witness(p, *found, "disjoint_cycles", "cycle and a component carrying another cycle");
}

std::optional<Witness> essential_off_cycle(const Prepared& p) {
  const auto found = find_cycle_piece(p, [](const Piece& x) { return x.essential >= 1; });
  if (!found) return std::nullopt;
  return cycle_piece_witness(p, *found, "essential_vertex_off_cycle", "component contains a vertex of degree >= 3");
}

std::optional<Witness> two_essential(const Prepared& p) {
  std::vector<VertexId> ess;
  for (VertexId v = 0; v < p.h.vertex_count(); ++v)
    if (p.essential[v]) ess.push_back(v);
  if (ess.size() < 2) return std::nullopt;
  return Witness{"two_essential_vertices", {p.names({ess[0], ess[1]})}, ""};
}

Witness shape_witness(const Shape& s) { return {"shape", {s.centers}, std::string(to_string(s.kind))}; }

bool wide_tree(ShapeKind k) {
  return k == ShapeKind::Segment || k == ShapeKind::Star || k == ShapeKind::HGraph || k == ShapeKind::Tree;
}
bool wide_sun(ShapeKind k) { return k == ShapeKind::Cycle || k == ShapeKind::CycleWithTwoRays || k == ShapeKind::Sun; }
bool wide_pulsar(ShapeKind k) { return k == ShapeKind::Theta || k == ShapeKind::Pulsar; }

// Component-level predicates on a connected graph.
bool factor_nontrivial(const Graph& c, int particles) {
  if (particles == 0) return false;
  if (particles == 1) return first_betti(c) >= 1;
  return classify_shape(c).kind != ShapeKind::Segment;
}

bool factor_contains_F2(const Graph& c, int particles) {
  if (particles == 0) return false;
  if (particles == 1) return first_betti(c) >= 2;
  const auto s = classify_shape(c);
  if (s.kind == ShapeKind::Segment || s.kind == ShapeKind::Cycle) return false;
  return !(particles == 2 && s.is_star_with_three_arms());
}

}  // namespace

std::vector<ParticleAssignment> particle_assignments(const Graph& g, int n) {
  const auto comps = component_graphs(g);
  std::vector<ParticleAssignment> out;
  ParticleAssignment current;
  current.counts.assign(comps.size(), 0);
  std::function<void(std::size_t, int)> place = [&](std::size_t i, int left) {
    if (i == comps.size()) {
      if (left == 0) out.push_back(current);
      return;
    }
    const int cap = comps[i].edge_count() == 0 ? 1 : left;
    for (int k = 0; k <= std::min(cap, left); ++k) {
      current.counts[i] = k;
      place(i + 1, left - k);
    }
    current.counts[i] = 0;
  };
  place(0, n);
  return out;
}

Verdict is_trivial(const Graph& g, const ParticleAssignment& assignment) {
  const auto comps = component_graphs(g);
  if (assignment.counts.size() != comps.size()) throw PreconditionError("assignment does not match components");
  Verdict v{true, {}};
  const auto vertex_sets = component_vertices(g);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (factor_nontrivial(comps[i], assignment.counts[i])) {
      std::vector<std::string> names;
      for (auto x : vertex_sets[i]) names.push_back(g.vertex_name(x));
      std::sort(names.begin(), names.end());
      v.holds = false;
      v.witnesses.push_back({"nontrivial_component", {names}, std::to_string(assignment.counts[i]) + " particles"});
      break;
    }
  }
  return v;
}

Verdict is_infinite_cyclic(const Graph& g, int n) {
  require_connected(g);
  require_particles(n);
  if (n == 1) return {first_betti(g) == 1, {}};
  const auto s = classify_shape(g);
  const bool cyclic = s.kind == ShapeKind::Cycle || (n == 2 && s.is_star_with_three_arms());
  return {cyclic, {shape_witness(s)}};
}

Verdict is_hyperbolic(const Graph& g, int n) {
  require_connected(g);
  require_particles(n);
  if (n == 1) return {true, {}};
  if (n == 2) {
    const Prepared p(g, n, Limits::from_env());
    if (auto w = disjoint_cycles(p)) return {false, {*w}};
    return {true, {}};
  }
  const auto s = classify_shape(g);
  const auto k = s.kind;
  const bool ok = n == 3 ? (wide_tree(k) || wide_sun(k) || k == ShapeKind::Rose || wide_pulsar(k)) : s.is_rose();
  return {ok, {shape_witness(s)}};
}

Verdict hyperbolic_by_obstructions(const Graph& g, int n) {
  require_connected(g);
  require_particles(n);
  if (n == 1) return {true, {}};
  const Prepared p(g, n, Limits::from_env());
  if (auto w = disjoint_cycles(p)) return {false, {*w}};
  if (n >= 3)
    if (auto w = essential_off_cycle(p)) return {false, {*w}};
  if (n >= 4)
    if (auto w = two_essential(p)) return {false, {*w}};
  return {true, {}};
}

Verdict is_toral_rel_hyp(const Graph& g, int n) {
  require_connected(g);
  require_particles(n);
  if (n == 1) return {true, {}};
  if (n >= 4) {
    const auto s = classify_shape(g);
    const auto k = s.kind;
    const bool ok = s.is_rose() ||
                    (n == 4 && (k == ShapeKind::HGraph || k == ShapeKind::CycleWithTwoRays || k == ShapeKind::Theta));
    return {ok, {shape_witness(s)}};
  }
  const Prepared p(g, n, Limits::from_env());
  if (auto f = find_cycle_piece(p, [](const Piece& x) { return x.betti >= 2; }))
    return {false, {cycle_piece_witness(p, *f, "cycle_off_two_cycles", "component of first Betti number >= 2")}};
  if (n == 2) return {true, {}};

  if (auto f = find_cycle_piece(p, [](const Piece& x) { return x.has_degree_four; }))
    return {false, {cycle_piece_witness(p, *f, "degree_four_off_cycle", "component contains a vertex of degree >= 4")}};
  if (auto f = find_cycle_piece(p, [](const Piece& x) { return x.essential >= 2; }))
    return {false, {cycle_piece_witness(p, *f, "segment_off_cycle", "component joins two vertices of degree >= 3")}};
  for (VertexId v = 0; v < p.h.vertex_count(); ++v) {
    if (!p.essential[v]) continue;
    std::vector<bool> removed(p.h.vertex_count(), false);
    removed[v] = true;
    for (const auto& piece : pieces_without(p, removed))
      if (piece.betti >= 2)
        return {false,
                {{"essential_vertex_off_two_cycles", {p.names({v}), p.sorted_names(piece.vertices)}, ""}}};
  }
  if (auto f = find_cycle_piece(p, [](const Piece& x) { return x.essential_on_cycle; }))
    return {false, {cycle_piece_witness(p, *f, "cycle_off_branched_cycle",
                                        "component has a cycle through a vertex of degree >= 3")}};
  return {true, {}};
}

Verdict contains_free_nonabelian(const Graph& g, const ParticleAssignment& assignment) {
  const auto comps = component_graphs(g);
  if (assignment.counts.size() != comps.size()) throw PreconditionError("assignment does not match components");
  const auto vertex_sets = component_vertices(g);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (factor_contains_F2(comps[i], assignment.counts[i])) {
      std::vector<std::string> names;
      for (auto x : vertex_sets[i]) names.push_back(g.vertex_name(x));
      std::sort(names.begin(), names.end());
      return {true, {{"free_component", {names}, std::to_string(assignment.counts[i]) + " particles"}}};
    }
  }
  return {false, {}};
}

std::string to_string(AcylStatus s) {
  switch (s) {
    case AcylStatus::Trivial: return "trivial";
    case AcylStatus::InfiniteCyclic: return "infinite_cyclic";
    case AcylStatus::AcylindricallyHyperbolic: return "acylindrically_hyperbolic";
    case AcylStatus::NotAcylindricallyHyperbolic: return "not_acylindrically_hyperbolic";
  }
  return "";
}

AcylStatus acyl_hyp_status(const Graph& g, int n) {
  require_connected(g);
  require_particles(n);
  if (is_trivial(g, {{n}}).holds) return AcylStatus::Trivial;
  if (is_infinite_cyclic(g, n).holds) return AcylStatus::InfiniteCyclic;
  return AcylStatus::AcylindricallyHyperbolic;
}

FreeCertificate free_certificate(const Graph& g, int n) {
  require_connected(g);
  require_particles(n);
  if (n == 1) return {true, "one particle: the fundamental group of a graph"};
  const auto s = classify_shape(g);
  if (s.is_rose()) return {true, "rose graph"};
  if (n == 2) {
    const Prepared p(g, n, Limits::from_env());
    if (p.cycles.empty()) return {true, "tree"};
    for (VertexId v = 0; v < p.h.vertex_count(); ++v) {
      if (std::all_of(p.cycles.begin(), p.cycles.end(), [&](const Cycle& c) { return c.contains(v); })) {
        const auto names = p.names({v});
        // Prefer a vertex of the input; subdivision vertices only occur when an input edge qualifies.
        return {true, "vertex " + (names.empty() ? p.h.vertex_name(v) : names[0]) + " lies on every cycle"};
      }
    }
  }
  return {false, "no criterion applies"};
}

// ------------------------------------------------------------------ oracles

namespace {

struct LambdaProps {
  bool connected = false;
  int betti = 0;
  int max_degree = 0;
  int essential = 0;
  int degree_three = 0;
  bool all_degree_two = false;

  bool tree() const { return betti == 0; }
  bool segment() const { return tree() && max_degree <= 2; }
  bool cycle() const { return betti == 1 && all_degree_two; }
  bool star3() const { return tree() && essential == 1 && degree_three == 1; }
  bool nontrivial(int r) const { return r == 1 ? betti >= 1 : (betti >= 1 || max_degree >= 3); }
  bool contains_F2(int r) const {
    if (r == 1) return betti >= 2;
    if (segment() || cycle()) return false;
    return !(r == 2 && star3());
  }
};

/// Subgraph spanned by an anchor set of the smoothed graph: every edge inside
/// it, plus a pendant arm along every edge that leaves it.
LambdaProps lambda_props(const Graph& s, std::uint32_t set) {
  const int k = s.vertex_count();
  LambdaProps p;
  std::vector<int> degree(k, 0);
  int vertices = 0, edges = 0, leaves = 0;
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int v = 0; v < k; ++v)
    if (set >> v & 1) ++vertices;
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    const auto [a, b] = s.edge(e);
    const bool ia = set >> a & 1, ib = set >> b & 1;
    if (ia && ib) {
      ++edges;
      ++degree[a];
      ++degree[b];
      parent[find(a)] = find(b);
    } else if (ia || ib) {
      ++edges;
      ++leaves;
      ++degree[ia ? a : b];
    }
  }
  int roots = 0;
  for (int v = 0; v < k; ++v)
    if ((set >> v & 1) && find(v) == v) ++roots;
  p.connected = roots == 1;
  p.betti = edges - (vertices + leaves) + 1;
  p.all_degree_two = leaves == 0;
  p.max_degree = leaves > 0 ? 1 : 0;
  for (int v = 0; v < k; ++v) {
    if (!(set >> v & 1)) continue;
    p.max_degree = std::max(p.max_degree, degree[v]);
    if (degree[v] >= 3) ++p.essential;
    if (degree[v] == 3) ++p.degree_three;
    if (degree[v] != 2) p.all_degree_two = false;
  }
  return p;
}

enum class OracleKind { NonHyperbolic, F2xZ };

Verdict run_oracle(const Graph& g, int n, const Limits& limits, OracleKind kind) {
  require_connected(g);
  require_particles(n);
  const Graph s = smooth(normalize(g));
  const int k = s.vertex_count();
  if (k > static_cast<int>(limits.max_oracle_vertices) || k > 30)
    throw ResourceLimit("oracle search needs " + std::to_string(k) + " smoothed vertices, cap is " +
                        std::to_string(limits.max_oracle_vertices));
  std::vector<std::pair<std::uint32_t, LambdaProps>> connected;
  for (std::uint32_t set = 1; set < (1u << k); ++set) {
    auto p = lambda_props(s, set);
    if (p.connected) connected.emplace_back(set, p);
  }
  auto names = [&](std::uint32_t set) {
    std::vector<std::string> out;
    for (int v = 0; v < k; ++v)
      if (set >> v & 1) out.push_back(s.vertex_name(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const auto& [a, pa] : connected) {
    for (const auto& [b, pb] : connected) {
      if (a & b) continue;
      for (int r = 1; r < n; ++r) {
        const int t = n - r;
        const bool hit = kind == OracleKind::NonHyperbolic ? pa.nontrivial(r) && pb.nontrivial(t)
                                                           : pa.contains_F2(r) && pb.nontrivial(t);
        if (hit)
          return {true, {{"disjoint_subgraphs", {names(a), names(b)},
                          "particles " + std::to_string(r) + " + " + std::to_string(t)}}};
      }
    }
  }
  return {false, {}};
}

}  // namespace

Verdict oracle_nonhyperbolic(const Graph& g, int n, const Limits& limits) {
  return run_oracle(g, n, limits, OracleKind::NonHyperbolic);
}

Verdict oracle_F2xZ(const Graph& g, int n, const Limits& limits) { return run_oracle(g, n, limits, OracleKind::F2xZ); }

// ------------------------------------------------------ peripheral criterion

namespace {

struct Members {
  std::vector<bool> vertices;
  std::vector<bool> edges;
};

bool cycle_inside(const Cycle& c, const Subgraph& s) {
  return std::all_of(c.edges.begin(), c.edges.end(), [&](EdgeId e) { return s.contains_edge(e); });
}

bool cycles_disjoint(const Cycle& a, const Cycle& b) {
  for (auto v : a.vertices)
    if (b.contains(v)) return false;
  return true;
}

std::string describe(const Graph& g, const Cycle& c) {
  std::string out;
  for (auto v : c.vertices) out += (out.empty() ? "" : "-") + g.vertex_name(v);
  return out;
}

}  // namespace

PeripheralReport check_peripheral_collection(const Graph& g, const PeripheralCollection& collection,
                                             const Limits& limits) {
  require_connected(g);
  if (!g.is_simple()) throw PreconditionError("peripheral check needs a normalized graph");
  for (const auto& s : collection)
    if (&s.parent() != &g) throw PreconditionError("collection members must be subgraphs of the given graph");
  PeripheralReport report;
  report.all_proper = std::all_of(collection.begin(), collection.end(), [&](const Subgraph& s) {
    return s.vertex_count() < g.vertex_count() || s.edge_count() < g.edge_count();
  });
  auto fail = [&](int condition, std::string detail) {
    report.valid = false;
    report.failed_condition = condition;
    report.detail = std::move(detail);
    report.conclusion = "criterion inconclusive";
    return report;
  };

  const auto cycles = simple_cycles(g, limits);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!cycles_disjoint(cycles[i], cycles[j])) continue;
      const bool covered = std::any_of(collection.begin(), collection.end(), [&](const Subgraph& s) {
        return cycle_inside(cycles[i], s) && cycle_inside(cycles[j], s);
      });
      if (!covered)
        return fail(1, "disjoint cycles " + describe(g, cycles[i]) + " and " + describe(g, cycles[j]) +
                           " lie in no member");
    }
  }

  for (std::size_t i = 0; i < collection.size(); ++i) {
    for (std::size_t j = i + 1; j < collection.size(); ++j) {
      std::vector<VertexId> common;
      for (auto v : collection[i].vertices())
        if (collection[j].contains_vertex(v)) common.push_back(v);
      std::vector<EdgeId> shared;
      for (auto e : collection[i].edges())
        if (collection[j].contains_edge(e)) shared.push_back(e);
      const auto meet = Subgraph::from_edges(g, shared, common);
      const auto mg = meet.to_graph();
      bool segments = mg.edge_count() - mg.vertex_count() + mg.component_count() == 0;
      for (VertexId v = 0; v < mg.vertex_count() && segments; ++v) segments = mg.degree(v) <= 2;
      if (!segments)
        return fail(2, "members " + std::to_string(i) + " and " + std::to_string(j) +
                           " meet in something other than segments");
    }
  }

  // A path leaving a member between two of its vertices off a cycle C exists
  // iff an outside edge joins two member vertices off C, or a component of
  // Γ - C - member touches two member vertices off C.
  for (std::size_t i = 0; i < collection.size(); ++i) {
    const auto& s = collection[i];
    for (const auto& c : cycles) {
      if (!cycle_inside(c, s)) continue;
      std::vector<bool> off(g.vertex_count(), false);
      for (auto v : c.vertices) off[v] = true;
      auto violation = [&](const std::string& what) {
        return fail(3, "member " + std::to_string(i) + ": " + what + " avoids cycle " + describe(g, c));
      };
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.edge(e);
        if (!s.contains_edge(e) && !off[a] && !off[b] && s.contains_vertex(a) && s.contains_vertex(b))
          return violation("edge " + g.edge_name(e));
      }
      std::vector<int> seen(g.vertex_count(), 0);
      for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (off[start] || s.contains_vertex(start) || seen[start]) continue;
        std::vector<VertexId> stack{start};
        seen[start] = 1;
        std::vector<VertexId> touched;
        while (!stack.empty()) {
          const auto v = stack.back();
          stack.pop_back();
          for (const auto& inc : g.incident(v)) {
            const auto w = inc.neighbor;
            if (off[w]) continue;
            if (s.contains_vertex(w)) {
              if (std::find(touched.begin(), touched.end(), w) == touched.end()) touched.push_back(w);
            } else if (!seen[w]) {
              seen[w] = 1;
              stack.push_back(w);
            }
          }
        }
        if (touched.size() >= 2)
          return violation("path through " + g.vertex_name(start) + " between " + g.vertex_name(touched[0]) +
                           " and " + g.vertex_name(touched[1]));
      }
    }
  }

  report.valid = true;
  report.failed_condition = 0;
  report.conclusion = report.all_proper ? "relatively hyperbolic" : "criterion holds but a member is not proper";
  return report;
}

// --------------------------------------------------------------- full report

std::string fingerprint(const Graph& g) {
  std::vector<std::string> lines;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) lines.push_back("v " + g.vertex_name(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto a = g.vertex_name(g.edge(e).a), b = g.vertex_name(g.edge(e).b);
    if (b < a) std::swap(a, b);
    lines.push_back("e " + a + " " + b);
  }
  std::sort(lines.begin(), lines.end());
  std::uint64_t hash = 1469598103934665603ull;
  for (const auto& line : lines) {
    for (unsigned char ch : line + "\n") {
      hash ^= ch;
      hash *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

struct Factor {
  bool nontrivial = false;
  bool cyclic = false;
  bool hyperbolic = true;
  bool F2 = false;
  bool F2xZ = false;
  FreeCertificate free{true, "trivial factor"};
  std::vector<Witness> witnesses;
};

Factor factor_verdicts(const Graph& c, int particles) {
  Factor f;
  if (particles == 0) return f;
  f.nontrivial = factor_nontrivial(c, particles);
  f.F2 = factor_contains_F2(c, particles);
  if (particles == 1) {
    f.cyclic = first_betti(c) == 1;
    f.free = {true, "one particle: the fundamental group of a graph"};
    return f;
  }
  f.cyclic = is_infinite_cyclic(c, particles).holds;
  auto hyp = is_hyperbolic(c, particles);
  auto toral = is_toral_rel_hyp(c, particles);
  f.hyperbolic = hyp.holds;
  f.F2xZ = !toral.holds;
  f.free = free_certificate(c, particles);
  if (!hyp.holds) f.witnesses.insert(f.witnesses.end(), hyp.witnesses.begin(), hyp.witnesses.end());
  if (!toral.holds) f.witnesses.insert(f.witnesses.end(), toral.witnesses.begin(), toral.witnesses.end());
  return f;
}

}  // namespace

ClassificationReport full_report(const Graph& input, int n, const ReportOptions& options, const Limits& limits) {
  require_particles(n);
  if (input.vertex_count() == 0) throw PreconditionError("graph is empty");
  const Graph g = normalize(input);
  ClassificationReport report;
  report.fingerprint = fingerprint(input);
  report.particles = n;
  report.connected = g.is_connected();
  if (report.connected) report.shape = classify_shape(g);

  const auto comps = component_graphs(g);
  for (const auto& assignment : particle_assignments(g, n)) {
    AssignmentVerdicts av;
    av.assignment = assignment;
    std::vector<Factor> factors;
    for (std::size_t i = 0; i < comps.size(); ++i) factors.push_back(factor_verdicts(comps[i], assignment.counts[i]));
    std::vector<const Factor*> nontrivial;
    for (const auto& f : factors)
      if (f.nontrivial) nontrivial.push_back(&f);
    av.trivial = nontrivial.empty();
    av.infinite_cyclic = nontrivial.size() == 1 && nontrivial[0]->cyclic;
    av.hyperbolic = nontrivial.empty() || (nontrivial.size() == 1 && nontrivial[0]->hyperbolic);
    av.contains_F2 = std::any_of(factors.begin(), factors.end(), [](const Factor& f) { return f.F2; });
    av.contains_F2xZ = std::any_of(factors.begin(), factors.end(), [](const Factor& f) { return f.F2xZ; }) ||
                       (av.contains_F2 && nontrivial.size() >= 2);
    av.toral_rel_hyp = !av.contains_F2xZ;
    if (av.trivial) {
      av.acyl_status = AcylStatus::Trivial;
      av.free = {true, "trivial group"};
    } else if (av.infinite_cyclic) {
      av.acyl_status = AcylStatus::InfiniteCyclic;
    } else if (nontrivial.size() == 1) {
      av.acyl_status = AcylStatus::AcylindricallyHyperbolic;
    } else {
      av.acyl_status = AcylStatus::NotAcylindricallyHyperbolic;
    }
    if (!av.trivial)
      av.free = nontrivial.size() == 1 ? nontrivial[0]->free
                                       : FreeCertificate{false, "product of two nontrivial factors"};
    for (const auto& f : factors) av.witnesses.insert(av.witnesses.end(), f.witnesses.begin(), f.witnesses.end());
    if (nontrivial.size() >= 2)
      av.witnesses.push_back({"product", {}, std::to_string(nontrivial.size()) + " nontrivial factors"});

    auto rule = [&](bool ok, const std::string& what) {
      if (!ok) report.inconsistencies.push_back(what);
    };
    rule(!av.trivial || (av.hyperbolic && !av.infinite_cyclic && !av.contains_F2), "trivial group with a property");
    rule(!av.hyperbolic || av.toral_rel_hyp, "hyperbolic but not toral relatively hyperbolic");
    rule(!av.infinite_cyclic || (av.hyperbolic && !av.contains_F2), "infinite cyclic with a free subgroup");
    rule(!av.contains_F2xZ || av.contains_F2, "F2 x Z without F2");
    report.assignments.push_back(std::move(av));
  }

  if (report.connected) {
    const bool obstructions = hyperbolic_by_obstructions(g, n).holds;
    if (obstructions != report.assignments.front().hyperbolic)
      report.inconsistencies.push_back("shape and obstruction forms of hyperbolicity disagree");
  }

  if (options.run_oracles && report.connected) {
    try {
      const bool nonhyp = oracle_nonhyperbolic(g, n, limits).holds;
      report.hyperbolic_oracle.agrees = nonhyp == !report.assignments.front().hyperbolic;
      const bool fxz = oracle_F2xZ(g, n, limits).holds;
      report.toral_oracle.agrees = fxz == report.assignments.front().contains_F2xZ;
    } catch (const ResourceLimit& e) {
      report.hyperbolic_oracle.note = report.toral_oracle.note = std::string("skipped: ") + e.what();
    }
    if (report.hyperbolic_oracle.agrees == false) report.inconsistencies.push_back("hyperbolicity oracle disagrees");
    if (report.toral_oracle.agrees == false) report.inconsistencies.push_back("F2 x Z oracle disagrees");
  } else if (!options.run_oracles) {
    report.hyperbolic_oracle.note = report.toral_oracle.note = "not requested";
  } else {
    report.hyperbolic_oracle.note = report.toral_oracle.note = "disconnected input";
  }

  if (options.compute_homology) {
    try {
      const auto h = subdivide_for(g, n);
      const auto x = CubeComplex::build(h, n, std::nullopt, limits);
      report.homology = homology(chain_complex(x), limits);
      if (report.connected && report.assignments.front().free.free && !report.homology->torsion_free())
        report.inconsistencies.push_back("free certificate but torsion in homology");
    } catch (const ResourceLimit& e) {
      report.homology_note = std::string("skipped: ") + e.what();
    }
  }
  return report;
}

}  // namespace braidscope
