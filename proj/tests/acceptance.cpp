// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "braidscope/classifier.hpp"
#include "braidscope/diagrams.hpp"
#include "braidscope/homology.hpp"
#include "braidscope/hyperplanes.hpp"
#include "fixtures.hpp"
#include "peripheral_fixtures.hpp"
#include "word_oracles.hpp"

using namespace braidscope;
using namespace braidscope::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& what) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body, double budget_seconds) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && seconds > budget_seconds)
    o.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(budget_seconds) + " s");
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << "  " << title << "  (" << seconds << " s)";
  if (!o.detail.empty()) line << "  " << o.detail;
  std::cout << line.str() << std::endl;
}

std::string cell(const std::string& graph, int n) { return graph + ",n=" + std::to_string(n); }

/// Compares a predicate grid with an expected rule, listing mismatches.
/// `note` is appended to a mismatch, e.g. when the expectation contradicts another rule.
void compare_grid(Outcome& o, const std::string& label, const std::string& what, int n, bool got, bool expected,
                  const std::string& note = "") {
  if (got != expected)
    o.fail(what + " " + cell(label, n) + " computed " + (got ? "true" : "false") + ", published " +
           (expected ? "true" : "false") + note);
}

// A hyperbolic group is toral relatively hyperbolic.
std::string toral_note(bool hyp_published, bool toral_published) {
  return hyp_published && !toral_published ? " (published hyperbolicity rule says hyperbolic)" : "";
}

// ------------------------------------------------------------------ grids

Outcome complete_grid() {
  Outcome o;
  int compared = 0;
  for (int m = 1; m <= 8; ++m) {
    const auto g = families::complete(m);
    for (int n = 1; n <= 5; ++n) {
      // A single vertex holds one particle; larger n has no configurations.
      if (m == 1 && n > 1) continue;
      const bool hyp_published = n == 1 || (n == 2 && m <= 5) || m <= 3;
      const bool toral_published = n == 1 || (n == 2 && m <= 7) || (n == 3 && m <= 4) || m <= 3;
      const std::string label = "K" + std::to_string(m);
      compare_grid(o, label, "hyperbolic", n, is_hyperbolic(g, n).holds, hyp_published);
      compare_grid(o, label, "toral", n, is_toral_rel_hyp(g, n).holds, toral_published, toral_note(hyp_published, toral_published));
      ++compared;
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " cells match";
  return o;
}

Outcome bipartite_grid() {
  Outcome o;
  int compared = 0;
  for (int p = 1; p <= 5; ++p) {
    for (int q = p; q <= 5; ++q) {
      const auto g = families::complete_bipartite(p, q);
      for (int n = 1; n <= 5; ++n) {
        const bool hyp_published =
            n == 1 || (n == 2 && p <= 3) || (n == 3 && p <= 2) || (n >= 4 && p == 2 && q == 2) || (n >= 4 && p == 1);
        const bool toral_published = n == 1 || (n == 2 && p <= 4 && q <= 4) || (n == 3 && p <= 3 && q <= 3) ||
                                 (n == 4 && p == 2 && q <= 3) || (p <= 2 && q <= 2);
        const std::string label = "K" + std::to_string(p) + "," + std::to_string(q);
        compare_grid(o, label, "hyperbolic", n, is_hyperbolic(g, n).holds, hyp_published);
        compare_grid(o, label, "toral", n, is_toral_rel_hyp(g, n).holds, toral_published, toral_note(hyp_published, toral_published));
        ++compared;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " cells match";
  return o;
}

// -------------------------------------------------------------- UC_2(K_5)

Outcome k5_surface() {
  Outcome o;
  const auto x = CubeComplex::build(families::complete(5), 2);
  if (x.f_vector() != std::vector<std::uint64_t>{10, 30, 15}) o.fail("f-vector");
  if (euler_characteristic(x) != -5) o.fail("euler characteristic");
  const auto s = is_surface(x);
  if (!s.is_surface) o.fail("not a closed surface");
  for (int len : s.link_cycle_lengths)
    if (len != 6) o.fail("link of length " + std::to_string(len));
  const auto h = homology(chain_complex(x));
  if (h.groups.size() != 3) o.fail("homology degrees");
  if (h.groups[0] != HomologyGroup{1, {}}) o.fail("H0 = " + to_string(h.groups[0]));
  if (h.groups[1] != HomologyGroup{6, {2}}) o.fail("H1 = " + to_string(h.groups[1]));
  if (h.groups[2] != HomologyGroup{0, {}}) o.fail("H2 = " + to_string(h.groups[2]));
  if (o.pass) o.detail = "f=(10,30,15) chi=-5 links 6-cycles H1=" + to_string(h.groups[1]) + " H2=0";
  return o;
}

// ------------------------------------------------------ complexes in play

struct Built {
  std::string label;
  CubeComplex x;
};

std::vector<std::pair<std::string, Graph>> fixture_graphs() {
  return {{"K4", families::complete(4)},
          {"K5", families::complete(5)},
          {"K6", families::complete(6)},
          {"K2,3", families::complete_bipartite(2, 3)},
          {"K3,3", families::complete_bipartite(3, 3)},
          {"C5", families::cycle(5)},
          {"P4", families::path(4)},
          {"star3", families::star(3)},
          {"star4", families::star(4, 2)},
          {"rose2,1", families::rose(2, 1)},
          {"bowtie", bowtie()},
          {"diamond", diamond()},
          {"two triangles", two_triangles()},
          {"H", h_graph()},
          {"spider", spider_tree()},
          {"sun", cycle_with_rays(6, {0, 2, 4})},
          {"petersen", petersen()},
          {"bouquets", joined_bouquets()},
          {"apexes", square_with_two_apexes()}};
}

std::vector<std::pair<std::string, Graph>> random_graphs() {
  std::mt19937 rng(2024);
  std::vector<std::pair<std::string, Graph>> out;
  for (int i = 0; i < 20; ++i) {
    const int v = 4 + static_cast<int>(rng() % 5);
    out.emplace_back("random" + std::to_string(i), random_connected_graph(rng, v, 0.3));
  }
  return out;
}

std::vector<Built> suite_complexes() {
  std::vector<Built> out;
  auto add = [&](const std::string& label, const Graph& g) {
    for (int n : {2, 3})
      if (g.vertex_count() >= n) out.push_back({label + ",n=" + std::to_string(n), CubeComplex::build(g, n)});
  };
  for (const auto& [label, g] : fixture_graphs()) add(label, g);
  for (const auto& [label, g] : random_graphs()) add(label, g);
  return out;
}

Outcome hyperplane_double_count() {
  Outcome o;
  int checked = 0;
  for (const auto& b : suite_complexes()) {
    const auto bfs = hyperplanes_by_bfs(b.x);
    const auto comp = hyperplanes_by_components(b.x.graph(), b.x.particles());
    bool same = bfs.size() == comp.size();
    for (std::size_t i = 0; same && i < bfs.size(); ++i) same = same_hyperplane(bfs[i], comp[i]);
    if (!same) o.fail(b.label);
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " complexes agree";
  return o;
}

Outcome special_coloring() {
  Outcome o;
  int checked = 0;
  auto verify = [&](const std::string& label, const CubeComplex& x) {
    const auto r = verify_special_coloring(x);
    if (!r.pass) o.fail(label + " axiom " + std::to_string(r.failed_axiom));
    ++checked;
  };
  for (const auto& b : suite_complexes()) verify(b.label, b.x);
  for (int petals = 1; petals <= 3; ++petals)
    for (int rays = 0; rays <= 2; ++rays)
      for (int n = 2; n <= 4; ++n) {
        const auto g = subdivide_for(families::rose(petals, rays), n);
        verify("rose" + std::to_string(petals) + "," + std::to_string(rays) + ",n=" + std::to_string(n),
               CubeComplex::build(g, n));
      }
  auto broken = CubeComplex::build(families::complete(5), 2);
  broken.remove_cube(2, 0);
  const auto r = verify_special_coloring(broken);
  if (r.pass || r.failed_axiom != 4) o.fail("square removed from UC_2(K5) not caught by axiom 4");
  if (o.pass) o.detail = std::to_string(checked) + " complexes pass, synthetic violation fails axiom 4";
  return o;
}

// ------------------------------------------------------------ oracle sweep

std::vector<std::pair<std::string, Graph>> atlas() {
  std::ifstream in(std::string(BRAIDSCOPE_DATA_DIR) + "/connected_atlas7.txt");
  if (!in) throw std::runtime_error("atlas file missing");
  std::vector<std::pair<std::string, Graph>> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string id;
    int vertices = 0;
    ss >> id >> vertices;
    std::vector<std::pair<int, int>> pairs;
    for (std::string e; ss >> e;) {
      const auto dash = e.find('-');
      pairs.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
    }
    out.emplace_back("atlas" + id, from_pairs(vertices, pairs));
  }
  return out;
}

/// Multigraphs whose smoothings have at most seven vertices but whose
/// simple models need more: thetas, bouquets, dumbbells, looped paths.
std::vector<std::pair<std::string, Graph>> multigraph_extras() {
  std::vector<std::pair<std::string, Graph>> out;
  auto make = [](const std::vector<std::pair<int, int>>& pairs, int vertices) {
    Graph g;
    for (int v = 0; v < vertices; ++v) g.add_vertex("x" + std::to_string(v));
    for (std::size_t i = 0; i < pairs.size(); ++i) g.add_edge(pairs[i].first, pairs[i].second, "f" + std::to_string(i));
    return g;
  };
  for (int k = 3; k <= 6; ++k) out.emplace_back("theta" + std::to_string(k), make(std::vector(k, std::pair{0, 1}), 2));
  for (int k = 1; k <= 4; ++k) out.emplace_back("bouquet" + std::to_string(k), make(std::vector(k, std::pair{0, 0}), 1));
  out.emplace_back("dumbbell", make({{0, 0}, {0, 1}, {1, 1}}, 2));
  out.emplace_back("double dumbbell", make({{0, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 1}}, 2));
  out.emplace_back("theta with loops", make({{0, 1}, {0, 1}, {0, 1}, {0, 0}, {1, 1}}, 2));
  out.emplace_back("looped path", make({{0, 0}, {0, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 3}}, 4));
  out.emplace_back("triple theta chain", make({{0, 1}, {0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {2, 3}}, 4));
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto graphs = atlas();
  const auto extras = multigraph_extras();
  graphs.insert(graphs.end(), extras.begin(), extras.end());
  long pairs = 0;
  int swept = 0;
  int mismatches = 0;
  for (const auto& [label, g] : graphs) {
    if (smooth(normalize(g)).vertex_count() > 7) continue;
    if (g.edge_count() == 0) continue;  // one vertex: no configuration for n >= 2
    ++swept;
    for (int n = 2; n <= 5; ++n) {
      ++pairs;
      if (is_hyperbolic(g, n).holds == oracle_nonhyperbolic(g, n).holds) {
        if (++mismatches <= 5) o.fail("hyperbolic " + cell(label, n));
      }
      if (is_toral_rel_hyp(g, n).holds == oracle_F2xZ(g, n).holds) {
        if (++mismatches <= 5) o.fail("toral " + cell(label, n));
      }
    }
  }
  if (mismatches > 5) o.fail(std::to_string(mismatches) + " mismatches in total");
  if (o.pass) o.detail = std::to_string(swept) + " graphs, " + std::to_string(pairs) + " (graph, n) pairs agree";
  return o;
}

// ------------------------------------------------------------ word problem

Outcome word_soundness() {
  Outcome o;
  struct Case {
    std::string label;
    Graph g;
    Configuration base;
  };
  std::vector<Case> cases{{"P3", families::path(3), {0, 2}},
                          {"C4", families::cycle(4), {0, 2}},
                          {"star3", families::star(3), {1, 2}},
                          {"bowtie", bowtie(), {1, 3}},
                          {"two triangles", two_triangles(), {0, 3}},
                          {"K4", families::complete(4), {0, 1}},
                          {"K5", families::complete(5), {0, 1}},
                          {"K2,3 three", subdivide_for(families::complete_bipartite(2, 3), 3), {0, 1, 2}},
                          {"C5 three", families::cycle(5), {0, 1, 2}},
                          {"H", h_graph(), {2, 3}}};
  std::mt19937 rng(99);
  long words = 0;
  for (const auto& [label, g, base] : cases) {
    const auto x = CubeComplex::build(g, static_cast<int>(base.size()));
    if (x.count(0) > 200) {
      o.fail(label + " exceeds 200 complex vertices");
      continue;
    }
    const CoverBall ball(x, base, 8);
    SoundnessCheck check(g, ball);
    for_each_legal_word(g, base, 6, [&](const Word& w) { check.check(base, w); });
    for (int i = 0; i < 1000; ++i) {
      const int length = static_cast<int>(rng() % 9);
      check.check(base, random_legal_word(g, base, length, rng));
    }
    if (check.tally.failures) o.fail(label + ": " + std::to_string(check.tally.failures) + " disagreements");
    words += check.tally.words;
  }
  if (o.pass) o.detail = std::to_string(words) + " words over " + std::to_string(cases.size()) + " complexes";
  return o;
}

// -------------------------------------------------------------- freeness

Outcome rose_homology() {
  Outcome o;
  int checked = 0;
  for (int petals = 1; petals <= 3; ++petals) {
    for (int rays = 0; rays <= 2; ++rays) {
      for (int n = 1; n <= 4; ++n) {
        const auto g = subdivide_for(families::rose(petals, rays), n);
        const auto x = CubeComplex::build(g, n);
        const auto h = homology(chain_complex(x));
        const std::string label = "rose" + std::to_string(petals) + "," + std::to_string(rays) + ",n=" + std::to_string(n);
        if (!h.torsion_free()) o.fail(label + " torsion");
        for (std::size_t d = 2; d < h.groups.size(); ++d)
          if (h.groups[d].free_rank != 0) o.fail(label + " H" + std::to_string(d));
        if (static_cast<std::int64_t>(h.groups[1].free_rank) != 1 - euler_characteristic(x)) o.fail(label + " rank");
        ++checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " rose complexes";
  return o;
}

// -------------------------------------------------------------- witnesses

Outcome witnesses() {
  Outcome o;
  int checked = 0;
  auto inspect = [&](const std::string& label, const Graph& g, const Diagram& d, int n) {
    const auto s = cyclically_reduce(g, d);
    if (!d.spherical()) o.fail(label + " not spherical");
    if (!s.conjugator.empty() || !(s.cyclic_reduction == d)) o.fail(label + " not cyclically reduced");
    if (!s.support_connected) o.fail(label + " support disconnected");
    if (static_cast<int>(s.particles.size()) != n) o.fail(label + " moves " + std::to_string(s.particles.size()));
    if (!cyclic_centralizer_witness(g, d)) o.fail(label + " no witness");
    ++checked;
  };
  for (int n : {2, 3}) {
    for (int len : {n + 2, n + 3, 7}) {
      const auto c = families::cycle(len);
      Configuration base;
      for (int i = 0; i < n; ++i) base.push_back(i);
      inspect("rotation C" + std::to_string(len) + ",n=" + std::to_string(n), c,
              make_rotation(c, simple_cycles(c).front(), base), n);
    }
    // A rotation inside a larger graph: the first cycle of a subdivided K4.
    const auto k4 = subdivide_for(families::complete(4), n);
    const auto cycle = simple_cycles(k4).front();
    Configuration base(cycle.vertices.begin(), cycle.vertices.begin() + n);
    std::sort(base.begin(), base.end());
    inspect("rotation in K4,n=" + std::to_string(n), k4, make_rotation(k4, cycle, base), n);

    const auto t = tripod_graph(n);
    inspect("tripod swap,n=" + std::to_string(n), t, make_tripod_swap(t, n), n);
  }
  if (o.pass) o.detail = std::to_string(checked) + " witness elements";
  return o;
}

// ------------------------------------------------------------- peripheral

Outcome peripheral() {
  Outcome o;
  auto expect_valid = [&](const std::string& label, const Graph& g, const PeripheralCollection& gg) {
    const auto r = check_peripheral_collection(g, gg);
    if (!r.valid) o.fail(label + " rejected at condition " + std::to_string(r.failed_condition) + ": " + r.detail);
    if (!r.all_proper) o.fail(label + " has a member that is not proper");
  };
  const auto bouquets = joined_bouquets();
  expect_valid("joined bouquets", bouquets, joined_bouquets_collection(bouquets));
  const auto apexes = square_with_two_apexes();
  expect_valid("square with two apexes", apexes, disjoint_cycle_pairs(apexes, 3));
  const auto k6 = families::complete(6);
  expect_valid("K6", k6, disjoint_cycle_pairs(k6, 3));
  const auto k44 = families::complete_bipartite(4, 4);
  expect_valid("K4,4", k44, disjoint_cycle_pairs(k44, 4));

  int rejected = 0;
  for (const auto& [label, g] : fixture_graphs()) {
    if (!g.is_connected() || !g.is_simple() || is_hyperbolic(g, 2).holds) continue;  // needs disjoint cycles
    const auto r = check_peripheral_collection(g, {});
    if (r.valid || r.failed_condition != 1) o.fail("empty collection accepted on " + label);
    ++rejected;
  }
  for (const auto* g : {&bouquets, &apexes, &k44}) {
    const auto r = check_peripheral_collection(*g, {});
    if (r.valid || r.failed_condition != 1) o.fail("empty collection accepted");
    ++rejected;
  }
  if (o.pass) o.detail = "4 examples valid and proper; empty collection rejected on " + std::to_string(rejected) + " graphs";
  return o;
}

}  // namespace

int main() {
  report(1, "complete graph grid m<=8 n<=5", complete_grid, 30);
  report(2, "complete bipartite grid p,q<=5 n<=5", bipartite_grid, 60);
  report(3, "UC_2(K5) surface and homology", k5_surface, 5);
  report(4, "hyperplane double count", hyperplane_double_count, 0);
  report(5, "special coloring axioms", special_coloring, 0);
  report(6, "predicates against subgraph oracles", oracle_equivalence, 600);
  report(7, "word problem soundness", word_soundness, 0);
  report(8, "rose homology", rose_homology, 0);
  report(9, "witness elements", witnesses, 0);
  report(10, "peripheral collections", peripheral, 0);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures;
}
