#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "braidscope/classifier.hpp"
#include "fixtures.hpp"
#include "peripheral_fixtures.hpp"

using namespace braidscope;
using namespace braidscope::testing;

namespace {

Graph theta() { return families::complete_bipartite(2, 3); }
Graph two_triangles_at_vertex() { return bowtie(); }

std::vector<Graph> fixture_graphs() {
  std::vector<Graph> out{families::complete(4),        families::complete(5),     families::complete(6),
                         families::complete_bipartite(2, 3), families::complete_bipartite(3, 3),
                         families::cycle(5),           families::path(4),         families::star(3),
                         families::star(4),            families::rose(2, 1),      families::rose(3, 2),
                         bowtie(),                     diamond(),                 h_graph(),
                         spider_tree(),                cycle_with_rays(5, {0, 2}), cycle_with_rays(6, {0, 0, 3}),
                         cycle_with_rays(4, {0, 2}),   joined_bouquets(),         square_with_two_apexes()};
  return out;
}

ParticleAssignment all_on_one(int n) { return {{n}}; }

}  // namespace

TEST_CASE("particle assignments") {
  const auto g = two_triangles();
  const auto a = particle_assignments(g, 2);
  CHECK(a.size() == 3);
  for (const auto& x : a) CHECK(x.total() == 2);
  Graph iso;
  iso.add_vertex("x");
  iso.add_vertex("y");
  CHECK(particle_assignments(iso, 2).size() == 1);
  CHECK(particle_assignments(iso, 3).empty());
}

TEST_CASE("triviality") {
  CHECK(is_trivial(families::path(6), all_on_one(5)).holds);
  CHECK_FALSE(is_trivial(families::star(3), all_on_one(2)).holds);
  CHECK(is_trivial(families::star(3), all_on_one(1)).holds);
  CHECK_FALSE(is_trivial(families::cycle(4), all_on_one(1)).holds);
  // One particle on a triangle, one on a segment.
  const auto mixed = from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  const auto t = is_trivial(mixed, {{0, 2}});
  CHECK(t.holds);
  const auto n = is_trivial(mixed, {{1, 1}});
  CHECK_FALSE(n.holds);
  REQUIRE(n.witnesses.size() == 1);
  CHECK(n.witnesses[0].parts[0] == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("infinite cyclic") {
  CHECK(is_infinite_cyclic(families::star(3), 2).holds);
  CHECK_FALSE(is_infinite_cyclic(families::star(3), 3).holds);
  CHECK(is_infinite_cyclic(families::cycle(7), 4).holds);
  CHECK(is_infinite_cyclic(families::cycle(3), 1).holds);
  CHECK_FALSE(is_infinite_cyclic(theta(), 1).holds);
  CHECK_FALSE(is_infinite_cyclic(families::star(4), 2).holds);
}

TEST_CASE("hyperbolicity examples") {
  CHECK(is_hyperbolic(families::complete(5), 2).holds);
  const auto k6 = is_hyperbolic(families::complete(6), 2);
  CHECK_FALSE(k6.holds);
  REQUIRE(k6.witnesses.size() == 1);
  CHECK(k6.witnesses[0].kind == "disjoint_cycles");
  CHECK(k6.witnesses[0].parts[0].size() == 3);
  CHECK(k6.witnesses[0].parts[1].size() == 3);
  CHECK(is_hyperbolic(families::complete_bipartite(2, 4), 3).holds);
  CHECK(is_hyperbolic(families::complete(4), 1).holds);
  CHECK_FALSE(is_hyperbolic(families::complete(4), 3).holds);
  CHECK(is_hyperbolic(families::rose(3, 2), 6).holds);
  CHECK_FALSE(is_hyperbolic(h_graph(), 4).holds);
  CHECK(is_hyperbolic(h_graph(), 3).holds);
  CHECK(is_hyperbolic(cycle_with_rays(5, {0, 1, 3}), 3).holds);
}

TEST_CASE("shape and obstruction forms of hyperbolicity agree") {
  for (const auto& g : fixture_graphs())
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(is_hyperbolic(g, n).holds == hyperbolic_by_obstructions(g, n).holds);
    }
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto g = random_connected_graph(rng, 7, 0.2);
    for (int n = 2; n <= 4; ++n) CHECK(is_hyperbolic(g, n).holds == hyperbolic_by_obstructions(g, n).holds);
  }
}

TEST_CASE("toral relative hyperbolicity examples") {
  CHECK(is_toral_rel_hyp(families::complete(6), 2).holds);
  CHECK_FALSE(is_toral_rel_hyp(families::complete(8), 2).holds);
  CHECK(is_toral_rel_hyp(families::complete_bipartite(2, 3), 4).holds);
  CHECK_FALSE(is_toral_rel_hyp(families::complete_bipartite(2, 3), 5).holds);
  CHECK(is_toral_rel_hyp(h_graph(), 4).holds);
  CHECK(is_toral_rel_hyp(cycle_with_rays(5, {0, 2}), 4).holds);
  CHECK_FALSE(is_toral_rel_hyp(spider_tree(), 4).holds);
  CHECK(is_toral_rel_hyp(families::rose(3, 2), 7).holds);

  const auto k7 = is_toral_rel_hyp(families::complete(7), 2);
  CHECK_FALSE(k7.holds);
  REQUIRE(k7.witnesses.size() == 1);
  CHECK(k7.witnesses[0].parts[0].size() == 3);
  CHECK(k7.witnesses[0].parts[1].size() == 4);

  // One witness per n = 3 obstruction.
  CHECK(is_toral_rel_hyp(families::complete_bipartite(3, 3), 3).witnesses[0].kind == "segment_off_cycle");
  const auto star_off = from_pairs(9, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {4, 8}});
  CHECK(is_toral_rel_hyp(star_off, 3).witnesses[0].kind == "degree_four_off_cycle");
  CHECK(is_toral_rel_hyp(star_off, 2).holds);
  const auto theta_with_claw =
      from_pairs(8, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}, {0, 5}, {5, 6}, {5, 7}});
  CHECK(is_toral_rel_hyp(theta_with_claw, 3).witnesses[0].kind == "essential_vertex_off_two_cycles");
  CHECK(is_toral_rel_hyp(theta_with_claw, 2).holds);
  const auto lollipop_pair = from_pairs(8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {5, 6}, {0, 7}, {7, 3}});
  CHECK_FALSE(is_toral_rel_hyp(lollipop_pair, 3).holds);
  CHECK(is_toral_rel_hyp(lollipop_pair, 2).holds);
}

TEST_CASE("acylindrical trichotomy") {
  CHECK(acyl_hyp_status(families::cycle(5), 2) == AcylStatus::InfiniteCyclic);
  CHECK(acyl_hyp_status(families::complete(5), 2) == AcylStatus::AcylindricallyHyperbolic);
  CHECK(acyl_hyp_status(families::path(4), 3) == AcylStatus::Trivial);
  CHECK(acyl_hyp_status(families::star(3), 3) == AcylStatus::AcylindricallyHyperbolic);
}

TEST_CASE("free certificates") {
  CHECK(free_certificate(families::rose(3, 0), 5).free);
  const auto bow = free_certificate(two_triangles_at_vertex(), 2);
  CHECK(bow.free);
  const auto k5 = free_certificate(families::complete(5), 2);
  CHECK_FALSE(k5.free);
  CHECK(k5.reason == "no criterion applies");
  CHECK_FALSE(free_certificate(theta(), 3).free);
  CHECK(free_certificate(theta(), 2).free);
}

TEST_CASE("free subgroups") {
  CHECK(contains_free_nonabelian(theta(), all_on_one(1)).holds);
  CHECK_FALSE(contains_free_nonabelian(families::star(3), all_on_one(2)).holds);
  CHECK(contains_free_nonabelian(families::star(3), all_on_one(3)).holds);
  CHECK_FALSE(contains_free_nonabelian(families::cycle(5), all_on_one(4)).holds);
  CHECK(contains_free_nonabelian(families::star(4), all_on_one(2)).holds);
}

TEST_CASE("free subgroups pass to larger graphs") {
  // Pairs (subgraph, graph) with the subgraph connected, induced and proper.
  const std::vector<std::pair<Graph, Graph>> pairs{
      {families::star(3), families::star(4)},
      {families::cycle(3), bowtie()},
      {families::star(3), h_graph()},
      {theta(), families::complete_bipartite(3, 3)},
      {families::complete(4), families::complete(5)},
      {cycle_with_rays(4, {0}), cycle_with_rays(4, {0, 2})},
  };
  for (const auto& [sub, whole] : pairs)
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= n; ++m)
        if (contains_free_nonabelian(sub, all_on_one(m)).holds) CHECK(contains_free_nonabelian(whole, all_on_one(n)).holds);
}

TEST_CASE("oracle examples") {
  const auto k6 = oracle_nonhyperbolic(families::complete(6), 2);
  CHECK(k6.holds);
  CHECK(k6.witnesses[0].parts[0].size() == 3);
  CHECK(k6.witnesses[0].parts[1].size() == 3);
  CHECK_FALSE(oracle_nonhyperbolic(families::complete(5), 2).holds);
  const auto k8 = oracle_F2xZ(families::complete(8), 2);
  CHECK(k8.holds);
  CHECK(k8.witnesses[0].parts[0].size() + k8.witnesses[0].parts[1].size() <= 8);
  Limits tight;
  tight.max_oracle_vertices = 4;
  CHECK_THROWS_AS(oracle_F2xZ(families::complete(5), 2, tight), ResourceLimit);
}

TEST_CASE("fast predicates agree with the oracles on fixtures") {
  std::vector<Graph> graphs = fixture_graphs();
  graphs.push_back(families::complete(7));
  graphs.push_back(families::complete_bipartite(3, 4));
  std::mt19937 rng(17);
  for (int i = 0; i < 25; ++i) graphs.push_back(random_connected_graph(rng, 7, 0.25));
  for (const auto& g : graphs) {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(is_hyperbolic(g, n).holds == !oracle_nonhyperbolic(g, n).holds);
      CHECK(is_toral_rel_hyp(g, n).holds == !oracle_F2xZ(g, n).holds);
    }
  }
}

namespace {

// Brute force for the third peripheral condition on a single member.
bool paths_stay_inside(const Graph& g, const Subgraph& s) {
  for (const auto& c : simple_cycles(g)) {
    bool inside = true;
    for (auto e : c.edges) inside = inside && s.contains_edge(e);
    if (!inside) continue;
    std::vector<bool> used(g.vertex_count(), false);
    for (auto v : c.vertices) used[v] = true;
    bool ok = true;
    std::function<void(VertexId, VertexId, bool)> walk = [&](VertexId start, VertexId v, bool left) {
      if (!ok) return;
      if (v != start && s.contains_vertex(v) && left) {
        ok = false;
        return;
      }
      for (const auto& inc : g.incident(v)) {
        if (used[inc.neighbor]) continue;
        used[inc.neighbor] = true;
        walk(start, inc.neighbor, left || !s.contains_edge(inc.edge));
        used[inc.neighbor] = false;
      }
    };
    for (VertexId start = 0; start < g.vertex_count() && ok; ++start) {
      if (!s.contains_vertex(start) || used[start]) continue;
      used[start] = true;
      walk(start, start, false);
      used[start] = false;
    }
    if (!ok) return false;
  }
  return true;
}

bool has_disjoint_cycles(const Graph& g) {
  const auto cycles = simple_cycles(g);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      bool disjoint = true;
      for (auto v : cycles[i].vertices) disjoint = disjoint && !cycles[j].contains(v);
      if (disjoint) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("peripheral collections from the worked examples") {
  SUBCASE("joined bouquets") {
    const auto g = joined_bouquets();
    const auto r = check_peripheral_collection(g, joined_bouquets_collection(g));
    CHECK(r.valid);
    CHECK(r.all_proper);
    CHECK(r.conclusion == "relatively hyperbolic");
  }
  SUBCASE("square with two apexes, triangle pairs") {
    const auto g = square_with_two_apexes();
    const auto gg = disjoint_cycle_pairs(g, 3);
    CHECK(gg.size() == 4);
    const auto r = check_peripheral_collection(g, gg);
    CHECK(r.valid);
    CHECK(r.all_proper);
  }
  SUBCASE("K6 triangle pairs") {
    const auto g = families::complete(6);
    const auto gg = disjoint_cycle_pairs(g, 3);
    CHECK(gg.size() == 10);
    CHECK(check_peripheral_collection(g, gg).valid);
  }
  SUBCASE("K44 square pairs") {
    const auto g = families::complete_bipartite(4, 4);
    const auto gg = disjoint_cycle_pairs(g, 4);
    CHECK(gg.size() == 18);
    const auto r = check_peripheral_collection(g, gg);
    CHECK(r.valid);
    CHECK(r.all_proper);
  }
}

TEST_CASE("peripheral collections that fail") {
  const auto k6 = families::complete(6);
  const auto empty = check_peripheral_collection(k6, {});
  CHECK_FALSE(empty.valid);
  CHECK(empty.failed_condition == 1);
  CHECK(empty.conclusion == "criterion inconclusive");

  const auto k7 = families::complete(7);
  const auto r7 = check_peripheral_collection(k7, disjoint_cycle_pairs(k7, 3));
  CHECK_FALSE(r7.valid);

  const auto k55 = families::complete_bipartite(5, 5);
  CHECK_FALSE(check_peripheral_collection(k55, disjoint_cycle_pairs(k55, 4)).valid);

  // Overlapping members meeting in a cycle break the second condition.
  const auto g = bowtie();
  const auto whole = Subgraph::whole(g);
  const auto r = check_peripheral_collection(g, {whole, whole});
  CHECK(r.failed_condition == 2);
  CHECK_FALSE(r.all_proper);

  // K_5 has no disjoint cycles, so an empty collection is vacuously valid.
  CHECK(check_peripheral_collection(families::complete(5), {}).valid);
}

TEST_CASE("third peripheral condition against path enumeration") {
  std::mt19937 rng(23);
  int compared = 0;
  for (int trial = 0; trial < 300 && compared < 80; ++trial) {
    const auto g = random_connected_graph(rng, 6, 0.3);
    if (has_disjoint_cycles(g)) continue;
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (rng() % 2) vs.push_back(v);
    if (vs.empty()) continue;
    const auto s = Subgraph::induced(g, vs);
    // Drop one edge sometimes so members need not be induced.
    std::vector<EdgeId> es = s.edges();
    if (!es.empty() && rng() % 2) es.erase(es.begin() + static_cast<long>(rng() % es.size()));
    const auto member = Subgraph::from_edges(g, es, vs);
    const auto r = check_peripheral_collection(g, {member});
    CHECK(r.valid == paths_stay_inside(g, member));
    ++compared;
  }
  CHECK(compared >= 40);
}

TEST_CASE("full reports") {
  SUBCASE("K5, two particles") {
    const auto r = full_report(families::complete(5), 2);
    REQUIRE(r.assignments.size() == 1);
    const auto& a = r.assignments[0];
    CHECK(a.hyperbolic);
    CHECK(a.toral_rel_hyp);
    CHECK(a.acyl_status == AcylStatus::AcylindricallyHyperbolic);
    CHECK_FALSE(a.free.free);
    REQUIRE(r.homology);
    CHECK_FALSE(r.homology->torsion_free());
    CHECK(r.hyperbolic_oracle.agrees == true);
    CHECK(r.toral_oracle.agrees == true);
    CHECK(r.inconsistencies.empty());
  }
  SUBCASE("C4, two particles") {
    const auto r = full_report(families::cycle(4), 2);
    const auto& a = r.assignments[0];
    CHECK(a.infinite_cyclic);
    CHECK(a.hyperbolic);
    CHECK(a.acyl_status == AcylStatus::InfiniteCyclic);
    CHECK(r.inconsistencies.empty());
  }
  SUBCASE("rose with two petals, six particles") {
    ReportOptions opts;
    opts.compute_homology = false;
    const auto r = full_report(families::rose(2, 0), 6, opts);
    const auto& a = r.assignments[0];
    CHECK(a.free.free);
    CHECK(a.hyperbolic);
    CHECK(a.toral_rel_hyp);
    CHECK(r.inconsistencies.empty());
  }
  SUBCASE("disconnected input enumerates assignments") {
    const auto r = full_report(two_triangles(), 2);
    REQUIRE(r.assignments.size() == 3);
    // One particle per triangle: Z^2.
    const auto& split = r.assignments[1];
    CHECK(split.assignment.counts == std::vector<int>{1, 1});
    CHECK_FALSE(split.hyperbolic);
    CHECK(split.toral_rel_hyp);
    CHECK(split.acyl_status == AcylStatus::NotAcylindricallyHyperbolic);
    CHECK(r.assignments[0].infinite_cyclic);
    CHECK(r.hyperbolic_oracle.note == "disconnected input");
    CHECK(r.inconsistencies.empty());
  }
  SUBCASE("cell cap is reported, not thrown") {
    Limits tight;
    tight.max_cells = 50;
    const auto r = full_report(families::complete(6), 3, {}, tight);
    CHECK_FALSE(r.homology);
    CHECK(r.homology_note.rfind("skipped", 0) == 0);
  }
  SUBCASE("fingerprint ignores edge order") {
    const auto a = from_pairs(3, {{0, 1}, {1, 2}});
    const auto b = from_pairs(3, {{2, 1}, {1, 0}});
    CHECK(fingerprint(a) == fingerprint(b));
    CHECK(fingerprint(a) != fingerprint(families::cycle(3)));
  }
}

TEST_CASE("implication chain across fixtures") {
  for (const auto& g : fixture_graphs()) {
    for (int n = 1; n <= 4; ++n) {
      ReportOptions opts;
      opts.compute_homology = n <= 2;
      const auto r = full_report(g, n, opts);
      CAPTURE(n);
      CHECK(r.inconsistencies.empty());
      for (const auto& a : r.assignments) {
        if (a.hyperbolic) CHECK(a.toral_rel_hyp);
        if (a.toral_rel_hyp) CHECK_FALSE(a.contains_F2xZ);
        if (a.infinite_cyclic) CHECK(a.hyperbolic);
      }
    }
  }
}
