#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidscope/graph.hpp"
#include "braidscope/homology.hpp"

namespace braidscope {

/// Particle count per connected component, components in component_labels order.
struct ParticleAssignment {
  std::vector<int> counts;
  int total() const;
  friend bool operator==(const ParticleAssignment&, const ParticleAssignment&) = default;
};

/// Every way to place n particles on the components. A component without
/// edges holds at most one particle; the others can be subdivided freely.
std::vector<ParticleAssignment> particle_assignments(const Graph& g, int n);

/// Named evidence. `parts` lists vertex names of the input graph: cycles in
/// cyclic order, subgraphs and components sorted.
struct Witness {
  std::string kind;
  std::vector<std::vector<std::string>> parts;
  std::string detail;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = false;
  std::vector<Witness> witnesses;
  explicit operator bool() const { return holds; }
};

Verdict is_trivial(const Graph& g, const ParticleAssignment& assignment);
Verdict is_infinite_cyclic(const Graph& g, int n);
/// Shape form: disjoint cycles for n = 2, shape list for n >= 3.
Verdict is_hyperbolic(const Graph& g, int n);
/// Obstruction form: disjoint cycles, essential vertex off a cycle, two essential vertices.
Verdict hyperbolic_by_obstructions(const Graph& g, int n);
Verdict is_toral_rel_hyp(const Graph& g, int n);
Verdict contains_free_nonabelian(const Graph& g, const ParticleAssignment& assignment);

enum class AcylStatus { Trivial, InfiniteCyclic, AcylindricallyHyperbolic, NotAcylindricallyHyperbolic };
std::string to_string(AcylStatus s);
/// The last value only arises for products of two nontrivial factors.
AcylStatus acyl_hyp_status(const Graph& g, int n);

struct FreeCertificate {
  bool free = false;
  std::string reason;
};
FreeCertificate free_certificate(const Graph& g, int n);

/// Brute-force search over pairs of disjoint connected subgraphs of the
/// smoothed graph. `holds` means the pair was found.
Verdict oracle_nonhyperbolic(const Graph& g, int n, const Limits& limits = Limits::from_env());
Verdict oracle_F2xZ(const Graph& g, int n, const Limits& limits = Limits::from_env());

using PeripheralCollection = std::vector<Subgraph>;

struct PeripheralReport {
  bool valid = false;
  bool all_proper = false;
  /// 1, 2 or 3 for the first failing condition; 0 when valid.
  int failed_condition = 0;
  std::string detail;
  /// Printed when invalid: the criterion is sufficient only.
  std::string conclusion;
};

/// Two-particle relative hyperbolicity criterion, checked on g as given.
PeripheralReport check_peripheral_collection(const Graph& g, const PeripheralCollection& collection,
                                             const Limits& limits = Limits::from_env());

struct AssignmentVerdicts {
  ParticleAssignment assignment;
  bool trivial = false;
  bool infinite_cyclic = false;
  bool hyperbolic = false;
  bool toral_rel_hyp = false;
  bool contains_F2 = false;
  bool contains_F2xZ = false;
  AcylStatus acyl_status = AcylStatus::Trivial;
  FreeCertificate free;
  std::vector<Witness> witnesses;
};

/// Oracle cross-check outcome: agreement flag, or the reason it was skipped.
struct OracleCheck {
  std::optional<bool> agrees;
  std::string note;
};

struct ReportOptions {
  bool run_oracles = true;
  bool compute_homology = true;
};

struct ClassificationReport {
  std::string fingerprint;
  int particles = 0;
  bool connected = true;
  Shape shape;  // of the input when connected
  std::vector<AssignmentVerdicts> assignments;
  OracleCheck hyperbolic_oracle;
  OracleCheck toral_oracle;
  std::optional<HomologySummary> homology;
  std::string homology_note;
  /// Violated consistency rules; empty in a sound run.
  std::vector<std::string> inconsistencies;
};

std::string fingerprint(const Graph& g);
ClassificationReport full_report(const Graph& g, int n, const ReportOptions& options = {},
                                 const Limits& limits = Limits::from_env());

}  // namespace braidscope
