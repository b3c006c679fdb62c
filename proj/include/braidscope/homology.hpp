#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidscope/config_space.hpp"

namespace braidscope {

/// Sparse integer column: (row, coefficient) pairs sorted by row.
using SparseColumn = std::vector<std::pair<int, std::int64_t>>;

struct SparseMatrix {
  int rows = 0;
  std::vector<SparseColumn> columns;
  int cols() const { return static_cast<int>(columns.size()); }
};

/// Cellular chain complex. boundary[d] maps d-chains to (d-1)-chains;
/// boundary[0] is the zero map out of C_0.
struct ChainComplex {
  std::vector<std::size_t> dimensions;
  std::vector<SparseMatrix> boundary;

  bool boundary_squared_vanishes() const;
};

/// Facet signs: with moving edges in increasing id order, facet i enters
/// with sign (-1)^i at the second endpoint and -(-1)^i at the first.
ChainComplex chain_complex(const CubeComplex& x);

/// Nonzero invariant factors (absolute values, each dividing the next).
struct SmithForm {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1
};

SmithForm smith_form(const SparseMatrix& m, const Limits& limits = Limits::from_env());

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologySummary {
  std::vector<HomologyGroup> groups;
  std::int64_t euler_characteristic() const;
  bool torsion_free() const;
};

HomologySummary homology(const ChainComplex& c, const Limits& limits = Limits::from_env());
std::string to_string(const HomologyGroup& h);

}  // namespace braidscope
