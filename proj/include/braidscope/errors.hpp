#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace braidscope {

/// Input text could not be parsed (graph files, word tokens, collections).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps shared by the enumerating operations. Defaults follow the CLI
/// contract; BRAIDSCOPE_MAX_CELLS overrides the cell cap.
struct Limits {
  std::uint64_t max_cells = 10'000'000;
  std::uint64_t max_cycles = 1'000'000;
  std::uint64_t max_matrix_columns = 20'000;
  std::uint64_t max_ball_nodes = 5'000'000;
  int max_oracle_vertices = 15;

  static Limits from_env();
};

}  // namespace braidscope
