#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidscope/config_space.hpp"
#include "braidscope/errors.hpp"
#include "braidscope/graph.hpp"

namespace braidscope {

/// Oriented edge of Γ. Forward moves from endpoint a to endpoint b.
struct Letter {
  EdgeId edge = -1;
  bool inverse = false;

  Letter inverted() const { return {edge, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

VertexId origin(const Graph& g, Letter x);
VertexId target(const Graph& g, Letter x);
/// Adjacent colors: distinct edges sharing no endpoint.
bool commute(const Graph& g, Letter x, Letter y);
Word inverse(const Word& w);

/// Token form "+e<name>" / "-e<name>".
std::string format_letter(const Graph& g, Letter x);
std::string format_word(const Graph& g, const Word& w);
/// Accepts "+e<name>", "-e<name>", or a bare sign plus name when no edge
/// matches after dropping the "e". Throws ParseError.
Letter parse_letter(const Graph& g, std::string_view token);
Word parse_word(const Graph& g, std::string_view text);

class IllegalMove : public PreconditionError {
 public:
  IllegalMove(std::size_t index, std::string reason)
      : PreconditionError("illegal move at index " + std::to_string(index) + ": " + reason),
        index_(index),
        reason_(std::move(reason)) {}
  std::size_t index() const { return index_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t index_;
  std::string reason_;
};

struct LegalWord {
  Configuration base;
  Word letters;
  Configuration terminus;
};

/// Replays `letters` from `base`; throws IllegalMove at the first collision.
LegalWord check_legal(const Graph& g, Configuration base, Word letters);
/// Configuration after one move, or nullopt when the move is illegal.
std::optional<Configuration> apply(const Graph& g, const Configuration& s, Letter x);

/// Equivalence class of legal words: reduced, lexicographically least word.
struct Diagram {
  Configuration base;
  Word normal_form;
  Configuration terminus;

  std::size_t length() const { return normal_form.size(); }
  bool spherical() const { return base == terminus; }
  bool empty() const { return normal_form.empty(); }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram identity(Configuration base);
Diagram reduce(const Graph& g, const LegalWord& w);
Diagram reduce(const Graph& g, const Configuration& base, const Word& letters);
/// Throws PreconditionError when terminus(d1) != base(d2).
Diagram concat(const Graph& g, const Diagram& d1, const Diagram& d2);
Diagram inverse(const Graph& g, const Diagram& d);
/// False for different bases.
bool equal(const Diagram& d1, const Diagram& d2);

/// Free-cancellation and commutation applied to a bare word, without a base.
Word reduce_word(const Graph& g, const Word& w);
Word normal_form(const Graph& g, const Word& w);

struct SupportData {
  Diagram cyclic_reduction;
  /// d = conjugator . cyclic_reduction . conjugator^-1
  Word conjugator;
  std::vector<EdgeId> support_edges;
  std::vector<VertexId> support_vertices;
  Configuration particles;
  bool support_connected = true;
};

SupportData cyclically_reduce(const Graph& g, const Diagram& d);
/// Sufficient certificate for an infinite cyclic centralizer.
bool cyclic_centralizer_witness(const Graph& g, const Diagram& d);

/// Advances every particle one slot along `cycle` per round until the
/// configuration returns to `base`. All particles must sit on the cycle.
Diagram make_rotation(const Graph& g, const Cycle& cycle, const Configuration& base);

/// Line l(n-1) .. l1 c r1 .. r(n-1) with a top vertex p attached to c.
Graph tripod_graph(int particles);
/// Four-phase swap on a graph containing the named tripod of tripod_graph.
/// Base is {l(n-1), ..., l1, c}.
Diagram make_tripod_swap(const Graph& g, int particles);
Configuration tripod_base(const Graph& g, int particles);

/// Ball of the given radius around `base` in the universal cover of the
/// component of the complex, built layer by layer from the squares alone.
class CoverBall {
 public:
  CoverBall(const CubeComplex& x, Configuration base, int radius, const Limits& limits = Limits::from_env());

  std::size_t size() const { return nodes_.size(); }
  int radius() const { return radius_; }
  int depth(int node) const { return nodes_[node].depth; }
  const Configuration& configuration(int node) const { return x_->configuration(nodes_[node].vertex); }
  /// Node reached by replaying `w` from the root; nullopt if it leaves the ball
  /// or is illegal.
  std::optional<int> walk(const Word& w) const;
  /// A geodesic word from the root.
  Word geodesic(int node) const;
  /// One diagram per node.
  std::vector<Diagram> diagrams() const;
  std::size_t spherical_count() const;

 private:
  struct Node {
    int vertex;
    int depth;
    std::vector<std::pair<int, int>> parents;  // (node, oriented edge from parent)
    std::vector<std::pair<int, int>> moves;    // (oriented edge, node), both directions
  };
  Letter letter_of(int oriented) const;
  std::optional<int> oriented_edge(int vertex, Letter x) const;
  int head(int oriented) const;

  const CubeComplex* x_;
  int radius_;
  std::vector<Node> nodes_;
};

}  // namespace braidscope
