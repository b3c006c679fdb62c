#pragma once

#include <istream>
#include <string>

#include "braidscope/classifier.hpp"
#include "braidscope/config_space.hpp"

namespace braidscope {

/// Text format: `v <id>` declares a vertex, `e <id> <u> <v>` an edge (its
/// endpoints are declared on first use), `#` starts a comment. Ids are
/// alphanumeric tokens, `_` allowed.
Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

/// One member per line. Plain tokens are vertex ids; a line of vertex ids
/// gives the induced subgraph. Tokens `u-v` name edges; a line with any of
/// them gives exactly those edges plus the listed vertices.
PeripheralCollection parse_collection(const Graph& g, std::istream& in, const std::string& source = "<input>");

/// Comma-separated vertex ids.
Configuration parse_configuration(const Graph& g, const std::string& text);
std::string format_configuration(const Graph& g, const Configuration& s);

/// Graphviz output. Complex edges are labelled by the Γ-edge they move along.
std::string skeleton_dot(const CubeComplex& x);
std::string coloring_dot(const Graph& g);

}  // namespace braidscope
