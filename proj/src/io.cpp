#include "braidscope/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "braidscope/hyperplanes.hpp"

namespace braidscope {

namespace {

bool valid_id(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::string strip_comment(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

VertexId lookup(const Graph& g, const std::string& id, const std::string& source, int line) {
  if (auto v = g.find_vertex(id)) return *v;
  fail(source, line, "unknown vertex '" + id + "'");
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source) {
  Graph g;
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    const auto t = tokens_of(strip_comment(line));
    if (t.empty()) continue;
    auto vertex = [&](const std::string& id) {
      if (!valid_id(id)) fail(source, number, "bad vertex id '" + id + "'");
      if (auto v = g.find_vertex(id)) return *v;
      return g.add_vertex(id);
    };
    if (t[0] == "v") {
      if (t.size() != 2) fail(source, number, "expected `v <id>`");
      if (g.find_vertex(t[1])) fail(source, number, "duplicate vertex '" + t[1] + "'");
      vertex(t[1]);
    } else if (t[0] == "e") {
      if (t.size() != 4) fail(source, number, "expected `e <id> <u> <v>`");
      if (!valid_id(t[1])) fail(source, number, "bad edge id '" + t[1] + "'");
      if (g.find_edge(t[1])) fail(source, number, "duplicate edge '" + t[1] + "'");
      const auto a = vertex(t[2]);
      const auto b = vertex(t[3]);
      g.add_edge(a, b, t[1]);
    } else {
      fail(source, number, "unknown directive '" + t[0] + "'");
    }
  }
  if (g.vertex_count() == 0) throw ParseError(source + ": graph has no vertices");
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_graph(in, path);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "v " << g.vertex_name(v) << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "e " << g.edge_name(e) << ' ' << g.vertex_name(g.edge(e).a) << ' ' << g.vertex_name(g.edge(e).b) << '\n';
  return out.str();
}

PeripheralCollection parse_collection(const Graph& g, std::istream& in, const std::string& source) {
  PeripheralCollection out;
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    const auto t = tokens_of(strip_comment(line));
    if (t.empty()) continue;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    bool has_edges = false;
    for (const auto& token : t) {
      const auto dash = token.find('-');
      if (dash == std::string::npos) {
        vertices.push_back(lookup(g, token, source, number));
        continue;
      }
      has_edges = true;
      const auto a = lookup(g, token.substr(0, dash), source, number);
      const auto b = lookup(g, token.substr(dash + 1), source, number);
      const auto e = g.edge_between(a, b);
      if (!e) fail(source, number, "no edge " + token);
      edges.push_back(*e);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    out.push_back(has_edges ? Subgraph::from_edges(g, edges, vertices) : Subgraph::induced(g, vertices));
  }
  return out;
}

Configuration parse_configuration(const Graph& g, const std::string& text) {
  Configuration s;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    const auto t = tokens_of(item);
    if (t.size() != 1) throw ParseError("bad configuration '" + text + "'");
    const auto v = g.find_vertex(t[0]);
    if (!v) throw ParseError("unknown vertex '" + t[0] + "' in configuration");
    s.push_back(*v);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError("configuration repeats a vertex");
  if (s.empty()) throw ParseError("empty configuration");
  return s;
}

std::string format_configuration(const Graph& g, const Configuration& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.vertex_name(s[i]);
  return out + "}";
}

std::string skeleton_dot(const CubeComplex& x) {
  const auto& g = x.graph();
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (std::size_t v = 0; v < x.count(0); ++v)
    out << "  c" << v << " [label=\"" << format_configuration(g, x.configuration(static_cast<int>(v))) << "\"];\n";
  if (x.top_dimension() >= 1) {
    for (std::size_t e = 0; e < x.count(1); ++e) {
      const auto [a, b] = x.endpoints(static_cast<int>(e));
      out << "  c" << a << " -- c" << b << " [label=\"" << g.edge_name(x.cubes(1)[e].moving[0]) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string coloring_dot(const Graph& g) {
  const auto delta = coloring_graph(g);
  std::ostringstream out;
  out << "graph coloring {\n";
  for (VertexId v = 0; v < delta.vertex_count(); ++v) out << "  \"" << delta.vertex_name(v) << "\";\n";
  for (EdgeId e = 0; e < delta.edge_count(); ++e)
    out << "  \"" << delta.vertex_name(delta.edge(e).a) << "\" -- \"" << delta.vertex_name(delta.edge(e).b) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace braidscope
