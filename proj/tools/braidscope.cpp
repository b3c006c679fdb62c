#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "braidscope/classifier.hpp"
#include "braidscope/diagrams.hpp"
#include "braidscope/homology.hpp"
#include "braidscope/hyperplanes.hpp"
#include "braidscope/io.hpp"
#include "braidscope/report_json.hpp"

using namespace braidscope;
using nlohmann::json;

namespace {

struct Common {
  std::string graph_path;
  int particles = 2;
  std::string format = "table";
  std::uint64_t max_cells = 0;

  Limits limits() const {
    auto l = Limits::from_env();
    if (max_cells > 0) l.max_cells = max_cells;
    return l;
  }
};

void add_graph(CLI::App* cmd, Common& c) {
  cmd->add_option("--graph,-g", c.graph_path, "graph file")->required();
}
void add_particles(CLI::App* cmd, Common& c) {
  cmd->add_option("-n,--particles", c.particles, "number of particles")->check(CLI::PositiveNumber);
}
void add_format(CLI::App* cmd, Common& c, std::vector<std::string> allowed) {
  cmd->add_option("--format,-f", c.format, "output format")->check(CLI::IsMember(allowed));
}
void add_caps(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-cells", c.max_cells, "cap on enumerated cells (overrides BRAIDSCOPE_MAX_CELLS)")
      ->check(CLI::PositiveNumber);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "    witness " << w.kind;
  for (const auto& p : w.parts) out << " [" << join(p, " ") << "]";
  if (!w.detail.empty()) out << " (" << w.detail << ")";
  out << '\n';
}

// ------------------------------------------------------------------ analyze

int run_analyze(const Common& c, bool oracles, bool with_homology) {
  const auto g = read_graph_file(c.graph_path);
  ReportOptions opts;
  opts.run_oracles = oracles;
  opts.compute_homology = with_homology;
  const auto r = full_report(g, c.particles, opts, c.limits());
  if (c.format == "json") {
    std::cout << envelope("analyze", to_json(r)).dump(2) << '\n';
    return 0;
  }
  std::cout << "graph " << r.fingerprint << "  particles " << r.particles << '\n';
  if (r.connected) std::cout << "shape " << to_string(r.shape.kind) << '\n';
  for (const auto& a : r.assignments) {
    std::vector<std::string> counts;
    for (int k : a.assignment.counts) counts.push_back(std::to_string(k));
    std::cout << "assignment [" << join(counts, ",") << "]\n"
              << "  trivial          " << yes_no(a.trivial) << '\n'
              << "  infinite cyclic  " << yes_no(a.infinite_cyclic) << '\n'
              << "  hyperbolic       " << yes_no(a.hyperbolic) << '\n'
              << "  toral rel. hyp.  " << yes_no(a.toral_rel_hyp) << '\n'
              << "  contains F2      " << yes_no(a.contains_F2) << '\n'
              << "  contains F2 x Z  " << yes_no(a.contains_F2xZ) << '\n'
              << "  acylindrical     " << to_string(a.acyl_status) << '\n'
              << "  free             " << (a.free.free ? "free" : "unknown") << " (" << a.free.reason << ")\n";
    for (const auto& w : a.witnesses) print_witness(std::cout, w);
  }
  auto oracle_line = [](const OracleCheck& o) {
    return o.agrees ? (*o.agrees ? std::string("agrees") : std::string("DISAGREES")) : o.note;
  };
  std::cout << "oracle hyperbolic  " << oracle_line(r.hyperbolic_oracle) << '\n'
            << "oracle F2 x Z      " << oracle_line(r.toral_oracle) << '\n';
  if (r.homology) {
    for (std::size_t d = 0; d < r.homology->groups.size(); ++d)
      std::cout << "H" << d << " = " << to_string(r.homology->groups[d]) << '\n';
  } else if (!r.homology_note.empty()) {
    std::cout << "homology " << r.homology_note << '\n';
  }
  for (const auto& i : r.inconsistencies) std::cerr << "inconsistency: " << i << '\n';
  return 0;
}

// -------------------------------------------------------------------- build

int run_build(const Common& c, std::optional<int> max_dim, const std::string& dot) {
  const auto g = read_graph_file(c.graph_path);
  const auto x = CubeComplex::build(g, c.particles, max_dim, c.limits());
  if (c.format == "dot") {
    std::cout << (dot == "coloring" ? coloring_dot(g) : skeleton_dot(x));
    return 0;
  }
  const auto hyperplanes = hyperplanes_by_bfs(x);
  const auto summary = build_summary(x, hyperplanes);
  if (c.format == "json") {
    std::cout << envelope("build", summary).dump(2) << '\n';
    return 0;
  }
  std::vector<std::string> f;
  for (auto k : x.f_vector()) f.push_back(std::to_string(k));
  std::cout << "f-vector     (" << join(f, ", ") << ")\n"
            << "components   " << x.component_count() << '\n'
            << "hyperplanes  " << hyperplanes.size() << '\n';
  if (x.is_full()) std::cout << "euler char.  " << euler_characteristic(x) << '\n';
  return 0;
}

// --------------------------------------------------------------------- word

json word_json(const Graph& g, const Configuration& base, const std::string& text) {
  json out = {{"input", text}};
  Word w;
  try {
    w = parse_word(g, text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("word '") + text + "': " + e.what());
  }
  try {
    const auto legal = check_legal(g, base, w);
    const auto d = reduce(g, legal);
    out["legal"] = true;
    out["terminus"] = format_configuration(g, d.terminus);
    out["normal_form"] = format_word(g, d.normal_form);
    out["length"] = d.length();
    out["spherical"] = d.spherical();
    if (d.spherical() && !d.empty()) {
      const auto s = cyclically_reduce(g, d);
      std::vector<std::string> support;
      for (auto e : s.support_edges) support.push_back(g.edge_name(e));
      out["cyclic_reduction"] = format_word(g, s.cyclic_reduction.normal_form);
      out["support_edges"] = support;
      out["moving_particles"] = s.particles.size();
      out["support_connected"] = s.support_connected;
      out["cyclic_centralizer_witness"] = cyclic_centralizer_witness(g, d);
    }
  } catch (const IllegalMove& e) {
    out["legal"] = false;
    out["reason"] = e.what();
  }
  return out;
}

void print_word(const json& w) {
  std::cout << w["input"].get<std::string>() << '\n';
  if (!w["legal"].get<bool>()) {
    std::cout << "  illegal: " << w["reason"].get<std::string>() << '\n';
    return;
  }
  std::cout << "  legal, terminus " << w["terminus"].get<std::string>() << '\n'
            << "  normal form " << (w["normal_form"].get<std::string>().empty() ? "(empty)" : w["normal_form"].get<std::string>())
            << "  length " << w["length"].get<int>() << (w["spherical"].get<bool>() ? "  spherical" : "") << '\n';
  if (w.contains("cyclic_reduction"))
    std::cout << "  cyclic reduction " << w["cyclic_reduction"].get<std::string>() << "  moving particles "
              << w["moving_particles"].get<int>() << "  centralizer witness "
              << yes_no(w["cyclic_centralizer_witness"].get<bool>()) << '\n';
}

int run_word(const Common& c, const std::string& base_text, const std::vector<std::string>& tokens,
             const std::string& against, const std::string& file) {
  const auto g = read_graph_file(c.graph_path);
  const auto base = parse_configuration(g, base_text);
  std::vector<std::string> words;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] != '#')
        words.push_back(line);
  }
  if (!tokens.empty()) words.push_back(join(tokens, " "));
  if (words.empty()) words.push_back("");
  json results = json::array();
  for (const auto& w : words) results.push_back(word_json(g, base, w));
  json out = {{"base", format_configuration(g, base)}, {"words", results}};
  if (!against.empty()) {
    const auto other = word_json(g, base, against);
    const bool both = results.back()["legal"].get<bool>() && other["legal"].get<bool>();
    out["against"] = other;
    out["equal"] = both && results.back()["normal_form"] == other["normal_form"] &&
                   results.back()["terminus"] == other["terminus"];
  }
  if (c.format == "json") {
    std::cout << envelope("word", out).dump(2) << '\n';
  } else {
    for (const auto& w : results) print_word(w);
    if (out.contains("against")) {
      print_word(out["against"]);
      std::cout << "equal " << yes_no(out["equal"].get<bool>()) << '\n';
    }
  }
  return 0;
}

// ----------------------------------------------------------------- homology

int run_homology(const Common& c) {
  const auto g = read_graph_file(c.graph_path);
  const auto limits = c.limits();
  const auto x = CubeComplex::build(g, c.particles, std::nullopt, limits);
  const auto h = homology(chain_complex(x), limits);
  if (c.format == "json") {
    json body = to_json(h);
    body["particles"] = c.particles;
    std::cout << envelope("homology", body).dump(2) << '\n';
    return 0;
  }
  for (std::size_t d = 0; d < h.groups.size(); ++d) std::cout << "H" << d << " = " << to_string(h.groups[d]) << '\n';
  std::cout << "euler char. " << h.euler_characteristic() << '\n';
  return 0;
}

// ------------------------------------------------------------- relhyp-check

int run_relhyp(const Common& c, const std::string& collection_path) {
  const auto g = read_graph_file(c.graph_path);
  std::ifstream in(collection_path);
  if (!in) throw ParseError("cannot open " + collection_path);
  const auto collection = parse_collection(g, in, collection_path);
  const auto r = check_peripheral_collection(g, collection, c.limits());
  if (c.format == "json") {
    json body = to_json(r);
    body["members"] = collection.size();
    std::cout << envelope("relhyp-check", body).dump(2) << '\n';
    return 0;
  }
  std::cout << "members     " << collection.size() << '\n'
            << "valid       " << yes_no(r.valid) << '\n'
            << "all proper  " << yes_no(r.all_proper) << '\n';
  if (!r.valid) std::cout << "fails condition " << r.failed_condition << ": " << r.detail << '\n';
  std::cout << "conclusion  " << r.conclusion << '\n';
  return 0;
}

// -------------------------------------------------------------------- table

std::pair<int, int> parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 1) throw ParseError("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = number(text);
    return {v, v};
  }
  const int lo = number(std::string_view(text).substr(0, dots));
  const int hi = number(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw ParseError("empty range '" + text + "'");
  return {lo, hi};
}

int run_table(const std::string& family, int max, const std::string& range, const std::string& format) {
  const auto [lo, hi] = parse_range(range);
  struct Row {
    std::string label;
    Graph g;
  };
  std::vector<Row> rows;
  if (family == "complete") {
    for (int m = 2; m <= max; ++m) rows.push_back({"K" + std::to_string(m), families::complete(m)});
  } else {
    for (int p = 1; p <= max; ++p)
      for (int q = p; q <= max; ++q)
        rows.push_back({"K" + std::to_string(p) + "," + std::to_string(q), families::complete_bipartite(p, q)});
  }
  json cells = json::array();
  std::ostringstream text;
  text << "graph     ";
  for (int n = lo; n <= hi; ++n) text << " n=" << n << "  ";
  text << "\n";
  for (const auto& row : rows) {
    text << row.label << std::string(10 - std::min<std::size_t>(9, row.label.size()), ' ');
    for (int n = lo; n <= hi; ++n) {
      const bool hyp = is_hyperbolic(row.g, n).holds;
      const bool toral = is_toral_rel_hyp(row.g, n).holds;
      cells.push_back({{"graph", row.label}, {"particles", n}, {"hyperbolic", hyp}, {"toral_rel_hyp", toral}});
      text << ' ' << (hyp ? 'H' : '.') << (toral ? 'T' : '.') << "   ";
    }
    text << '\n';
  }
  if (format == "json") {
    std::cout << envelope("table", {{"family", family}, {"max", max}, {"cells", cells}}).dump(2) << '\n';
  } else {
    std::cout << text.str() << "H hyperbolic, T toral relatively hyperbolic\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidscope: graph braid groups through their cube complexes"};
  app.require_subcommand(1);
  Common c;

  bool no_oracles = false, no_homology = false;
  auto* analyze = app.add_subcommand("analyze", "classification report");
  add_graph(analyze, c);
  add_particles(analyze, c);
  add_format(analyze, c, {"table", "json"});
  add_caps(analyze, c);
  analyze->add_flag("--no-oracles", no_oracles, "skip the brute-force cross-checks");
  analyze->add_flag("--no-homology", no_homology, "skip the homology computation");

  std::optional<int> max_dim;
  std::string dot = "skeleton";
  auto* build = app.add_subcommand("build", "configuration space summary");
  add_graph(build, c);
  add_particles(build, c);
  add_format(build, c, {"table", "json", "dot"});
  add_caps(build, c);
  build->add_option("--max-dim", max_dim, "build only cubes up to this dimension")->check(CLI::NonNegativeNumber);
  build->add_option("--dot", dot, "which graph to draw with --format dot")->check(CLI::IsMember({"skeleton", "coloring"}));

  std::string base_text, against, word_file;
  std::vector<std::string> tokens;
  auto* word = app.add_subcommand("word", "legality, normal form and comparison of words");
  add_graph(word, c);
  add_format(word, c, {"table", "json"});
  word->add_option("--base,-b", base_text, "base configuration, comma separated")->required();
  word->add_option("--against", against, "second word to compare with");
  word->add_option("--file", word_file, "file with one word per line");
  word->add_option("letters", tokens, "letters such as +e1 -e2");

  auto* hom = app.add_subcommand("homology", "integral homology of the configuration space");
  add_graph(hom, c);
  add_particles(hom, c);
  add_format(hom, c, {"table", "json"});
  add_caps(hom, c);

  std::string collection_path;
  auto* relhyp = app.add_subcommand("relhyp-check", "check a peripheral collection for two particles");
  add_graph(relhyp, c);
  add_format(relhyp, c, {"table", "json"});
  relhyp->add_option("--collection", collection_path, "one member per line")->required();

  std::string family = "complete", range = "1..5";
  int max = 5;
  auto* table = app.add_subcommand("table", "classification grid over a built-in family");
  table->add_option("--family", family)->check(CLI::IsMember({"complete", "bipartite"}));
  table->add_option("--max", max)->check(CLI::Range(2, 12));
  table->add_option("--particles", range, "range such as 2..5");
  add_format(table, c, {"table", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (*analyze) return run_analyze(c, !no_oracles, !no_homology);
    if (*build) return run_build(c, max_dim, dot);
    if (*word) return run_word(c, base_text, tokens, against, word_file);
    if (*hom) return run_homology(c);
    if (*relhyp) return run_relhyp(c, collection_path);
    if (*table) return run_table(family, max, range, c.format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
