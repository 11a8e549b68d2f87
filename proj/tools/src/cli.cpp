#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dd2/error.hpp"
#include "dd2/generators.hpp"
#include "dd2/graph_io.hpp"
#include "dd2/graph_ops.hpp"
#include "dd2/minimal.hpp"
#include "dd2/optimize.hpp"
#include "dd2/recognition.hpp"
#include "dd2/reductions.hpp"

namespace dd2::cli {

namespace {

struct Options {
  std::string input;
  std::string second_input;
  std::string kind;
  std::string output;
  std::string graph_out;
  std::string set;
  std::string objective = "min";
  std::string base;
  std::vector<std::size_t> params;
  std::size_t k_max = 3;
  std::size_t t = 1;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool force = false;
  bool quiet = false;
};

struct Outcome {
  int code = 0;
  std::string document;
  bool certificate = true;  // --quiet keeps only the first line
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path);
}

template <class T>
T parse_input(const std::string& path, T (*parser)(std::string_view)) {
  try {
    return parser(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) { return parse_input(path, &parse_graph); }

SearchLimits limits_for(const Options& o) {
  SearchLimits limits = o.force ? SearchLimits::unlimited() : SearchLimits{};
  limits.threads = std::max(1u, o.threads);
  return limits;
}

VertexSet parse_vertex_list(const std::string& text, std::size_t order) {
  VertexSet out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::string word;
    while (words >> word) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(word, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != word.size() || word[0] == '-') throw InvalidArgument("--set: bad vertex id \"" + word + "\"");
      if (value >= order) throw InvalidArgument("--set: vertex " + word + " out of range");
      out.push_back(static_cast<Vertex>(value));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string id_line(const std::string& key, const std::vector<std::size_t>& ids) {
  std::string out = key;
  for (std::size_t id : ids) out += ' ' + std::to_string(id);
  return out + '\n';
}

// ------------------------------------------------------------- commands

Outcome recognize(const Options& o) {
  const auto verdict = is_dd2(load_graph(o.input));
  return {verdict.is_dd2 ? 0 : 1, to_text(verdict)};
}

Outcome pair(const Options& o) {
  const Graph g = load_graph(o.input);
  const auto verdict = is_dd2(g);
  if (!verdict.is_dd2) return {1, to_text(verdict)};
  return {0, to_text(*verdict.pair)};
}

Outcome certified(const Options& o) {
  const Graph g = load_graph(o.input);
  const auto report = certified_dom_report(g, parse_vertex_list(o.set, g.order()));
  return {report.is_dominating && report.is_certified ? 0 : 1, to_text(report)};
}

Outcome minimal(const Options& o) {
  const auto verdict = is_minimal_dd2(load_graph(o.input));
  return {verdict.is_minimal ? 0 : 1, to_text(verdict)};
}

Outcome decompose(const Options& o) {
  const auto d = corona_decompose(load_graph(o.input));
  if (!d) return {1, "decomposition none\n"};
  if (!o.graph_out.empty()) write_file(o.graph_out, to_text(d->h));
  return {0, to_text(*d)};
}

Outcome gamma2(const Options& o) {
  const auto result = gamma_gamma2(load_graph(o.input), limits_for(o));
  if (!result) return {1, "value none\n"};
  return {0, to_text(*result)};
}

Outcome subdivide_min(const Options& o) { return {0, to_text(min_subdivisions_to_dd2(load_graph(o.input), limits_for(o)))}; }

Outcome add_min(const Options& o) {
  const auto result = min_edges_to_dd2(load_graph(o.input), o.k_max, limits_for(o));
  if (!result) return {1, "k none\n"};
  return {0, to_text(*result)};
}

Outcome span_search(const Options& o) {
  const Objective objective = o.objective == "max" ? Objective::max : Objective::min;
  const auto result = spanning_minimal_search(load_graph(o.input), objective, limits_for(o));
  if (!result) return {1, "size none\n"};
  return {0, to_text(*result)};
}

void require_params(const Options& o, std::size_t count, const std::string& usage) {
  if (o.params.size() != count) throw InvalidArgument("generate " + o.kind + " expects " + usage);
}

Outcome generate(const Options& o) {
  Outcome result{0, {}, false};
  if (o.kind == "corona") {
    if (o.base.empty()) throw InvalidArgument("generate corona needs --base FILE");
    result.document = to_text(gen::corona(load_graph(o.base), o.t));
  } else if (o.kind == "random-corona" || o.kind == "subdivided-corona") {
    require_params(o, 3, "NODES EXTRA MAX_MULT");
    const auto h = gen::random_corona_multigraph(o.params[0], o.params[1], o.params[2], o.seed);
    result.document = o.kind == "random-corona" ? to_text(h) : to_text(subdivision_graph(h).graph);
  } else if (o.kind == "random-connected") {
    require_params(o, 2, "N EXTRA");
    result.document = to_text(gen::random_connected_graph(o.params[0], o.params[1], o.seed));
  } else {
    result.document = to_text(gen::make(o.kind, o.params));
  }
  return result;
}

Outcome reduce_3dm3(const Options& o) {
  const auto r = build_3dm3_supergraph(parse_input(o.input, &parse_3dm3));
  if (!o.graph_out.empty()) write_file(o.graph_out, to_text(r.graph));
  return {0, to_text(r), false};
}

Outcome reduce_setcover(const Options& o) {
  const auto r = build_setcover_reduction(parse_input(o.input, &parse_setcover));
  if (!o.graph_out.empty()) write_file(o.graph_out, to_text(r.graph));
  return {0, to_text(r), false};
}

Outcome extract(const Options& o) {
  const Graph witness = load_graph(o.second_input);
  std::optional<std::vector<std::size_t>> solution;
  if (o.kind == "3dm3") {
    solution = extract_3dm3_solution(build_3dm3_supergraph(parse_input(o.input, &parse_3dm3)), witness.edges());
  } else if (o.kind == "setcover") {
    solution = extract_setcover_solution(build_setcover_reduction(parse_input(o.input, &parse_setcover)),
                                         witness.edges());
  } else {
    throw InvalidArgument("extract: unknown problem \"" + o.kind + "\" (expected 3dm3 or setcover)");
  }
  if (!solution) return {1, "solution none\n"};
  return {0, id_line("solution", *solution)};
}

Outcome oracle(const Options& o) {
  const SearchLimits limits = limits_for(o);
  if (o.kind == "dd2") {
    const auto pair = is_dd2_bruteforce(load_graph(o.input), limits);
    if (!pair) return {1, "is_dd2 false\n"};
    return {0, "is_dd2 true\n" + to_text(*pair)};
  }
  if (o.kind == "minimal") {
    const bool minimal = is_minimal_dd2_bruteforce(load_graph(o.input), limits);
    return {minimal ? 0 : 1, std::string("is_minimal ") + (minimal ? "true" : "false") + '\n'};
  }
  if (o.kind == "setcover" || o.kind == "3dm3") {
    const auto solution = o.kind == "setcover"
                              ? solve_setcover_bruteforce(parse_input(o.input, &parse_setcover), limits)
                              : solve_3dm3_bruteforce(parse_input(o.input, &parse_3dm3), limits);
    if (!solution) return {1, "solution none\n"};
    return {0, id_line("solution", *solution)};
  }
  throw InvalidArgument("oracle: unknown oracle \"" + o.kind + "\" (expected dd2, minimal, setcover or 3dm3)");
}

std::string first_line(const std::string& text) {
  const auto end = text.find('\n');
  return end == std::string::npos ? text : text.substr(0, end + 1);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Disjoint dominating and 2-dominating sets toolkit", "dd2"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("-o,--output", o.output, "Write the result document to FILE");
  app.add_flag("--force", o.force, "Lift the size guards of exhaustive searches");
  app.add_option("--threads", o.threads, "Worker threads for exhaustive searches")->check(CLI::Range(1u, 256u));
  app.add_flag("--quiet", o.quiet, "Print only the first line of the result");

  std::map<CLI::App*, std::function<Outcome(const Options&)>> handlers;
  auto graph_command = [&](const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.input, "Edge-list file")->required();
    handlers[sub] = fn;
    return sub;
  };

  graph_command("recognize", "Decide whether the graph is a DD2-graph", &recognize);
  graph_command("pair", "Construct a DD2-pair", &pair);
  graph_command("certified", "Check a certified dominating set", &certified)
      ->add_option("--set", o.set, "Vertex ids, separated by spaces or commas")
      ->required();
  graph_command("minimal", "Decide whether the graph is a minimal DD2-graph", &minimal);
  graph_command("decompose", "Recover H from a subdivided corona S(H)", &decompose)
      ->add_option("--graph-out", o.graph_out, "Also write H as a multigraph file");
  graph_command("gamma2", "Exact minimum |D| + |D2|", &gamma2);
  graph_command("subdivide-min", "Fewest edge subdivisions giving a DD2-graph", &subdivide_min);
  graph_command("add-min", "Fewest edge additions giving a DD2-graph", &add_min)
      ->add_option("--k-max", o.k_max, "Largest number of edges to try");
  graph_command("span-search", "Extremal spanning minimal DD2 subgraph", &span_search)
      ->add_option("--objective", o.objective, "min or max")
      ->check(CLI::IsMember({"min", "max"}));

  auto* generate_cmd = app.add_subcommand("generate", "Write a graph from a family");
  generate_cmd->add_option("family", o.kind,
                           "path, cycle, star, complete, complete-bipartite, gnk, corona, random-corona, "
                           "subdivided-corona, random-connected")
      ->required();
  generate_cmd->add_option("params", o.params, "Family parameters");
  generate_cmd->add_option("--base", o.base, "Base graph file for corona");
  generate_cmd->add_option("--t", o.t, "Leaves per vertex for corona");
  generate_cmd->add_option("--seed", o.seed, "Seed for random families");
  handlers[generate_cmd] = &generate;

  auto* r3 = app.add_subcommand("reduce-3dm3", "Build the supergraph of a 3DM3 instance");
  r3->add_option("instance", o.input, "3DM3 instance file")->required();
  r3->add_option("--graph-out", o.graph_out, "Also write the graph as an edge-list file");
  handlers[r3] = &reduce_3dm3;

  auto* rs = app.add_subcommand("reduce-setcover", "Build the gadget graph of a set cover instance");
  rs->add_option("instance", o.input, "Set cover instance file")->required();
  rs->add_option("--graph-out", o.graph_out, "Also write the graph as an edge-list file");
  handlers[rs] = &reduce_setcover;

  auto* ex = app.add_subcommand("extract", "Recover a solution from a reduced-graph witness");
  ex->add_option("problem", o.kind, "3dm3 or setcover")->required();
  ex->add_option("instance", o.input, "Instance file")->required();
  ex->add_option("witness", o.second_input,
                 "Edge-list file: spanning edges (3dm3) or added edges (setcover) on the reduced graph")
      ->required();
  handlers[ex] = &extract;

  auto* orc = app.add_subcommand("oracle", "Exhaustive reference solvers");
  orc->add_option("kind", o.kind, "dd2, minimal, setcover or 3dm3")->required();
  orc->add_option("input", o.input, "Graph or instance file")->required();
  handlers[orc] = &oracle;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "dd2: " << e.what() << '\n';
    return 2;
  }

  try {
    Outcome outcome;
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) outcome = handler(o);
    }
    const std::string text = o.quiet && outcome.certificate ? first_line(outcome.document) : outcome.document;
    if (o.output.empty()) {
      out << text;
    } else {
      write_file(o.output, text);
    }
    return outcome.code;
  } catch (const GuardExceeded& e) {
    err << "dd2: " << e.what() << " (use --force to run anyway)\n";
  } catch (const Error& e) {
    err << "dd2: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "dd2: internal error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace dd2::cli
