// Command-line front end. JSON goes to stdout, human summaries to stderr.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "outerlabel/corpus.hpp"
#include "outerlabel/dispatch.hpp"
#include "outerlabel/exact.hpp"
#include "outerlabel/io.hpp"
#include "outerlabel/structure.hpp"

using namespace outerlabel;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotOuterplanar = 3;
constexpr int kExitUnsupported = 4;

struct InputArgs {
  std::string path = "-";
  std::string format = "edgelist";
};

Graph load_graph(const InputArgs& in) {
  const GraphFormat fmt = in.format == "json" ? GraphFormat::kJson : GraphFormat::kEdgeList;
  if (in.path == "-") return read_graph(std::cin, fmt);
  return read_graph_file(in.path, fmt);
}

void write_dot(const std::string& path, const TotalLabeling& f, const Graph& g) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  OuterplanarEmbedding emb = recognize_embed(g);
  out << to_dot(f, &emb);
}

int cmd_label(const InputArgs& in, int p, bool fallback, int kmax, bool reversed, bool trace,
              const std::string& dot) {
  Graph g = load_graph(in);
  if (p != 2) {
    std::cerr << "label: the constructive labelers produce (2,1)-total labelings; --p must be 2\n";
    return kExitParse;
  }
  DispatchOptions opts;
  opts.fallback_search = fallback;
  opts.kmax = kmax;
  opts.orientation = reversed ? Orientation::kReversed : Orientation::kForward;
  DispatchResult r = label_outerplanar(g, opts);
  if (trace) {
    for (const auto& line : r.report.trace) std::cerr << "trace: " << line << "\n";
    for (const auto& line : r.report.discrepancies) std::cerr << "discrepancy: " << line << "\n";
  }
  const auto violations = verify(r.labeling, 2);
  std::cout << labeling_to_json(r.labeling).dump() << "\n";
  write_dot(dot, r.labeling, g);
  const int s = g.empty() ? 0 : span(r.labeling);
  std::cerr << "n=" << g.num_vertices() << " m=" << g.num_edges()
            << " delta=" << (g.empty() ? 0 : g.max_degree()) << " algorithm=" << r.algorithm
            << " span=" << s << " bound=" << r.bound << " fallbacks=" << r.report.fallbacks
            << " verified=" << (violations.empty() ? "yes" : "no") << "\n";
  return violations.empty() ? 0 : kExitFail;
}

int cmd_verify(const InputArgs& in, const std::string& labeling_path, int p) {
  Graph g = load_graph(in);
  json j;
  {
    std::ifstream lf(labeling_path);
    if (!lf) throw ParseError("cannot open " + labeling_path);
    try {
      lf >> j;
    } catch (const json::exception& e) {
      throw ParseError(std::string("labeling JSON: ") + e.what());
    }
  }
  TotalLabeling f = labeling_from_json(g, j);
  const auto violations = verify(f, p);
  json out = {{"ok", violations.empty()}, {"violations", json::array()}};
  for (const auto& v : violations) out["violations"].push_back(violation_to_json(v));
  std::cout << out.dump() << "\n";
  if (violations.empty()) {
    std::cerr << "ok: span " << (f.num_assigned() ? span(f) : 0) << " within k=" << f.k() << "\n";
  } else {
    for (const auto& v : violations) std::cerr << to_string(v) << "\n";
  }
  return violations.empty() ? 0 : kExitFail;
}

int cmd_exact(const InputArgs& in, int p, int kmax, double budget, const std::string& dot) {
  Graph g = load_graph(in);
  SearchOptions so;
  so.element_cap = std::max(30, g.num_elements());
  so.time_budget_s = budget;
  so.parallel = true;
  LambdaResult r = lambda_exact(g, p, kmax, so);
  json out = {{"lambda", r.lambda ? json(*r.lambda) : json(nullptr)},
              {"timed_out", r.timed_out},
              {"nodes", r.stats.nodes},
              {"seconds", r.stats.seconds}};
  if (r.witness) out["witness"] = labeling_to_json(*r.witness);
  std::cout << out.dump() << "\n";
  if (r.witness) write_dot(dot, *r.witness, g);
  std::cerr << "lambda=" << (r.lambda ? std::to_string(*r.lambda) : "unknown") << " nodes=" << r.stats.nodes
            << " time=" << r.stats.seconds << "s\n";
  return r.lambda ? 0 : kExitFail;
}

int cmd_structure(const InputArgs& in, bool reversed) {
  Graph g = load_graph(in);
  OuterplanarEmbedding emb = recognize_embed(g, reversed ? Orientation::kReversed : Orientation::kForward);
  json out = {{"embedding", embedding_to_json(emb)}};
  json faces = json::array();
  for (const Face& f : endfaces(emb)) faces.push_back(f.vertices);
  out["endfaces"] = faces;
  out["configuration"] = nullptr;
  if (!g.empty() && g.min_degree() == 2) {
    if (auto c = find_configuration(emb)) out["configuration"] = configuration_to_json(*c);
  }
  json chains = json::array();
  for (const Chain& c : enumerate_chains(emb)) chains.push_back(chain_to_json(c));
  out["chains"] = chains;
  out["closed_chain"] = nullptr;
  try {
    out["closed_chain"] = chain_to_json(find_closed_chain(emb));
  } catch (const PreconditionError&) {
  } catch (const ChainNotFound&) {
  }
  std::cout << out.dump() << "\n";
  std::cerr << "blocks=" << emb.blocks().size() << " inner_edges=" << emb.inner_edges().size()
            << " chains=" << chains.size()
            << " configuration=" << (out["configuration"].is_null() ? "none" : out["configuration"]["kind"].get<std::string>())
            << "\n";
  return 0;
}

int cmd_generate(const CorpusSpec& spec, const std::string& out_path) {
  auto entries = generate_corpus(spec, true);
  if (out_path.empty() || out_path == "-") {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back({{"name", e.name}, {"n", e.n}, {"seed", e.seed},
                                                 {"edges", graph_to_json(e.graph)["edges"]}});
    std::cout << json{{"entries", arr}}.dump() << "\n";
  } else {
    save_manifest(out_path, entries);
  }
  std::cerr << "generated " << entries.size() << " graphs\n";
  return 0;
}

int cmd_bench(const std::string& manifest, int oracle_max, double budget) {
  auto entries = load_manifest(manifest);
  struct Row {
    int n = 0, m = 0, delta = 0, span = -1;
    std::optional<int> lambda;
    bool verified = false;
    std::string error;
  };
  std::vector<Row> rows(entries.size());
  const auto t0 = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < entries.size(); ++i) {
    const Graph& g = entries[i].graph;
    Row& r = rows[i];
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.delta = g.empty() ? 0 : g.max_degree();
    try {
      DispatchResult d = label_outerplanar(g);
      r.span = g.empty() ? 0 : span(d.labeling);
      r.verified = is_valid(d.labeling);
      if (g.num_elements() <= oracle_max) {
        SearchOptions so;
        so.time_budget_s = budget;
        so.element_cap = g.num_elements();
        r.lambda = lambda_exact(g, 2, r.span, so).lambda;
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json table = json::array();
  int ok = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    json row = {{"name", entries[i].name}, {"n", r.n}, {"delta", r.delta}, {"span", r.span},
                {"lambda", r.lambda ? json(*r.lambda) : json(nullptr)}, {"verified", r.verified}};
    if (!r.error.empty()) row["error"] = r.error;
    table.push_back(row);
    if (r.verified && r.span <= r.delta + 2) ++ok;
  }
  std::cout << table.dump() << "\n";
  std::fprintf(stderr, "%-10s %3s %5s %5s %7s %s\n", "name", "n", "delta", "span", "lambda", "verified");
  for (size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    std::fprintf(stderr, "%-10s %3d %5d %5d %7s %s\n", entries[i].name.c_str(), r.n, r.delta, r.span,
                 r.lambda ? std::to_string(*r.lambda).c_str() : "-", r.verified ? "yes" : "no");
  }
  std::fprintf(stderr, "%d/%zu verified within delta+2, %.2fs\n", ok, rows.size(), secs);
  return ok == static_cast<int>(rows.size()) ? 0 : kExitFail;
}

void add_input(CLI::App* sub, InputArgs& in) {
  sub->add_option("graph", in.path, "Graph file, '-' for stdin")->default_val("-");
  sub->add_option("--format", in.format, "Graph format")
      ->check(CLI::IsMember({"edgelist", "json"}))
      ->default_val("edgelist");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(2,1)-total labeling of outerplanar graphs"};
  app.require_subcommand(1);

  InputArgs in;
  int p = 2;
  int kmax = 12;
  bool fallback = false, reversed = false, trace = false;
  std::string dot, labeling_path, manifest, out_path;
  double budget = 60.0;
  int oracle_max = 22;
  CorpusSpec spec;
  std::optional<int> max_degree, min_degree;

  auto* label = app.add_subcommand("label", "Label a graph with span at most delta+2");
  add_input(label, in);
  label->add_option("--p", p, "Vertex-edge separation")->default_val(2);
  label->add_option("--kmax", kmax, "Largest span tried by --fallback-search")->default_val(12);
  label->add_flag("--fallback-search", fallback, "Search for delta >= 5 (experimental)");
  label->add_flag("--reversed", reversed, "Walk block boundaries in the other direction");
  label->add_flag("--emit-case-trace", trace, "Print the dispatch path to stderr");
  label->add_option("--dot", dot, "Write a DOT drawing of the labeling");

  auto* ver = app.add_subcommand("verify", "Check a labeling JSON against a graph");
  add_input(ver, in);
  ver->add_option("labeling", labeling_path, "Labeling JSON file")->required();
  ver->add_option("--p", p, "Vertex-edge separation")->default_val(2);

  auto* ex = app.add_subcommand("exact", "Exact lambda by backtracking search");
  add_input(ex, in);
  ex->add_option("--p", p, "Vertex-edge separation")->default_val(2);
  ex->add_option("--kmax", kmax, "Largest span tried")->default_val(12);
  ex->add_option("--time-budget", budget, "Seconds")->default_val(60.0);
  ex->add_option("--dot", dot, "Write a DOT drawing of the witness");

  auto* st = app.add_subcommand("structure", "Embedding, configurations and chains");
  add_input(st, in);
  st->add_flag("--reversed", reversed, "Walk block boundaries in the other direction");

  auto* gen = app.add_subcommand("generate", "Random outerplanar corpus");
  gen->add_option("--count", spec.count, "Number of graphs")->required();
  gen->add_option("--n-min", spec.n_min)->default_val(4);
  gen->add_option("--n-max", spec.n_max)->default_val(12);
  gen->add_option("--seed", spec.seed)->default_val(1);
  gen->add_option("--keep", spec.options.edge_keep_prob, "Chord keep probability")->default_val(0.5);
  gen->add_option("--outer-keep", spec.options.outer_keep_prob, "Side keep probability")->default_val(1.0);
  gen->add_option("--max-degree", max_degree, "Exact delta");
  gen->add_option("--min-degree", min_degree, "Exact minimum degree");
  gen->add_flag("--c1c2-free", spec.options.c1c2_free, "Reject graphs with C1 or C2");
  gen->add_option("--prefix", spec.prefix)->default_val("g");
  gen->add_option("--out", out_path, "Manifest path, '-' for stdout");

  auto* bench = app.add_subcommand("bench", "Label every graph of a corpus manifest");
  bench->add_option("manifest", manifest, "Corpus manifest")->required();
  bench->add_option("--oracle-max", oracle_max, "Run the oracle when |V|+|E| is at most this")->default_val(22);
  bench->add_option("--time-budget", budget, "Oracle seconds per graph")->default_val(60.0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*label) return cmd_label(in, p, fallback, kmax, reversed, trace, dot);
    if (*ver) return cmd_verify(in, labeling_path, p);
    if (*ex) return cmd_exact(in, p, kmax, budget, dot);
    if (*st) return cmd_structure(in, reversed);
    if (*gen) {
      spec.options.max_degree = max_degree;
      spec.options.min_degree = min_degree;
      return cmd_generate(spec, out_path);
    }
    if (*bench) return cmd_bench(manifest, oracle_max, budget);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const GraphError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotOuterplanar& e) {
    std::cerr << "not outerplanar: " << e.what() << "\n";
    return kExitNotOuterplanar;
  } catch (const UnsupportedDegree& e) {
    std::cerr << "unsupported degree: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitFail;
}
