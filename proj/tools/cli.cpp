#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tiso/dataset.hpp"
#include "tiso/errors.hpp"
#include "tiso/experiment.hpp"
#include "tiso/export.hpp"
#include "tiso/isomorphism.hpp"
#include "tiso/parse.hpp"
#include "tiso/paths.hpp"
#include "tiso/representations.hpp"
#include "tiso/version.hpp"
#include "tiso/wl.hpp"

namespace tiso::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitError = 2;

// A usage problem detected after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

Delta require_delta(const CLI::Option* opt, std::int64_t value, const std::string& why) {
  if (opt->count() == 0) throw UsageError("--delta is required " + why);
  return Delta(value);
}

std::string edge_display(const TimestampedEdge& e, const TemporalGraph& g) {
  return g.name(e.src) + "->" + g.name(e.dst) + "@" + std::to_string(e.t);
}

std::string plural(std::size_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

// transform -----------------------------------------------------------------

struct TransformArgs {
  std::string input;
  std::string repr;
  std::int64_t delta = 1;
  CLI::Option* delta_opt = nullptr;
  std::string out;
  std::string format = "dot";
  bool weighted_incidence = false;
};

std::string render_static(const StaticGraph& g, const std::string& format,
                          std::span<const std::string> names) {
  if (format == "dot") return to_dot(g, names);
  if (format == "json") return to_json(g, names);
  return to_csv(g, names);
}

std::string class_summary(const CompressedEventGraph& c) {
  std::string s = plural(c.graph.num_nodes(), "event node", "event nodes") + ", " +
                  plural(c.classes.size(), "class", "classes");
  for (const auto& k : c.classes) s += " ×" + std::to_string(k.cardinality);
  return s;
}

int cmd_transform(const TransformArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = load_temporal_graph(a.input);
  const auto& names = g.names();
  std::string rendered;
  std::vector<std::string> summary;

  if (a.repr == "event" || a.repr == "augmented" || a.repr == "compressed") {
    const auto delta = require_delta(a.delta_opt, a.delta, "for --repr " + a.repr);
    StaticGraph sg;
    if (a.repr == "event") {
      sg = build_event_graph(g, delta);
      summary.push_back(plural(sg.num_nodes(), "event node", "event nodes") + ", " +
                        plural(sg.num_edges(), "edge", "edges"));
    } else if (a.repr == "augmented") {
      sg = build_augmented_event_graph(g, delta);
      summary.push_back(plural(sg.num_nodes(), "node", "nodes") + " (" +
                        std::to_string(sg.count_label(kOriginalLabel)) + " original, " +
                        std::to_string(sg.count_label(kEventLabel)) + " event), " +
                        plural(sg.num_edges(), "edge", "edges"));
    } else {
      sg = build_compressed_augmented_event_graph(
          g, delta, CompressionOptions{a.weighted_incidence});
      summary.push_back(class_summary(compress_event_graph(build_event_graph(g, delta))));
      summary.push_back(plural(sg.num_nodes(), "node", "nodes") + ", " +
                        plural(sg.num_edges(), "edge", "edges") + ", total weight " +
                        std::to_string(sg.total_weight()));
    }
    rendered = render_static(sg, a.format, names);
  } else if (a.repr == "aggregated") {
    const auto sg = build_time_aggregated(g);
    summary.push_back(plural(sg.num_nodes(), "node", "nodes") + ", " +
                      plural(sg.num_edges(), "static edge", "static edges") +
                      ", total weight " + std::to_string(sg.total_weight()));
    rendered = render_static(sg, a.format, names);
  } else if (a.repr == "concatenated") {
    const auto c = build_time_concatenated(g);
    summary.push_back(plural(c.graph.num_nodes(), "node", "nodes") + ", " +
                      plural(c.graph.num_edges(), "static edge", "static edges") + ", " +
                      plural(g.num_edges(), "timestamped edge", "timestamped edges"));
    if (a.format == "json") {
      rendered = time_concatenated_to_json(c, names);
    } else if (a.format == "dot") {
      rendered = to_dot(c.graph, names);
    } else {
      throw UsageError("--repr concatenated supports --format json or dot");
    }
  } else {
    const auto s = to_snapshots(g);
    summary.push_back(plural(s.snapshots.size(), "snapshot", "snapshots") + ", " +
                      plural(g.num_edges(), "edge", "edges"));
    if (a.format == "json") {
      rendered = snapshots_to_json(s, names);
    } else if (a.format == "csv") {
      rendered = snapshots_to_csv(s, names);
    } else {
      throw UsageError("--repr snapshots supports --format json or csv");
    }
  }

  if (a.out.empty()) {
    out << rendered;
    for (const auto& line : summary) err << line << '\n';
  } else {
    write_file(a.out, rendered);
    for (const auto& line : summary) out << line << '\n';
  }
  return 0;
}

// paths / reach ---------------------------------------------------------------

struct PathsArgs {
  std::string input;
  std::int64_t delta = 1;
  std::size_t max_len = 0;
  std::size_t max_paths = 0;
};

int cmd_paths(const PathsArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = load_temporal_graph(a.input);
  PathLimits limits;
  if (a.max_len > 0) limits.max_len = a.max_len;
  if (a.max_paths > 0) limits.max_paths = a.max_paths;
  std::size_t count = 0;
  for_each_time_respecting_path(g, Delta(a.delta), limits, [&](std::span<const EdgeIndex> p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      out << (i ? " " : "") << edge_display(g.edge(p[i]), g);
    }
    out << '\n';
    ++count;
  });
  err << plural(count, "path", "paths") << '\n';
  return 0;
}

struct ReachArgs {
  std::string input;
  std::int64_t delta = 1;
  std::string source;
};

int cmd_reach(const ReachArgs& a, std::ostream& out) {
  const auto g = load_temporal_graph(a.input);
  std::optional<NodeId> source;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.name(v) == a.source) source = v;
  }
  if (!source) throw UsageError("unknown source node '" + a.source + "'");
  for (auto v : temporal_reachability(g, Delta(a.delta), *source)) out << g.name(v) << '\n';
  return 0;
}

// iso -----------------------------------------------------------------------

struct IsoArgs {
  std::string file1, file2;
  std::string mode = "consistent";
  std::int64_t delta = 1;
  CLI::Option* delta_opt = nullptr;
  std::size_t budget = SearchBudget{}.max_nodes_expanded;
};

int cmd_iso(const IsoArgs& a, std::ostream& out) {
  const auto g1 = load_temporal_graph(a.file1);
  const auto g2 = load_temporal_graph(a.file2);
  const SearchBudget budget{a.budget};

  IsoResult r;
  // Turns an edge_map entry into a displayable pair.
  std::function<std::pair<std::string, std::string>(std::size_t, std::size_t)> show_edge =
      [&](std::size_t i, std::size_t j) {
        return std::pair<std::string, std::string>{edge_display(g1.edge(i), g1), edge_display(g2.edge(j), g2)};
      };
  std::optional<StaticGraph> agg1, agg2;
  std::optional<TemporalGraph> snapshot_edges1, snapshot_edges2;

  if (a.mode == "trp-oracle") {
    r = brute_force_trp_iso(g1, g2, require_delta(a.delta_opt, a.delta, "for --mode trp-oracle"));
  } else if (a.mode == "consistent") {
    r = consistent_event_graph_iso(g1, g2,
                                   require_delta(a.delta_opt, a.delta, "for --mode consistent"),
                                   budget);
  } else if (a.mode == "aggregated") {
    r = time_aggregated_iso(g1, g2, budget);
    agg1 = build_time_aggregated(g1);
    agg2 = build_time_aggregated(g2);
    show_edge = [&](std::size_t i, std::size_t j) {
      const auto& e1 = agg1->edges()[i];
      const auto& e2 = agg2->edges()[j];
      return std::pair<std::string, std::string>{
          g1.name(static_cast<NodeId>(e1.src)) + "->" + g1.name(static_cast<NodeId>(e1.dst)),
          g2.name(static_cast<NodeId>(e2.src)) + "->" + g2.name(static_cast<NodeId>(e2.dst))};
    };
  } else if (a.mode == "concatenated") {
    r = time_concatenated_iso(g1, g2, budget);
  } else {
    const auto s2 = to_snapshots(g2);
    r = timewise_iso(to_snapshots(g1), s2, budget);
    snapshot_edges1 = from_snapshots(to_snapshots(g1));
    snapshot_edges2 = from_snapshots(s2);
    show_edge = [&](std::size_t i, std::size_t j) {
      return std::pair<std::string, std::string>{edge_display(snapshot_edges1->edge(i), g1),
                       edge_display(snapshot_edges2->edge(j), g2)};
    };
  }

  json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["mode"] = a.mode;
  j["expanded"] = r.expanded;
  if (r.node_map) {
    json nodes = json::object();
    for (std::size_t v = 0; v < r.node_map->size(); ++v) {
      nodes[g1.name(static_cast<NodeId>(v))] = g2.name(static_cast<NodeId>((*r.node_map)[v]));
    }
    j["node_map"] = nodes;
  }
  if (r.edge_map) {
    json edges = json::array();
    for (std::size_t i = 0; i < r.edge_map->size(); ++i) {
      auto [from, to] = show_edge(i, (*r.edge_map)[i]);
      edges.push_back({from, to});
    }
    j["edge_map"] = edges;
  }
  out << j.dump() << '\n';
  switch (r.verdict) {
    case Verdict::kIsomorphic: return 0;
    case Verdict::kNotIsomorphic: return 1;
    case Verdict::kBudgetExceeded: return kExitError;
  }
  return kExitError;
}

// wl-compare ----------------------------------------------------------------

struct WlArgs {
  std::string file1, file2;
  std::string repr = "augmented";
  std::int64_t delta = 1;
  CLI::Option* delta_opt = nullptr;
  std::size_t iterations = kDefaultWlIterations;
  bool undirected = false;
  bool ignore_weights = false;
  bool fingerprints = false;
};

int cmd_wl_compare(const WlArgs& a, std::ostream& out) {
  const auto g1 = load_temporal_graph(a.file1);
  const auto g2 = load_temporal_graph(a.file2);
  auto repr = parse_representation(a.repr == "compressed" ? "compressed_augmented" : a.repr);
  if (!repr) throw UsageError("unknown --repr '" + a.repr + "'");
  Delta delta(1);
  if (*repr != Representation::kAggregated) {
    delta = require_delta(a.delta_opt, a.delta, "for --repr " + a.repr);
  }
  const auto s1 = build_representation(g1, *repr, delta);
  const auto s2 = build_representation(g2, *repr, delta);
  const WlOptions options{!a.undirected, !a.ignore_weights};

  if (a.fingerprints) {
    ColorDictionary dict;
    out << fingerprint_to_json(wl_fingerprint(s1, a.iterations, dict, options)) << '\n';
    out << fingerprint_to_json(wl_fingerprint(s2, a.iterations, dict, options)) << '\n';
  }
  if (auto t = first_distinguishing_iteration(s1, s2, a.iterations, options)) {
    out << "distinguished at iteration " << *t << '\n';
    return 1;
  }
  out << "indistinguishable after " << a.iterations << '\n';
  return 0;
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
  std::string model = "shuffle";
  double alpha = 0.0;
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  std::size_t graphs_per_class = 125;
  std::size_t walks = 500;
  std::size_t walk_length = 2;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::string out_dir;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  std::uint64_t seed = a.seed;
  if (a.seed_opt->count() == 0) {
    seed = entropy_seed();
    out << "seed " << seed << '\n';
  }
  Dataset ds;
  if (a.model == "shuffle") {
    ShuffleDatasetConfig c;
    c.alpha = a.alpha;
    c.graphs_per_class = a.graphs_per_class;
    c.walks_per_graph = a.walks;
    c.walk_len = a.walk_length;
    c.seed = seed;
    ds = make_dataset_A(c);
  } else {
    CommunityDatasetConfig c;
    c.sigma0 = a.sigma0;
    c.sigma1 = a.sigma1;
    c.graphs_per_class = a.graphs_per_class;
    c.walks_per_graph = a.walks;
    c.walk_len = a.walk_length;
    c.seed = seed;
    ds = make_dataset_B(c);
  }

  fs::create_directories(a.out_dir);
  auto manifest = json::parse(ds.manifest_json);
  json files = json::array();
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "graph_%04zu.csv", i);
    write_file(fs::path(a.out_dir) / name, temporal_to_csv(ds.graphs[i]));
    files.push_back(name);
  }
  manifest["files"] = files;
  write_file(fs::path(a.out_dir) / "manifest.json", manifest.dump(2) + "\n");
  out << "wrote " << ds.graphs.size() << " graphs to " << a.out_dir << '\n';
  return 0;
}

// experiment ----------------------------------------------------------------

struct ExperimentArgs {
  std::string config;
  std::string out_dir;
  std::size_t jobs = 0;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
};

int cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
  const auto text = read_file(a.config);
  auto config = parse_experiment_config(text);
  if (a.seed_opt->count() > 0) {
    config.seed = a.seed;
  } else if (!json::parse(text).contains("seed")) {
    config.seed = entropy_seed();
    out << "seed " << config.seed << '\n';
  }
  if (a.jobs > 0) config.jobs = a.jobs;

  const auto cells = run_experiment_grid(config);
  fs::create_directories(a.out_dir);
  const auto csv = grid_to_csv(cells);
  write_file(fs::path(a.out_dir) / "results.csv", csv);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "cell_%03zu.json", i);
    write_file(fs::path(a.out_dir) / name, cell_to_json(cells[i], config) + "\n");
    if (!cells[i].error.empty()) err << "cell " << i << " failed: " << cells[i].error << '\n';
  }
  out << csv;
  return 0;
}

// export --------------------------------------------------------------------

struct ExportArgs {
  std::string input;
  std::string format = "csv";
  std::string out;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  const auto g = load_temporal_graph(a.input);
  std::string text;
  if (a.format == "csv") {
    text = temporal_to_csv(g);
  } else if (a.format == "ndjson") {
    text = temporal_to_ndjson(g);
  } else {
    text = temporal_to_dot(g);
  }
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal graph causal-topology toolkit", "tiso"};
  app.require_subcommand(1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print library and format versions");

  TransformArgs transform;
  auto* t = app.add_subcommand("transform", "Build a static representation of a temporal graph");
  t->add_option("input", transform.input, "Edge list (.csv or .ndjson)")->required();
  t->add_option("--repr", transform.repr)
      ->required()
      ->check(CLI::IsMember(
          {"event", "augmented", "compressed", "aggregated", "concatenated", "snapshots"}));
  transform.delta_opt = t->add_option("--delta", transform.delta, "Maximum waiting time");
  t->add_option("--out", transform.out, "Output file (default: stdout)");
  t->add_option("--format", transform.format)
      ->check(CLI::IsMember({"dot", "json", "csv"}))
      ->capture_default_str();
  t->add_flag("--weighted-incidence", transform.weighted_incidence,
              "Weight incidence arcs of compressed graphs by class size");

  PathsArgs paths;
  auto* p = app.add_subcommand("paths", "List time-respecting paths");
  p->add_option("input", paths.input)->required();
  p->add_option("--delta", paths.delta)->required();
  p->add_option("--max-len", paths.max_len, "0 for unbounded");
  p->add_option("--max-paths", paths.max_paths, "Abort beyond this many paths (0: no limit)");

  ReachArgs reach;
  auto* r = app.add_subcommand("reach", "Nodes reachable by time-respecting paths");
  r->add_option("input", reach.input)->required();
  r->add_option("--delta", reach.delta)->required();
  r->add_option("--source", reach.source, "Source node name")->required();

  IsoArgs iso;
  auto* i = app.add_subcommand("iso", "Test two temporal graphs for isomorphism");
  i->add_option("file1", iso.file1)->required();
  i->add_option("file2", iso.file2)->required();
  i->add_option("--mode", iso.mode)
      ->check(CLI::IsMember({"trp-oracle", "consistent", "aggregated", "concatenated",
                             "timewise"}))
      ->capture_default_str();
  iso.delta_opt = i->add_option("--delta", iso.delta);
  i->add_option("--budget", iso.budget, "Search-node expansion budget")->capture_default_str();

  WlArgs wl;
  auto* w = app.add_subcommand("wl-compare", "Compare two graphs by D-WL refinement");
  w->add_option("file1", wl.file1)->required();
  w->add_option("file2", wl.file2)->required();
  w->add_option("--repr", wl.repr)
      ->check(CLI::IsMember({"augmented", "compressed", "event", "aggregated"}))
      ->capture_default_str();
  wl.delta_opt = w->add_option("--delta", wl.delta);
  w->add_option("-K,--iterations", wl.iterations)->capture_default_str();
  w->add_flag("--undirected", wl.undirected, "Merge in- and out-neighbourhoods");
  w->add_flag("--ignore-weights", wl.ignore_weights, "Drop edge weights from neighbour keys");
  w->add_flag("--fingerprints", wl.fingerprints, "Print both fingerprints as JSON");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate a synthetic classification dataset");
  g->add_option("--model", gen.model)
      ->check(CLI::IsMember({"shuffle", "community"}))
      ->capture_default_str();
  g->add_option("--alpha", gen.alpha, "Fraction of shuffled timestamps (shuffle model)")
      ->check(CLI::Range(0.0, 1.0));
  g->add_option("--sigma0", gen.sigma0, "Bias of class 0 (community model)");
  g->add_option("--sigma1", gen.sigma1, "Bias of class 1 (community model)");
  g->add_option("--graphs-per-class", gen.graphs_per_class)->capture_default_str();
  g->add_option("--walks", gen.walks, "Walks per graph")->capture_default_str();
  g->add_option("--walk-length", gen.walk_length)->capture_default_str();
  gen.seed_opt = g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out_dir, "Output directory")->required();

  ExperimentArgs exp;
  auto* e = app.add_subcommand("experiment", "Run a classification experiment grid");
  e->add_option("--config", exp.config)->required();
  e->add_option("--out", exp.out_dir, "Output directory")->required();
  e->add_option("--jobs", exp.jobs, "Parallel cells (default: from config)");
  exp.seed_opt = e->add_option("--seed", exp.seed, "Overrides the config seed");

  ExportArgs ex;
  auto* x = app.add_subcommand("export", "Convert a temporal edge list");
  x->add_option("input", ex.input)->required();
  x->add_option("--format", ex.format)
      ->check(CLI::IsMember({"csv", "ndjson", "dot"}))
      ->capture_default_str();
  x->add_option("--out", ex.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    // --version short-circuits the subcommand requirement.
    if (std::find(args.begin(), args.end(), "--version") != args.end()) {
      out << "tiso " << kLibraryVersion << " (graph format " << kFormatVersion << ")\n";
      return 0;
    }
    app.parse(reversed);
  } catch (const CLI::ParseError& ex_) {
    const int code = app.exit(ex_, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (t->parsed()) return cmd_transform(transform, out, err);
    if (p->parsed()) return cmd_paths(paths, out, err);
    if (r->parsed()) return cmd_reach(reach, out);
    if (i->parsed()) return cmd_iso(iso, out);
    if (w->parsed()) return cmd_wl_compare(wl, out);
    if (g->parsed()) return cmd_generate(gen, out);
    if (e->parsed()) return cmd_experiment(exp, out, err);
    if (x->parsed()) return cmd_export(ex, out);
  } catch (const Error& ex_) {
    err << "error: " << ex_.what() << '\n';
    return kExitError;
  } catch (const UsageError& ex_) {
    err << "error: " << ex_.what() << '\n';
    return kExitError;
  } catch (const std::exception& ex_) {
    err << "error: " << ex_.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace tiso::cli
