#include "tiso/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "tiso/errors.hpp"
#include "tiso/random.hpp"

namespace tiso {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kInvalidConfig, "field '" + field + "': " + why);
}

template <typename T>
void read_count(const json& j, const char* field, T& out, bool allow_zero = false) {
  if (!j.contains(field)) return;
  const auto& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < (allow_zero ? 0 : 1)) {
    bad_field(field, allow_zero ? "expected a non-negative integer" : "expected a positive integer");
  }
  out = v.get<T>();
}

double read_real(const json& v, const std::string& field) {
  if (!v.is_number()) bad_field(field, "expected a number");
  return v.get<double>();
}

std::vector<double> read_reals(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) bad_field(field, "expected a non-empty array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_real(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void check_sigma(double s, const std::string& field) {
  if (!(s > -1.0 && s < 1.0)) bad_field(field, "sigma must lie in (-1, 1)");
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kInvalidConfig, "config must be a JSON object");

  ExperimentConfig c;
  if (!j.contains("experiment")) bad_field("experiment", "missing");
  const auto& kind = j.at("experiment");
  if (kind == "shuffle" || kind == "A") {
    c.kind = ExperimentKind::kShuffle;
  } else if (kind == "community" || kind == "B") {
    c.kind = ExperimentKind::kCommunity;
  } else {
    bad_field("experiment", "expected \"shuffle\" or \"community\"");
  }

  if (c.kind == ExperimentKind::kShuffle) {
    if (!j.contains("alphas")) bad_field("alphas", "missing");
    c.alphas = read_reals(j.at("alphas"), "alphas");
    for (std::size_t i = 0; i < c.alphas.size(); ++i) {
      if (!(c.alphas[i] >= 0.0 && c.alphas[i] <= 1.0)) {
        bad_field("alphas[" + std::to_string(i) + "]", "alpha must lie in [0, 1]");
      }
    }
  } else if (j.contains("sigma_pairs")) {
    const auto& pairs = j.at("sigma_pairs");
    if (!pairs.is_array() || pairs.empty()) bad_field("sigma_pairs", "expected a non-empty array");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto field = "sigma_pairs[" + std::to_string(i) + "]";
      auto p = read_reals(pairs[i], field);
      if (p.size() != 2) bad_field(field, "expected [sigma0, sigma1]");
      check_sigma(p[0], field);
      check_sigma(p[1], field);
      c.sigma_pairs.emplace_back(p[0], p[1]);
    }
  } else if (j.contains("sigma_grid")) {
    const auto& grid = j.at("sigma_grid");
    if (!grid.is_object() || !grid.contains("sigma0") || !grid.contains("sigma1")) {
      bad_field("sigma_grid", "expected {\"sigma0\": [..], \"sigma1\": [..]}");
    }
    auto s0 = read_reals(grid.at("sigma0"), "sigma_grid.sigma0");
    auto s1 = read_reals(grid.at("sigma1"), "sigma_grid.sigma1");
    for (double a : s0) check_sigma(a, "sigma_grid.sigma0");
    for (double b : s1) check_sigma(b, "sigma_grid.sigma1");
    for (double a : s0) {
      for (double b : s1) c.sigma_pairs.emplace_back(a, b);
    }
  } else {
    bad_field("sigma_pairs", "missing (or give sigma_grid)");
  }

  read_count(j, "graphs_per_class", c.graphs_per_class);
  read_count(j, "walks_per_graph", c.walks_per_graph);
  read_count(j, "walk_length", c.walk_length);
  read_count(j, "runs", c.runs);
  read_count(j, "iterations", c.iterations, true);
  read_count(j, "delta", c.delta);
  read_count(j, "jobs", c.jobs);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) bad_field("seed", "expected a non-negative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("representation")) {
    const auto& r = j.at("representation");
    auto parsed = r.is_string() ? parse_representation(r.get<std::string>()) : std::nullopt;
    if (!parsed) {
      bad_field("representation",
                "expected one of compressed_augmented, augmented, event, aggregated");
    }
    c.representation = *parsed;
  }
  if (j.contains("train_fraction")) {
    c.train_fraction = read_real(j.at("train_fraction"), "train_fraction");
    if (!(c.train_fraction > 0.0 && c.train_fraction < 1.0)) {
      bad_field("train_fraction", "must lie in (0, 1)");
    }
  }
  if (j.contains("classifier")) {
    const auto& k = j.at("classifier");
    if (!k.is_object()) bad_field("classifier", "expected an object");
    if (k.contains("learning_rate")) {
      c.classifier.learning_rate = read_real(k.at("learning_rate"), "classifier.learning_rate");
      if (!(c.classifier.learning_rate > 0)) bad_field("classifier.learning_rate", "must be positive");
    }
    if (k.contains("weight_decay")) {
      c.classifier.weight_decay = read_real(k.at("weight_decay"), "classifier.weight_decay");
      if (c.classifier.weight_decay < 0) bad_field("classifier.weight_decay", "must be non-negative");
    }
    read_count(k, "epochs", c.classifier.epochs);
    if (k.contains("standardize")) {
      if (!k.at("standardize").is_boolean()) bad_field("classifier.standardize", "expected a boolean");
      c.classifier.standardize = k.at("standardize").get<bool>();
    }
  }
  return c;
}

std::size_t cell_count(const ExperimentConfig& config) {
  return config.kind == ExperimentKind::kShuffle ? config.alphas.size()
                                                 : config.sigma_pairs.size();
}

CellResult run_cell(const ExperimentConfig& config, std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  CellResult cell;
  cell.seed = mix_seed(config.seed ^ index);
  try {
    Dataset ds;
    if (config.kind == ExperimentKind::kShuffle) {
      cell.param1 = config.alphas.at(index);
      ShuffleDatasetConfig dc;
      dc.alpha = cell.param1;
      dc.graphs_per_class = config.graphs_per_class;
      dc.walks_per_graph = config.walks_per_graph;
      dc.walk_len = config.walk_length;
      dc.seed = cell.seed;
      ds = make_dataset_A(dc);
    } else {
      std::tie(cell.param1, cell.param2) = config.sigma_pairs.at(index);
      CommunityDatasetConfig dc;
      dc.sigma0 = cell.param1;
      dc.sigma1 = *cell.param2;
      dc.graphs_per_class = config.graphs_per_class;
      dc.walks_per_graph = config.walks_per_graph;
      dc.walk_len = config.walk_length;
      dc.seed = cell.seed;
      ds = make_dataset_B(dc);
    }
    auto features = featurize(ds, Delta(config.delta), config.iterations, config.representation);
    cell.report = train_eval(features, ds.labels, config.train_fraction, config.runs,
                             mix_seed(cell.seed), config.classifier);
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  cell.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cell;
}

std::vector<CellResult> run_experiment_grid(const ExperimentConfig& config) {
  const auto n = cell_count(config);
  std::vector<CellResult> cells(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < n; i = next++) cells[i] = run_cell(config, i);
  };
  {
    std::vector<std::jthread> pool;
    const auto jobs = std::min(std::max<std::size_t>(config.jobs, 1), std::max<std::size_t>(n, 1));
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  return cells;
}

namespace {

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string grid_to_csv(const std::vector<CellResult>& cells) {
  std::ostringstream out;
  out << "param1,param2,mean_acc,std_acc,runs,seconds\n";
  for (const auto& c : cells) {
    out << format_real(c.param1) << ',';
    if (c.param2) out << format_real(*c.param2);
    out << ',';
    if (c.report) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f,%.6f,%zu", c.report->mean_accuracy,
                    c.report->std_accuracy, c.report->runs);
      out << buf;
    } else {
      out << ",,0";
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, ",%.3f\n", c.seconds);
    out << secs;
  }
  return out.str();
}

std::string cell_to_json(const CellResult& cell, const ExperimentConfig& config) {
  json j;
  j["experiment"] = config.kind == ExperimentKind::kShuffle ? "shuffle" : "community";
  if (config.kind == ExperimentKind::kShuffle) {
    j["alpha"] = cell.param1;
  } else {
    j["sigma0"] = cell.param1;
    j["sigma1"] = cell.param2.value_or(0.0);
  }
  j["delta"] = config.delta;
  j["iterations"] = config.iterations;
  j["representation"] = std::string(to_string(config.representation));
  j["graphs_per_class"] = config.graphs_per_class;
  j["walks_per_graph"] = config.walks_per_graph;
  j["seed"] = cell.seed;
  j["seconds"] = cell.seconds;
  if (cell.report) {
    j["accuracies"] = cell.report->accuracies;
    j["mean_accuracy"] = cell.report->mean_accuracy;
    j["std_accuracy"] = cell.report->std_accuracy;
    j["runs"] = cell.report->runs;
    j["degenerate"] = cell.report->degenerate;
  } else {
    j["error"] = cell.error;
  }
  return j.dump(2);
}

}  // namespace tiso
