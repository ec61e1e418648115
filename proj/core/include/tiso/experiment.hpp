#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiso/classifier.hpp"
#include "tiso/dataset.hpp"

namespace tiso {

enum class ExperimentKind { kShuffle, kCommunity };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kShuffle;
  std::vector<double> alphas;                         // shuffle cells
  std::vector<std::pair<double, double>> sigma_pairs;  // community cells (sigma0, sigma1)
  std::size_t graphs_per_class = 125;
  std::size_t walks_per_graph = 500;
  std::size_t walk_length = 2;
  std::size_t runs = 25;
  std::uint64_t seed = 0;
  Representation representation = Representation::kCompressedAugmented;
  std::size_t iterations = kDefaultWlIterations;
  Timestamp delta = 1;
  double train_fraction = 0.8;
  std::size_t jobs = 1;
  ClassifierConfig classifier;
};

/// Parses the JSON config. Throws Error(kInvalidConfig) naming the field.
///
/// {"experiment": "shuffle" | "community",
///  "alphas": [..],
///  "sigma_pairs": [[s0, s1], ..]  or  "sigma_grid": {"sigma0": [..], "sigma1": [..]},
///  "graphs_per_class", "walks_per_graph", "walk_length", "runs", "seed",
///  "representation", "iterations", "delta", "train_fraction", "jobs",
///  "classifier": {"learning_rate", "epochs", "weight_decay", "standardize"}}
ExperimentConfig parse_experiment_config(std::string_view json);

struct CellResult {
  double param1 = 0.0;
  std::optional<double> param2;
  std::uint64_t seed = 0;
  std::optional<ExperimentReport> report;
  std::string error;  // set when the cell failed
  double seconds = 0.0;
};

/// Number of cells the config describes.
std::size_t cell_count(const ExperimentConfig& config);

/// Runs cell `index`; its seed is mix_seed(config.seed ^ index).
CellResult run_cell(const ExperimentConfig& config, std::size_t index);

/// Runs every cell, up to config.jobs at a time. A failing cell is recorded
/// in its result and does not stop the others.
std::vector<CellResult> run_experiment_grid(const ExperimentConfig& config);

/// param1,param2,mean_acc,std_acc,runs,seconds
std::string grid_to_csv(const std::vector<CellResult>& cells);
std::string cell_to_json(const CellResult& cell, const ExperimentConfig& config);

}  // namespace tiso
