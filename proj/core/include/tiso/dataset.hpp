#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiso/static_graph.hpp"
#include "tiso/temporal_graph.hpp"
#include "tiso/wl.hpp"

namespace tiso {

/// Walk-generated temporal graphs with binary class labels.
struct Dataset {
  std::vector<TemporalGraph> graphs;
  std::vector<int> labels;
  std::string manifest_json;  // generation parameters and seeds
};

/// Shuffled-timestamp task: class 0 holds walk graphs on a shared k-regular
/// base graph, class 1 independently generated walk graphs with a fraction
/// alpha of their timestamps permuted.
struct ShuffleDatasetConfig {
  double alpha = 0.0;
  std::size_t graphs_per_class = 125;
  std::size_t walks_per_graph = 500;
  std::size_t walk_len = 2;
  std::size_t nodes = 10;
  std::size_t degree = 3;
  std::uint64_t seed = 0;
};

/// Community task: class 0 walks with sigma0, class 1 with sigma1, both on
/// one shared two-community base graph.
struct CommunityDatasetConfig {
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  std::size_t graphs_per_class = 125;
  std::size_t walks_per_graph = 500;
  std::size_t walk_len = 2;
  std::size_t community_size = 10;
  std::size_t degree = 3;
  std::size_t bridges = 2;
  std::uint64_t seed = 0;
};

/// Graph i (classes concatenated, class 0 first) is generated from
/// seed_i = seed XOR i. The base graph uses mix_seed(seed).
Dataset make_dataset_A(const ShuffleDatasetConfig& config);
Dataset make_dataset_B(const CommunityDatasetConfig& config);

enum class Representation { kCompressedAugmented, kAugmented, kEvent, kAggregated };

std::string_view to_string(Representation r);
std::optional<Representation> parse_representation(std::string_view name);

StaticGraph build_representation(const TemporalGraph& g, Representation r, Delta delta);

/// Dense feature matrix; column j is colour id j of the dataset's shared
/// dictionary.
struct FeatureMatrix {
  std::vector<std::vector<double>> rows;
  std::size_t columns = 0;
};

/// Builds the representation of every graph, fingerprints them in dataset
/// order with one shared dictionary and L1-normalises each row.
FeatureMatrix featurize(const Dataset& ds, Delta delta, std::size_t iterations,
                        Representation representation, WlOptions options = {},
                        std::size_t jobs = 1);

}  // namespace tiso
