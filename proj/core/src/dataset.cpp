#include "tiso/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <nlohmann/json.hpp>

#include "tiso/errors.hpp"
#include "tiso/generators.hpp"
#include "tiso/random.hpp"
#include "tiso/representations.hpp"

namespace tiso {

Dataset make_dataset_A(const ShuffleDatasetConfig& c) {
  if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in [0, 1]");
  }
  auto base = k_regular_random_graph(c.nodes, c.degree, mix_seed(c.seed));
  Dataset ds;
  nlohmann::json seeds = nlohmann::json::array();
  for (std::size_t i = 0; i < 2 * c.graphs_per_class; ++i) {
    const int label = i < c.graphs_per_class ? 0 : 1;
    const std::uint64_t seed_i = c.seed ^ i;
    auto g = walk_temporal_graph(base, c.walks_per_graph, c.walk_len, seed_i);
    if (label == 1) g = shuffle_timestamps(g, c.alpha, mix_seed(seed_i));
    ds.graphs.push_back(std::move(g));
    ds.labels.push_back(label);
    seeds.push_back(seed_i);
  }
  nlohmann::json manifest{
      {"model", "shuffle"},
      {"alpha", c.alpha},
      {"graphs_per_class", c.graphs_per_class},
      {"walks_per_graph", c.walks_per_graph},
      {"walk_length", c.walk_len},
      {"nodes", c.nodes},
      {"degree", c.degree},
      {"seed", c.seed},
      {"graph_seeds", seeds},
      {"labels", ds.labels}};
  ds.manifest_json = manifest.dump(2);
  return ds;
}

Dataset make_dataset_B(const CommunityDatasetConfig& c) {
  auto base = two_community_graph(c.community_size, c.community_size, c.degree, c.bridges,
                                  mix_seed(c.seed));
  Dataset ds;
  nlohmann::json seeds = nlohmann::json::array();
  for (std::size_t i = 0; i < 2 * c.graphs_per_class; ++i) {
    const int label = i < c.graphs_per_class ? 0 : 1;
    const std::uint64_t seed_i = c.seed ^ i;
    SigmaBias bias{base.communities, label == 0 ? c.sigma0 : c.sigma1};
    ds.graphs.push_back(
        walk_temporal_graph(base.graph, c.walks_per_graph, c.walk_len, seed_i, bias));
    ds.labels.push_back(label);
    seeds.push_back(seed_i);
  }
  nlohmann::json manifest{
      {"model", "community"},
      {"sigma0", c.sigma0},
      {"sigma1", c.sigma1},
      {"graphs_per_class", c.graphs_per_class},
      {"walks_per_graph", c.walks_per_graph},
      {"walk_length", c.walk_len},
      {"community_size", c.community_size},
      {"degree", c.degree},
      {"bridges", c.bridges},
      {"seed", c.seed},
      {"graph_seeds", seeds},
      {"labels", ds.labels}};
  ds.manifest_json = manifest.dump(2);
  return ds;
}

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::kCompressedAugmented: return "compressed_augmented";
    case Representation::kAugmented: return "augmented";
    case Representation::kEvent: return "event";
    case Representation::kAggregated: return "aggregated";
  }
  return "unknown";
}

std::optional<Representation> parse_representation(std::string_view name) {
  for (auto r : {Representation::kCompressedAugmented, Representation::kAugmented,
                 Representation::kEvent, Representation::kAggregated}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

StaticGraph build_representation(const TemporalGraph& g, Representation r, Delta delta) {
  switch (r) {
    case Representation::kCompressedAugmented:
      return build_compressed_augmented_event_graph(g, delta);
    case Representation::kAugmented: return build_augmented_event_graph(g, delta);
    case Representation::kEvent: return build_event_graph(g, delta);
    case Representation::kAggregated: return build_time_aggregated(g);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown representation");
}

FeatureMatrix featurize(const Dataset& ds, Delta delta, std::size_t iterations,
                        Representation representation, WlOptions options,
                        std::size_t jobs) {
  const auto count = ds.graphs.size();
  std::vector<StaticGraph> reps(count);
  {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (auto i = next++; i < count; i = next++) {
        reps[i] = build_representation(ds.graphs[i], representation, delta);
      }
    };
    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < std::max<std::size_t>(jobs, 1); ++j) pool.emplace_back(worker);
    worker();
  }

  // Serial pass: colour ids depend on insertion order.
  ColorDictionary dict;
  std::vector<WLFingerprint> prints;
  prints.reserve(count);
  for (const auto& g : reps) prints.push_back(wl_fingerprint(g, iterations, dict, options));

  FeatureMatrix out;
  out.columns = dict.size();
  out.rows.assign(count, std::vector<double>(out.columns, 0.0));
  for (std::size_t i = 0; i < count; ++i) {
    auto total = static_cast<double>(prints[i].total());
    if (total == 0.0) continue;
    for (const auto& [color, n] : prints[i].histogram) {
      out.rows[i][color] = static_cast<double>(n) / total;
    }
  }
  return out;
}

}  // namespace tiso
