#include <benchmark/benchmark.h>

#include "tiso/generators.hpp"
#include "tiso/isomorphism.hpp"
#include "tiso/random.hpp"
#include "tiso/representations.hpp"
#include "tiso/wl.hpp"

namespace {

// Walk graph on a 10-node 3-regular base, the experiment workload.
tiso::TemporalGraph walk_graph(std::size_t walks) {
  static const auto base = tiso::k_regular_random_graph(10, 3, 1);
  return tiso::walk_temporal_graph(base, walks, 2, 2);
}

void BM_EventGraph(benchmark::State& state) {
  const auto g = walk_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tiso::build_event_graph(g, tiso::Delta(1)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_EventGraph)->Arg(100)->Arg(500)->Arg(2000);

void BM_CompressedAugmented(benchmark::State& state) {
  const auto g = walk_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tiso::build_compressed_augmented_event_graph(g, tiso::Delta(1)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_CompressedAugmented)->Arg(100)->Arg(500)->Arg(2000);

void BM_WlFingerprint(benchmark::State& state) {
  const auto g = tiso::build_augmented_event_graph(
      walk_graph(static_cast<std::size_t>(state.range(0))), tiso::Delta(1));
  for (auto _ : state) {
    tiso::ColorDictionary dict;
    benchmark::DoNotOptimize(tiso::wl_fingerprint(g, 3, dict));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_nodes()));
}
BENCHMARK(BM_WlFingerprint)->Arg(100)->Arg(500);

void BM_ConsistentIso(benchmark::State& state) {
  const auto g = walk_graph(static_cast<std::size_t>(state.range(0)));
  std::vector<tiso::NodeId> perm(g.num_nodes());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    perm[i] = static_cast<tiso::NodeId>(perm.size() - 1 - i);
  }
  const auto h = tiso::shift_timestamps(tiso::rename_nodes(g, perm), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tiso::consistent_event_graph_iso(g, h, tiso::Delta(1)));
  }
}
BENCHMARK(BM_ConsistentIso)->Arg(10)->Arg(50);

void BM_TimeConcatenatedIso(benchmark::State& state) {
  const auto g = walk_graph(static_cast<std::size_t>(state.range(0)));
  const auto h = tiso::shift_timestamps(g, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tiso::time_concatenated_iso(g, h));
  }
}
BENCHMARK(BM_TimeConcatenatedIso)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
