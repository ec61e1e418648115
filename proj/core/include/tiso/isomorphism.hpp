#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tiso/representations.hpp"
#include "tiso/static_graph.hpp"
#include "tiso/temporal_graph.hpp"

namespace tiso {

enum class Verdict { kIsomorphic, kNotIsomorphic, kBudgetExceeded };

std::string_view to_string(Verdict v);

/// Verdict plus witness. `node_map` and `edge_map` are present iff the
/// verdict is kIsomorphic. What `edge_map` indexes depends on the test:
/// timestamped edges for the temporal notions, static edges for static_iso
/// and time_aggregated_iso.
struct IsoResult {
  Verdict verdict = Verdict::kNotIsomorphic;
  std::optional<std::vector<std::size_t>> node_map;
  std::optional<std::vector<std::size_t>> edge_map;
  std::size_t expanded = 0;

  bool isomorphic() const noexcept { return verdict == Verdict::kIsomorphic; }
};

struct SearchBudget {
  std::size_t max_nodes_expanded = 10'000'000;
};

/// Label-, edge- and weight-preserving isomorphism of static graphs.
IsoResult static_iso(const StaticGraph& g1, const StaticGraph& g2,
                     SearchBudget budget = {});

/// Static isomorphism of the augmented event graphs, decomposed into the
/// node mapping (label-0 part) and the edge mapping (label-1 part).
IsoResult consistent_event_graph_iso(const TemporalGraph& g1,
                                     const TemporalGraph& g2, Delta delta,
                                     SearchBudget budget = {});

/// edge_map indexes the edges of the time-aggregated graphs.
IsoResult time_aggregated_iso(const TemporalGraph& g1, const TemporalGraph& g2,
                              SearchBudget budget = {});

/// Edge labels are the full offset sets T(u,v). edge_map is the shifted
/// edge map (u,v;t) -> (pi(u),pi(v); t - t_min(g1) + t_min(g2)).
/// Throws Error(kEmptyGraph) if either graph has no edges.
IsoResult time_concatenated_iso(const TemporalGraph& g1,
                                const TemporalGraph& g2,
                                SearchBudget budget = {});

/// One node bijection that is an isomorphism of every snapshot pair, with
/// equal relative snapshot times. edge_map indexes the edges of
/// from_snapshots(s1) / from_snapshots(s2).
IsoResult timewise_iso(const SnapshotSequence& s1, const SnapshotSequence& s2,
                       SearchBudget budget = {});

struct SizeCap {
  std::size_t max_nodes = 6;
  std::size_t max_edges = 7;
};

/// Reference test straight from the definition: tries every node bijection
/// and every node-consistent edge bijection and compares the mapped set of
/// time-respecting paths with the target set.
/// Throws Error(kSizeCapExceeded) for graphs above the cap.
IsoResult brute_force_trp_iso(const TemporalGraph& g1, const TemporalGraph& g2,
                              Delta delta, SizeCap cap = {});

// Witness checkers. Each one works from the raw inputs, independent of the
// search that produced the witness.

bool is_static_isomorphism(const StaticGraph& g1, const StaticGraph& g2,
                           std::span<const std::size_t> node_map);

/// Node consistency plus: edge_map is an isomorphism of the event graphs.
bool is_consistent_event_graph_isomorphism(const TemporalGraph& g1,
                                           const TemporalGraph& g2, Delta delta,
                                           std::span<const std::size_t> node_map,
                                           std::span<const std::size_t> edge_map);

/// |T1(u,v)| == |T2(pi(u),pi(v))| for every ordered pair.
bool is_time_aggregated_isomorphism(const TemporalGraph& g1,
                                    const TemporalGraph& g2,
                                    std::span<const std::size_t> node_map);

/// T1(u,v) == T2(pi(u),pi(v)) for every ordered pair.
bool is_time_concatenated_isomorphism(const TemporalGraph& g1,
                                      const TemporalGraph& g2,
                                      std::span<const std::size_t> node_map);

/// The shifted edge map induced by a node mapping; nullopt when some
/// shifted edge does not exist in g2.
std::optional<std::vector<std::size_t>> shifted_edge_map(
    const TemporalGraph& g1, const TemporalGraph& g2,
    std::span<const std::size_t> node_map);

}  // namespace tiso
