#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tiso/temporal_graph.hpp"

namespace tiso {

/// Alternating node / timestamped-edge sequence. Walks and paths are not
/// distinguished: nodes may repeat.
struct TemporalPath {
  std::vector<NodeId> nodes;            // length() + 1 entries
  std::vector<TimestampedEdge> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const TemporalPath&, const TemporalPath&) = default;
};

struct PathLimits {
  std::optional<std::size_t> max_len;    // unbounded when empty
  std::optional<std::size_t> max_paths;  // BudgetExceeded beyond this
};

/// Visits every time-respecting path as a sequence of edge indices.
/// Order: start edges by (t, index), then depth-first with successors in
/// (t, index) order; each prefix is visited before its extensions.
void for_each_time_respecting_path(
    const TemporalGraph& g, Delta delta, PathLimits limits,
    const std::function<void(std::span<const EdgeIndex>)>& visit);

/// All time-respecting paths of length 1..max_len, in the order above.
/// Throws Error(kBudgetExceeded) when more than max_paths would be produced.
std::vector<TemporalPath> enumerate_time_respecting_paths(
    const TemporalGraph& g, Delta delta, PathLimits limits = {});

/// {source} plus every node reached by a time-respecting path from source.
/// Sorted ascending.
std::vector<NodeId> temporal_reachability(const TemporalGraph& g, Delta delta,
                                          NodeId source);

bool is_time_respecting(const TemporalPath& p, Delta delta);

}  // namespace tiso
