#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tiso {

using NodeId = std::uint32_t;
using EdgeIndex = std::size_t;
using Timestamp = std::int64_t;

/// A directed interaction (src, dst; t).
struct TimestampedEdge {
  NodeId src = 0;
  NodeId dst = 0;
  Timestamp t = 0;

  friend auto operator<=>(const TimestampedEdge&,
                          const TimestampedEdge&) = default;
};

/// Maximum waiting time between consecutive edges of a time-respecting path.
class Delta {
 public:
  explicit Delta(std::int64_t value);
  std::int64_t value() const noexcept { return value_; }

 private:
  std::int64_t value_;
};

/// Node set 0..num_nodes-1 plus a set of timestamped directed edges.
///
/// Edges keep their insertion order; an edge's position is its EdgeIndex.
/// Construction rejects out-of-range endpoints and duplicate (src,dst,t)
/// triples. Immutable afterwards.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  TemporalGraph(std::size_t num_nodes, std::vector<TimestampedEdge> edges,
                std::vector<std::string> names = {});

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const TimestampedEdge> edges() const noexcept { return edges_; }
  const TimestampedEdge& edge(EdgeIndex i) const { return edges_.at(i); }

  /// External names, empty when the graph was built without them.
  std::span<const std::string> names() const noexcept { return names_; }
  /// External name if present, otherwise the decimal id.
  std::string name(NodeId v) const;

  std::optional<EdgeIndex> find_edge(const TimestampedEdge& e) const;

  /// Indices of edges leaving `v`, ordered by (t, index).
  std::span<const EdgeIndex> out_edges(NodeId v) const;

  /// Edges (v,w;t') with 1 <= t' - t <= delta for edge i = (u,v;t),
  /// ordered by (t', index).
  std::vector<EdgeIndex> successors(EdgeIndex i, Delta delta) const;

  /// Earliest timestamp; nullopt for an edgeless graph.
  std::optional<Timestamp> t_min() const;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<TimestampedEdge> edges_;
  std::vector<std::string> names_;
  // CSR over out-edges, sorted by (t, index) within each node.
  std::vector<std::size_t> out_offsets_;
  std::vector<EdgeIndex> out_index_;
  // Edge indices sorted by triple, for lookup.
  std::vector<EdgeIndex> sorted_;
};

/// Exactly { (v,w;t') in E : e = (u,v;t), 1 <= t' - t <= delta }.
/// Throws Error(kEdgeNotFound) when `e` is not an edge of `g`.
std::vector<TimestampedEdge> time_respecting_successors(
    const TemporalGraph& g, const TimestampedEdge& e, Delta delta);

/// Same graph with every timestamp shifted by `offset`.
TemporalGraph shift_timestamps(const TemporalGraph& g, Timestamp offset);

/// Same graph with node ids renamed through `perm` (old id -> new id).
TemporalGraph rename_nodes(const TemporalGraph& g,
                           std::span<const NodeId> perm);

}  // namespace tiso
