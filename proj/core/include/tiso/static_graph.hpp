#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "tiso/temporal_graph.hpp"

namespace tiso {

/// Node that stands for a node of the source temporal graph.
struct OriginalNode {
  NodeId node = 0;
  friend bool operator==(const OriginalNode&, const OriginalNode&) = default;
};

/// Node that stands for a timestamped edge. `index` is the edge's position
/// in the source temporal graph.
struct EventNode {
  TimestampedEdge edge;
  EdgeIndex index = 0;
  friend bool operator==(const EventNode&, const EventNode&) = default;
};

using Provenance = std::variant<OriginalNode, EventNode>;

inline constexpr std::uint32_t kOriginalLabel = 0;
inline constexpr std::uint32_t kEventLabel = 1;

struct NodeRecord {
  std::uint32_t label = 0;
  Provenance provenance;
  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct StaticEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::uint64_t weight = 1;
  friend bool operator==(const StaticEdge&, const StaticEdge&) = default;
};

struct Neighbor {
  std::size_t node;
  std::uint64_t weight;
};

/// Directed graph with integer node labels and positive edge weights.
/// Holds every static representation built by this library. At most one
/// edge per ordered (src, dst) pair.
class StaticGraph {
 public:
  std::size_t add_node(NodeRecord record);
  /// Throws Error(kInvalidArgument) on a duplicate pair, a zero weight or
  /// an endpoint out of range.
  std::size_t add_edge(std::size_t src, std::size_t dst, std::uint64_t weight = 1);
  void set_weight(std::size_t edge, std::uint64_t weight);

  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const NodeRecord> nodes() const noexcept { return nodes_; }
  std::span<const StaticEdge> edges() const noexcept { return edges_; }
  const NodeRecord& node(std::size_t i) const { return nodes_.at(i); }

  std::span<const Neighbor> out_neighbors(std::size_t v) const { return out_.at(v); }
  std::span<const Neighbor> in_neighbors(std::size_t v) const { return in_.at(v); }

  std::optional<std::size_t> find_edge(std::size_t src, std::size_t dst) const;
  bool has_edge(std::size_t src, std::size_t dst) const {
    return find_edge(src, dst).has_value();
  }

  std::size_t count_label(std::uint32_t label) const;
  std::uint64_t total_weight() const;

  friend bool operator==(const StaticGraph& a, const StaticGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(std::size_t src, std::size_t dst) {
    return (static_cast<std::uint64_t>(src) << 32) | static_cast<std::uint64_t>(dst);
  }

  std::vector<NodeRecord> nodes_;
  std::vector<StaticEdge> edges_;
  std::vector<std::vector<Neighbor>> out_;
  std::vector<std::vector<Neighbor>> in_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace tiso
