#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tiso/static_graph.hpp"

namespace tiso::detail {

/// Directed graph with opaque node and edge labels, the common input of the
/// exact search. Arcs are kept sorted by endpoint for binary-search lookup.
class LabeledDigraph {
 public:
  struct Arc {
    std::uint32_t node;
    std::uint64_t label;
  };

  explicit LabeledDigraph(std::vector<std::uint64_t> node_labels);

  void add_edge(std::size_t src, std::size_t dst, std::uint64_t label);
  void finalize();

  std::size_t num_nodes() const noexcept { return node_labels_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  std::uint64_t node_label(std::size_t v) const { return node_labels_[v]; }
  std::span<const Arc> out(std::size_t v) const { return out_[v]; }
  std::span<const Arc> in(std::size_t v) const { return in_[v]; }
  std::optional<std::uint64_t> edge_label(std::size_t src, std::size_t dst) const;

 private:
  std::vector<std::uint64_t> node_labels_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::size_t num_edges_ = 0;
};

/// Node labels as node labels, weights as edge labels.
LabeledDigraph from_static(const StaticGraph& g);

enum class SearchStatus { kFound, kNone, kBudgetExceeded };

struct SearchOutcome {
  SearchStatus status = SearchStatus::kNone;
  std::vector<std::size_t> mapping;  // a-node -> b-node when found
  std::size_t expanded = 0;
};

/// Exact isomorphism test: joint color refinement, then backtracking over
/// color cells, most constrained node first. Each tried candidate counts
/// as one expansion.
SearchOutcome find_isomorphism(const LabeledDigraph& a, const LabeledDigraph& b,
                               std::size_t budget);

}  // namespace tiso::detail
