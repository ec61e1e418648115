#include "tiso/temporal_graph.hpp"

#include <algorithm>
#include <numeric>

#include "tiso/errors.hpp"

namespace tiso {

Delta::Delta(std::int64_t value) : value_(value) {
  if (value < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "delta must be >= 1, got " + std::to_string(value));
  }
}

TemporalGraph::TemporalGraph(std::size_t num_nodes,
                             std::vector<TimestampedEdge> edges,
                             std::vector<std::string> names)
    : num_nodes_(num_nodes), edges_(std::move(edges)), names_(std::move(names)) {
  if (!names_.empty() && names_.size() != num_nodes_) {
    throw Error(ErrorCode::kInvalidArgument,
                "name count does not match node count");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.src >= num_nodes_ || e.dst >= num_nodes_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + std::to_string(i) + " has endpoint out of range");
    }
  }

  sorted_.resize(edges_.size());
  std::iota(sorted_.begin(), sorted_.end(), EdgeIndex{0});
  std::sort(sorted_.begin(), sorted_.end(), [&](EdgeIndex a, EdgeIndex b) {
    return std::tie(edges_[a], a) < std::tie(edges_[b], b);
  });
  for (std::size_t i = 1; i < sorted_.size(); ++i) {
    if (edges_[sorted_[i - 1]] == edges_[sorted_[i]]) {
      const auto& e = edges_[sorted_[i]];
      throw Error(ErrorCode::kDuplicateEdge,
                  "(" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                      ";" + std::to_string(e.t) + ") at edge index " +
                      std::to_string(std::max(sorted_[i - 1], sorted_[i])));
    }
  }

  out_offsets_.assign(num_nodes_ + 1, 0);
  for (const auto& e : edges_) ++out_offsets_[e.src + 1];
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(),
                   out_offsets_.begin());
  out_index_.resize(edges_.size());
  std::vector<std::size_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    out_index_[cursor[edges_[i].src]++] = i;
  }
  for (NodeId v = 0; v < num_nodes_; ++v) {
    std::sort(out_index_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v]),
              out_index_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v + 1]),
              [&](EdgeIndex a, EdgeIndex b) {
                return std::tie(edges_[a].t, a) < std::tie(edges_[b].t, b);
              });
  }
}

std::string TemporalGraph::name(NodeId v) const {
  if (!names_.empty()) return names_.at(v);
  return std::to_string(v);
}

std::optional<EdgeIndex> TemporalGraph::find_edge(
    const TimestampedEdge& e) const {
  auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), e,
      [&](EdgeIndex a, const TimestampedEdge& key) { return edges_[a] < key; });
  if (it != sorted_.end() && edges_[*it] == e) return *it;
  return std::nullopt;
}

std::span<const EdgeIndex> TemporalGraph::out_edges(NodeId v) const {
  if (v >= num_nodes_) return {};
  return std::span<const EdgeIndex>(out_index_)
      .subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::vector<EdgeIndex> TemporalGraph::successors(EdgeIndex i,
                                                 Delta delta) const {
  const auto& e = edges_.at(i);
  auto out = out_edges(e.dst);
  // out is sorted by t, so the window [t+1, t+delta] is contiguous.
  auto first = std::partition_point(out.begin(), out.end(), [&](EdgeIndex j) {
    return edges_[j].t < e.t + 1;
  });
  std::vector<EdgeIndex> result;
  for (auto it = first; it != out.end() && edges_[*it].t <= e.t + delta.value();
       ++it) {
    result.push_back(*it);
  }
  return result;
}

std::optional<Timestamp> TemporalGraph::t_min() const {
  if (edges_.empty()) return std::nullopt;
  return std::min_element(edges_.begin(), edges_.end(),
                          [](const auto& a, const auto& b) { return a.t < b.t; })
      ->t;
}

std::vector<TimestampedEdge> time_respecting_successors(
    const TemporalGraph& g, const TimestampedEdge& e, Delta delta) {
  auto idx = g.find_edge(e);
  if (!idx) {
    throw Error(ErrorCode::kEdgeNotFound,
                "(" + g.name(e.src) + "," + g.name(e.dst) + ";" +
                    std::to_string(e.t) + ")");
  }
  std::vector<TimestampedEdge> out;
  for (EdgeIndex j : g.successors(*idx, delta)) out.push_back(g.edge(j));
  return out;
}

TemporalGraph shift_timestamps(const TemporalGraph& g, Timestamp offset) {
  std::vector<TimestampedEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.t += offset;
  return TemporalGraph(g.num_nodes(), std::move(edges),
                       {g.names().begin(), g.names().end()});
}

TemporalGraph rename_nodes(const TemporalGraph& g,
                           std::span<const NodeId> perm) {
  if (perm.size() != g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<bool> seen(perm.size(), false);
  for (NodeId v : perm) {
    if (v >= perm.size() || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    }
    seen[v] = true;
  }
  std::vector<TimestampedEdge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) edges.push_back({perm[e.src], perm[e.dst], e.t});
  std::vector<std::string> names;
  if (!g.names().empty()) {
    names.resize(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) names[perm[v]] = g.names()[v];
  }
  return TemporalGraph(g.num_nodes(), std::move(edges), std::move(names));
}

}  // namespace tiso
