#include "tiso/static_graph.hpp"

#include <algorithm>
#include <string>

#include "tiso/errors.hpp"

namespace tiso {

std::size_t StaticGraph::add_node(NodeRecord record) {
  nodes_.push_back(std::move(record));
  out_.emplace_back();
  in_.emplace_back();
  return nodes_.size() - 1;
}

std::size_t StaticGraph::add_edge(std::size_t src, std::size_t dst,
                                  std::uint64_t weight) {
  if (src >= nodes_.size() || dst >= nodes_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  }
  if (weight == 0) throw Error(ErrorCode::kInvalidArgument, "zero edge weight");
  auto [it, inserted] = index_.try_emplace(key(src, dst), edges_.size());
  if (!inserted) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate edge (" + std::to_string(src) + "," +
                    std::to_string(dst) + ")");
  }
  edges_.push_back({src, dst, weight});
  out_[src].push_back({dst, weight});
  in_[dst].push_back({src, weight});
  return edges_.size() - 1;
}

void StaticGraph::set_weight(std::size_t edge, std::uint64_t weight) {
  if (weight == 0) throw Error(ErrorCode::kInvalidArgument, "zero edge weight");
  auto& e = edges_.at(edge);
  e.weight = weight;
  for (auto& n : out_[e.src]) {
    if (n.node == e.dst) n.weight = weight;
  }
  for (auto& n : in_[e.dst]) {
    if (n.node == e.src) n.weight = weight;
  }
}

std::optional<std::size_t> StaticGraph::find_edge(std::size_t src,
                                                  std::size_t dst) const {
  auto it = index_.find(key(src, dst));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t StaticGraph::count_label(std::uint32_t label) const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(),
      [&](const NodeRecord& n) { return n.label == label; }));
}

std::uint64_t StaticGraph::total_weight() const {
  std::uint64_t total = 0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

}  // namespace tiso
