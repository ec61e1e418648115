#include "tiso/paths.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "tiso/errors.hpp"

namespace tiso {
namespace {

std::vector<EdgeIndex> start_order(const TemporalGraph& g) {
  std::vector<EdgeIndex> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    return std::tie(g.edge(a).t, a) < std::tie(g.edge(b).t, b);
  });
  return order;
}

}  // namespace

void for_each_time_respecting_path(
    const TemporalGraph& g, Delta delta, PathLimits limits,
    const std::function<void(std::span<const EdgeIndex>)>& visit) {
  std::size_t produced = 0;
  auto emit = [&](std::span<const EdgeIndex> p) {
    if (limits.max_paths && produced >= *limits.max_paths) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "more than " + std::to_string(*limits.max_paths) + " paths");
    }
    ++produced;
    visit(p);
  };

  // Successor lists are reused across all DFS branches.
  std::vector<std::vector<EdgeIndex>> succ(g.num_edges());
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) succ[i] = g.successors(i, delta);

  std::vector<EdgeIndex> stack_path;
  std::vector<std::size_t> cursor;
  for (EdgeIndex start : start_order(g)) {
    stack_path.assign(1, start);
    cursor.assign(1, 0);
    emit(stack_path);
    while (!stack_path.empty()) {
      auto& next = cursor.back();
      const auto& options = succ[stack_path.back()];
      bool can_extend =
          !limits.max_len || stack_path.size() < *limits.max_len;
      if (can_extend && next < options.size()) {
        stack_path.push_back(options[next++]);
        cursor.push_back(0);
        emit(stack_path);
      } else {
        stack_path.pop_back();
        cursor.pop_back();
      }
    }
  }
}

std::vector<TemporalPath> enumerate_time_respecting_paths(
    const TemporalGraph& g, Delta delta, PathLimits limits) {
  std::vector<TemporalPath> out;
  for_each_time_respecting_path(g, delta, limits,
                                [&](std::span<const EdgeIndex> p) {
                                  TemporalPath path;
                                  path.nodes.push_back(g.edge(p[0]).src);
                                  for (EdgeIndex i : p) {
                                    path.edges.push_back(g.edge(i));
                                    path.nodes.push_back(g.edge(i).dst);
                                  }
                                  out.push_back(std::move(path));
                                });
  return out;
}

std::vector<NodeId> temporal_reachability(const TemporalGraph& g, Delta delta,
                                          NodeId source) {
  if (source >= g.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument, "source out of range");
  }
  std::vector<bool> node_seen(g.num_nodes(), false);
  std::vector<bool> edge_seen(g.num_edges(), false);
  node_seen[source] = true;
  std::queue<EdgeIndex> frontier;
  for (EdgeIndex i : g.out_edges(source)) {
    edge_seen[i] = true;
    frontier.push(i);
  }
  while (!frontier.empty()) {
    auto i = frontier.front();
    frontier.pop();
    node_seen[g.edge(i).dst] = true;
    for (EdgeIndex j : g.successors(i, delta)) {
      if (!edge_seen[j]) {
        edge_seen[j] = true;
        frontier.push(j);
      }
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (node_seen[v]) out.push_back(v);
  }
  return out;
}

bool is_time_respecting(const TemporalPath& p, Delta delta) {
  if (p.edges.empty() || p.nodes.size() != p.edges.size() + 1) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i].src != p.nodes[i] || p.edges[i].dst != p.nodes[i + 1]) {
      return false;
    }
    if (i > 0) {
      auto gap = p.edges[i].t - p.edges[i - 1].t;
      if (gap < 1 || gap > delta.value()) return false;
    }
  }
  return true;
}

}  // namespace tiso
