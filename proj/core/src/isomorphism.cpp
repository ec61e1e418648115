#include "tiso/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "iso_search.hpp"
#include "tiso/errors.hpp"

namespace tiso {
namespace {

using detail::LabeledDigraph;
using detail::SearchStatus;

bool is_bijection(std::span<const std::size_t> map, std::size_t n) {
  if (map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto x : map) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

IsoResult from_outcome(const detail::SearchOutcome& outcome) {
  IsoResult r;
  r.expanded = outcome.expanded;
  switch (outcome.status) {
    case SearchStatus::kFound:
      r.verdict = Verdict::kIsomorphic;
      r.node_map = outcome.mapping;
      break;
    case SearchStatus::kNone:
      r.verdict = Verdict::kNotIsomorphic;
      break;
    case SearchStatus::kBudgetExceeded:
      r.verdict = Verdict::kBudgetExceeded;
      break;
  }
  return r;
}

[[noreturn]] void witness_rejected(const char* which) {
  throw std::logic_error(std::string("internal error: ") + which +
                         " witness failed validation");
}

std::map<std::pair<NodeId, NodeId>, std::vector<Timestamp>> offset_sets(
    const TemporalGraph& g) {
  std::map<std::pair<NodeId, NodeId>, std::vector<Timestamp>> out;
  auto t0 = g.t_min().value_or(0);
  for (const auto& e : g.edges()) out[{e.src, e.dst}].push_back(e.t - t0);
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

// Maps each distinct label value to a dense id; shared by both graphs of a
// comparison so equal values get equal ids.
template <typename Key>
class LabelDictionary {
 public:
  std::uint64_t operator()(const Key& k) {
    auto [it, inserted] = ids_.try_emplace(k, ids_.size());
    return it->second;
  }

 private:
  std::map<Key, std::uint64_t> ids_;
};

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kIsomorphic: return "Isomorphic";
    case Verdict::kNotIsomorphic: return "NotIsomorphic";
    case Verdict::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

IsoResult static_iso(const StaticGraph& g1, const StaticGraph& g2,
                     SearchBudget budget) {
  auto r = from_outcome(detail::find_isomorphism(
      detail::from_static(g1), detail::from_static(g2), budget.max_nodes_expanded));
  if (!r.isomorphic()) return r;
  if (!is_static_isomorphism(g1, g2, *r.node_map)) witness_rejected("static");
  const auto& pi = *r.node_map;
  std::vector<std::size_t> edge_map;
  edge_map.reserve(g1.num_edges());
  for (const auto& e : g1.edges()) edge_map.push_back(*g2.find_edge(pi[e.src], pi[e.dst]));
  r.edge_map = std::move(edge_map);
  return r;
}

IsoResult consistent_event_graph_iso(const TemporalGraph& g1,
                                     const TemporalGraph& g2, Delta delta,
                                     SearchBudget budget) {
  IsoResult none;
  if (g1.num_nodes() != g2.num_nodes() || g1.num_edges() != g2.num_edges()) {
    return none;
  }
  auto aug = static_iso(build_augmented_event_graph(g1, delta),
                        build_augmented_event_graph(g2, delta), budget);
  if (!aug.isomorphic()) return aug;

  const auto n1 = g1.num_nodes();
  const auto n2 = g2.num_nodes();
  const auto& pi = *aug.node_map;
  std::vector<std::size_t> node_map(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(n1));
  std::vector<std::size_t> edge_map;
  edge_map.reserve(g1.num_edges());
  for (std::size_t i = 0; i < g1.num_edges(); ++i) edge_map.push_back(pi[n1 + i] - n2);

  if (!is_consistent_event_graph_isomorphism(g1, g2, delta, node_map, edge_map)) {
    witness_rejected("consistent event graph");
  }
  IsoResult r;
  r.verdict = Verdict::kIsomorphic;
  r.node_map = std::move(node_map);
  r.edge_map = std::move(edge_map);
  r.expanded = aug.expanded;
  return r;
}

IsoResult time_aggregated_iso(const TemporalGraph& g1, const TemporalGraph& g2,
                              SearchBudget budget) {
  auto r = static_iso(build_time_aggregated(g1), build_time_aggregated(g2), budget);
  if (r.isomorphic() && !is_time_aggregated_isomorphism(g1, g2, *r.node_map)) {
    witness_rejected("time-aggregated");
  }
  return r;
}

IsoResult time_concatenated_iso(const TemporalGraph& g1,
                                const TemporalGraph& g2, SearchBudget budget) {
  auto c1 = build_time_concatenated(g1);
  auto c2 = build_time_concatenated(g2);

  LabelDictionary<std::vector<Timestamp>> labels;
  auto to_labeled = [&](const TimeConcatenatedGraph& c) {
    LabeledDigraph out(std::vector<std::uint64_t>(c.graph.num_nodes(), 0));
    for (const auto& [pair, ts] : c.offsets) out.add_edge(pair.first, pair.second, labels(ts));
    out.finalize();
    return out;
  };
  auto l1 = to_labeled(c1);
  auto l2 = to_labeled(c2);
  auto r = from_outcome(detail::find_isomorphism(l1, l2, budget.max_nodes_expanded));
  if (!r.isomorphic()) return r;
  if (!is_time_concatenated_isomorphism(g1, g2, *r.node_map)) {
    witness_rejected("time-concatenated");
  }
  r.edge_map = shifted_edge_map(g1, g2, *r.node_map);
  if (!r.edge_map) witness_rejected("time-concatenated edge");
  return r;
}

IsoResult timewise_iso(const SnapshotSequence& s1, const SnapshotSequence& s2,
                       SearchBudget budget) {
  IsoResult none;
  const auto n = s1.snapshots.size();
  if (n != s2.snapshots.size() || s1.num_nodes != s2.num_nodes) return none;
  for (std::size_t i = 0; i < n; ++i) {
    if (s1.snapshots[i].t - s1.snapshots[0].t != s2.snapshots[i].t - s2.snapshots[0].t ||
        s1.snapshots[i].edges.size() != s2.snapshots[i].edges.size()) {
      return none;
    }
  }

  // Union graph: each static edge is labelled with the snapshots it is in.
  LabelDictionary<std::vector<std::size_t>> labels;
  auto union_graph = [&](const SnapshotSequence& s) {
    std::map<std::pair<NodeId, NodeId>, std::vector<std::size_t>> present;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& pair : s.snapshots[i].edges) present[pair].push_back(i);
    }
    LabeledDigraph out(std::vector<std::uint64_t>(s.num_nodes, 0));
    for (const auto& [pair, idx] : present) out.add_edge(pair.first, pair.second, labels(idx));
    out.finalize();
    return out;
  };
  auto r = from_outcome(detail::find_isomorphism(union_graph(s1), union_graph(s2),
                                                 budget.max_nodes_expanded));
  if (!r.isomorphic()) return r;

  const auto& pi = *r.node_map;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<NodeId, NodeId>> mapped;
    for (const auto& [u, v] : s1.snapshots[i].edges) {
      mapped.emplace_back(static_cast<NodeId>(pi[u]), static_cast<NodeId>(pi[v]));
    }
    std::sort(mapped.begin(), mapped.end());
    auto target = s2.snapshots[i].edges;
    std::sort(target.begin(), target.end());
    if (mapped != target) witness_rejected("timewise");
  }
  auto f2 = from_snapshots(s2);
  std::vector<std::size_t> edge_map;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [u, v] : s1.snapshots[i].edges) {
      edge_map.push_back(*f2.find_edge({static_cast<NodeId>(pi[u]),
                                        static_cast<NodeId>(pi[v]),
                                        s2.snapshots[i].t}));
    }
  }
  r.edge_map = std::move(edge_map);
  return r;
}

bool is_static_isomorphism(const StaticGraph& g1, const StaticGraph& g2,
                           std::span<const std::size_t> node_map) {
  if (g1.num_nodes() != g2.num_nodes() || g1.num_edges() != g2.num_edges()) return false;
  if (!is_bijection(node_map, g1.num_nodes())) return false;
  for (std::size_t v = 0; v < g1.num_nodes(); ++v) {
    if (g1.node(v).label != g2.node(node_map[v]).label) return false;
  }
  for (const auto& e : g1.edges()) {
    auto f = g2.find_edge(node_map[e.src], node_map[e.dst]);
    if (!f || g2.edges()[*f].weight != e.weight) return false;
  }
  return true;
}

bool is_consistent_event_graph_isomorphism(const TemporalGraph& g1,
                                           const TemporalGraph& g2, Delta delta,
                                           std::span<const std::size_t> node_map,
                                           std::span<const std::size_t> edge_map) {
  if (g1.num_nodes() != g2.num_nodes() || g1.num_edges() != g2.num_edges()) return false;
  if (!is_bijection(node_map, g1.num_nodes())) return false;
  if (!is_bijection(edge_map, g1.num_edges())) return false;
  // (i) node consistency
  for (EdgeIndex i = 0; i < g1.num_edges(); ++i) {
    const auto& e = g1.edge(i);
    const auto& f = g2.edge(edge_map[i]);
    if (f.src != node_map[e.src] || f.dst != node_map[e.dst]) return false;
  }
  // (ii) event graph isomorphism
  std::size_t arcs1 = 0, arcs2 = 0;
  for (EdgeIndex i = 0; i < g1.num_edges(); ++i) {
    auto image = g2.successors(edge_map[i], delta);
    for (EdgeIndex j : g1.successors(i, delta)) {
      ++arcs1;
      if (std::find(image.begin(), image.end(), edge_map[j]) == image.end()) return false;
    }
  }
  for (EdgeIndex i = 0; i < g2.num_edges(); ++i) arcs2 += g2.successors(i, delta).size();
  return arcs1 == arcs2;
}

bool is_time_aggregated_isomorphism(const TemporalGraph& g1,
                                    const TemporalGraph& g2,
                                    std::span<const std::size_t> node_map) {
  if (g1.num_nodes() != g2.num_nodes()) return false;
  if (!is_bijection(node_map, g1.num_nodes())) return false;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> c1, c2;
  for (const auto& e : g1.edges()) ++c1[{node_map[e.src], node_map[e.dst]}];
  for (const auto& e : g2.edges()) ++c2[{e.src, e.dst}];
  return c1 == c2;
}

bool is_time_concatenated_isomorphism(const TemporalGraph& g1,
                                      const TemporalGraph& g2,
                                      std::span<const std::size_t> node_map) {
  if (g1.num_nodes() != g2.num_nodes()) return false;
  if (!is_bijection(node_map, g1.num_nodes())) return false;
  std::map<std::pair<NodeId, NodeId>, std::vector<Timestamp>> mapped;
  for (const auto& [pair, ts] : offset_sets(g1)) {
    mapped[{static_cast<NodeId>(node_map[pair.first]),
            static_cast<NodeId>(node_map[pair.second])}] = ts;
  }
  return mapped == offset_sets(g2);
}

std::optional<std::vector<std::size_t>> shifted_edge_map(
    const TemporalGraph& g1, const TemporalGraph& g2,
    std::span<const std::size_t> node_map) {
  if (g1.num_edges() != g2.num_edges()) return std::nullopt;
  if (g1.empty()) return std::vector<std::size_t>{};
  if (node_map.size() != g1.num_nodes()) return std::nullopt;
  auto shift = *g2.t_min() - *g1.t_min();
  std::vector<std::size_t> out;
  out.reserve(g1.num_edges());
  for (const auto& e : g1.edges()) {
    if (node_map[e.src] >= g2.num_nodes() || node_map[e.dst] >= g2.num_nodes()) {
      return std::nullopt;
    }
    auto f = g2.find_edge({static_cast<NodeId>(node_map[e.src]),
                           static_cast<NodeId>(node_map[e.dst]), e.t + shift});
    if (!f) return std::nullopt;
    out.push_back(*f);
  }
  return out;
}

}  // namespace tiso
