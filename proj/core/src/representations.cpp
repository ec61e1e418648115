#include "tiso/representations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tiso/errors.hpp"

namespace tiso {
namespace {

const EventNode& event_of(const StaticGraph& g, std::size_t v) {
  const auto* ev = std::get_if<EventNode>(&g.node(v).provenance);
  if (ev == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "node " + std::to_string(v) + " is not an event node");
  }
  return *ev;
}

void add_original_nodes(StaticGraph& out, std::size_t n) {
  for (NodeId v = 0; v < n; ++v) {
    out.add_node({kOriginalLabel, OriginalNode{v}});
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string serialize_events(const StaticGraph& c) {
  using Triple = std::tuple<NodeId, NodeId, Timestamp>;
  auto triple = [&](std::size_t v) {
    const auto& e = event_of(c, v).edge;
    return Triple{e.src, e.dst, e.t};
  };
  std::vector<Triple> nodes;
  for (std::size_t v = 0; v < c.num_nodes(); ++v) nodes.push_back(triple(v));
  std::vector<std::pair<Triple, Triple>> arcs;
  for (const auto& e : c.edges()) arcs.emplace_back(triple(e.src), triple(e.dst));
  std::sort(nodes.begin(), nodes.end());
  std::sort(arcs.begin(), arcs.end());

  std::ostringstream os;
  auto put = [&](const Triple& t) {
    os << std::get<0>(t) << ',' << std::get<1>(t) << ',' << std::get<2>(t);
  };
  os << 'N';
  for (const auto& t : nodes) {
    put(t);
    os << ';';
  }
  os << 'A';
  for (const auto& [a, b] : arcs) {
    put(a);
    os << '>';
    put(b);
    os << ';';
  }
  return os.str();
}

Timestamp min_timestamp(const StaticGraph& c) {
  Timestamp best = std::numeric_limits<Timestamp>::max();
  for (std::size_t v = 0; v < c.num_nodes(); ++v) {
    best = std::min(best, event_of(c, v).edge.t);
  }
  return best;
}

}  // namespace

StaticGraph build_event_graph(const TemporalGraph& g, Delta delta) {
  StaticGraph out;
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    out.add_node({kEventLabel, EventNode{g.edge(i), i}});
  }
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    for (EdgeIndex j : g.successors(i, delta)) out.add_edge(i, j);
  }
  return out;
}

StaticGraph build_augmented_event_graph(const TemporalGraph& g, Delta delta) {
  StaticGraph out;
  const auto n = g.num_nodes();
  add_original_nodes(out, n);
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    out.add_node({kEventLabel, EventNode{g.edge(i), i}});
  }
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    for (EdgeIndex j : g.successors(i, delta)) out.add_edge(n + i, n + j);
  }
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    out.add_edge(g.edge(i).src, n + i);
    out.add_edge(n + i, g.edge(i).dst);
  }
  return out;
}

std::vector<StaticGraph> connected_components(const StaticGraph& event_graph) {
  const auto n = event_graph.num_nodes();
  DisjointSets sets(n);
  for (const auto& e : event_graph.edges()) sets.unite(e.src, e.dst);

  std::vector<std::size_t> component_of(n);
  std::vector<std::size_t> local(n);
  std::vector<std::size_t> root_slot(n, SIZE_MAX);
  std::vector<StaticGraph> out;
  for (std::size_t v = 0; v < n; ++v) {
    auto r = sets.find(v);
    if (root_slot[r] == SIZE_MAX) {
      root_slot[r] = out.size();
      out.emplace_back();
    }
    component_of[v] = root_slot[r];
    local[v] = out[component_of[v]].add_node(event_graph.node(v));
  }
  for (const auto& e : event_graph.edges()) {
    out[component_of[e.src]].add_edge(local[e.src], local[e.dst], e.weight);
  }
  return out;
}

StaticGraph tau_relabel(const StaticGraph& component) {
  std::map<std::pair<NodeId, NodeId>, std::vector<Timestamp>> times;
  for (std::size_t v = 0; v < component.num_nodes(); ++v) {
    const auto& e = event_of(component, v).edge;
    times[{e.src, e.dst}].push_back(e.t);
  }
  for (auto& [pair, ts] : times) std::sort(ts.begin(), ts.end());

  StaticGraph out;
  for (std::size_t v = 0; v < component.num_nodes(); ++v) {
    auto ev = event_of(component, v);
    const auto& ts = times[{ev.edge.src, ev.edge.dst}];
    auto rank = std::lower_bound(ts.begin(), ts.end(), ev.edge.t) - ts.begin() + 1;
    ev.edge.t = rank;
    out.add_node({component.node(v).label, ev});
  }
  for (const auto& e : component.edges()) out.add_edge(e.src, e.dst, e.weight);
  return out;
}

std::string canonical_key(const StaticGraph& component) {
  return serialize_events(tau_relabel(component));
}

CompressedEventGraph compress_event_graph(const StaticGraph& event_graph) {
  auto components = connected_components(event_graph);

  struct Member {
    std::size_t component;
    Timestamp min_t;
    std::string raw;
  };
  std::map<std::string, std::vector<Member>> by_key;
  for (std::size_t c = 0; c < components.size(); ++c) {
    by_key[canonical_key(components[c])].push_back(
        {c, min_timestamp(components[c]), serialize_events(components[c])});
  }

  CompressedEventGraph out;
  for (auto& [key, members] : by_key) {
    const auto& rep = *std::min_element(
        members.begin(), members.end(), [](const Member& a, const Member& b) {
          return std::tie(a.min_t, a.raw) < std::tie(b.min_t, b.raw);
        });
    out.classes.push_back({components[rep.component], members.size(), key});
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const ComponentClass& a, const ComponentClass& b) {
              auto ta = min_timestamp(a.representative);
              auto tb = min_timestamp(b.representative);
              return std::tie(ta, a.canonical_key) < std::tie(tb, b.canonical_key);
            });

  for (std::size_t k = 0; k < out.classes.size(); ++k) {
    const auto& cls = out.classes[k];
    const auto base = out.graph.num_nodes();
    for (const auto& node : cls.representative.nodes()) {
      out.graph.add_node(node);
      out.node_class.push_back(k);
    }
    for (const auto& e : cls.representative.edges()) {
      out.graph.add_edge(base + e.src, base + e.dst, cls.cardinality);
    }
  }
  return out;
}

StaticGraph build_compressed_augmented_event_graph(const TemporalGraph& g,
                                                   Delta delta,
                                                   CompressionOptions options) {
  auto compressed = compress_event_graph(build_event_graph(g, delta));
  const auto n = g.num_nodes();

  StaticGraph out;
  add_original_nodes(out, n);
  for (const auto& node : compressed.graph.nodes()) out.add_node(node);
  for (const auto& e : compressed.graph.edges()) {
    out.add_edge(n + e.src, n + e.dst, e.weight);
  }
  for (std::size_t v = 0; v < compressed.graph.num_nodes(); ++v) {
    const auto& edge = event_of(compressed.graph, v).edge;
    std::uint64_t w = options.weighted_incidence
                          ? compressed.classes[compressed.node_class[v]].cardinality
                          : 1;
    out.add_edge(edge.src, n + v, w);
    out.add_edge(n + v, edge.dst, w);
  }
  return out;
}

StaticGraph build_time_aggregated(const TemporalGraph& g) {
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> counts;
  for (const auto& e : g.edges()) ++counts[{e.src, e.dst}];
  StaticGraph out;
  add_original_nodes(out, g.num_nodes());
  for (const auto& [pair, c] : counts) out.add_edge(pair.first, pair.second, c);
  return out;
}

TimeConcatenatedGraph build_time_concatenated(const TemporalGraph& g) {
  auto t_min = g.t_min();
  if (!t_min) {
    throw Error(ErrorCode::kEmptyGraph, "time-concatenated graph needs an edge");
  }
  TimeConcatenatedGraph out;
  for (const auto& e : g.edges()) {
    out.offsets[{e.src, e.dst}].push_back(e.t - *t_min);
  }
  add_original_nodes(out.graph, g.num_nodes());
  for (auto& [pair, ts] : out.offsets) {
    std::sort(ts.begin(), ts.end());
    out.graph.add_edge(pair.first, pair.second, ts.size());
  }
  return out;
}

SnapshotSequence to_snapshots(const TemporalGraph& g) {
  if (g.empty()) throw Error(ErrorCode::kEmptyGraph, "no snapshots in an edgeless graph");
  std::map<Timestamp, std::vector<std::pair<NodeId, NodeId>>> by_time;
  for (const auto& e : g.edges()) by_time[e.t].emplace_back(e.src, e.dst);
  SnapshotSequence out;
  out.num_nodes = g.num_nodes();
  for (auto& [t, edges] : by_time) {
    std::sort(edges.begin(), edges.end());
    out.snapshots.push_back({t, std::move(edges)});
  }
  return out;
}

TemporalGraph from_snapshots(const SnapshotSequence& s) {
  std::vector<TimestampedEdge> edges;
  for (std::size_t i = 0; i < s.snapshots.size(); ++i) {
    const auto& snap = s.snapshots[i];
    if (i > 0 && snap.t <= s.snapshots[i - 1].t) {
      throw Error(ErrorCode::kInvalidArgument, "snapshot times must increase");
    }
    if (snap.edges.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty snapshot");
    }
    for (const auto& [u, v] : snap.edges) edges.push_back({u, v, snap.t});
  }
  return TemporalGraph(s.num_nodes, std::move(edges));
}

}  // namespace tiso
