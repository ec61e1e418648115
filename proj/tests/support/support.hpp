#pragma once

// Test fixtures, random instance generators and brute-force oracles. The
// oracles work from the raw definitions and share no code with the library
// beyond the graph containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "tiso/parse.hpp"
#include "tiso/representations.hpp"
#include "tiso/static_graph.hpp"
#include "tiso/temporal_graph.hpp"

namespace tiso::test {

inline TemporalGraph csv(std::string_view text) {
  return parse_temporal_graph(text, InputFormat::kCsv);
}

// Fixtures -------------------------------------------------------------------

inline TemporalGraph repeated_motif() {
  return csv("a,b,1\na,b,5\nb,d,2\nb,d,6\nc,d,3\nc,d,7\nd,e,4\nd,e,8\n");
}
inline TemporalGraph g1() { return csv("a,b,1\nb,d,2\nc,d,3\nd,e,4\n"); }
inline TemporalGraph g2() { return csv("a,b,2\nb,d,3\nc,d,4\nd,e,5\n"); }
inline TemporalGraph g3() { return csv("a,b,1\nb,d,3\nc,d,2\nd,e,4\n"); }
inline TemporalGraph g4() { return csv("a,b,1\nb,d,2\nc,d,3\nd,e,1\n"); }
inline TemporalGraph g5() { return csv("a,b,1\nb,d,2\nc,d,3\nd,e,4\nd,e,5\n"); }

// Counterexample pair for compression at delta = 2. Component type A at base
// b is ab(b+1), bc(b+3), bc(b+4), cd(b+5): the bc edge adjacent to ab is the
// earlier one. Type B is ab(b+1), bc(b+2), bc(b+1), cd(b+3): the order is
// flipped. Both types have the same uncompressed event-graph shape.
inline std::string component_a(int b) {
  auto t = [b](int d) { return std::to_string(b + d); };
  return "a,b," + t(1) + "\nb,c," + t(3) + "\nb,c," + t(4) + "\nc,d," + t(5) + "\n";
}
inline std::string component_b(int b) {
  auto t = [b](int d) { return std::to_string(b + d); };
  return "a,b," + t(1) + "\nb,c," + t(2) + "\nb,c," + t(1) + "\nc,d," + t(3) + "\n";
}
inline TemporalGraph counterexample_two_two() {
  return csv(component_a(0) + component_a(10) + component_b(20) + component_b(30));
}
inline TemporalGraph counterexample_one_three() {
  return csv(component_a(0) + component_b(10) + component_b(20) + component_b(30));
}

// Random instances ------------------------------------------------------------

/// Random temporal graph with 1..max_nodes nodes and 1..max_edges distinct
/// edges (self-loops allowed) with timestamps in [1, max_t].
inline TemporalGraph random_temporal_graph(std::mt19937_64& rng, std::size_t max_nodes,
                                           std::size_t max_edges, Timestamp max_t) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = pick(1, max_nodes);
  const std::size_t capacity = n * n * static_cast<std::size_t>(max_t);
  const std::size_t m = std::min(pick(1, max_edges), capacity);
  std::set<TimestampedEdge> edges;
  while (edges.size() < m) {
    edges.insert({static_cast<NodeId>(pick(0, n - 1)), static_cast<NodeId>(pick(0, n - 1)),
                  static_cast<Timestamp>(pick(1, static_cast<std::size_t>(max_t)))});
  }
  std::vector<TimestampedEdge> list(edges.begin(), edges.end());
  std::shuffle(list.begin(), list.end(), rng);
  return TemporalGraph(n, std::move(list));
}

inline std::vector<NodeId> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<NodeId> p(n);
  std::iota(p.begin(), p.end(), NodeId{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Node-renamed, time-shifted copy with shuffled edge order.
inline TemporalGraph renamed_clone(std::mt19937_64& rng, const TemporalGraph& g) {
  auto perm = random_permutation(rng, g.num_nodes());
  auto shifted = shift_timestamps(rename_nodes(g, perm),
                                  std::uniform_int_distribution<Timestamp>(-5, 20)(rng));
  std::vector<TimestampedEdge> edges(shifted.edges().begin(), shifted.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  return TemporalGraph(g.num_nodes(), std::move(edges));
}

/// Copy whose timestamps pass through a random strictly increasing map.
/// Keeps the order of events but may change which gaps fit the window.
inline TemporalGraph restamped_clone(std::mt19937_64& rng, const TemporalGraph& g) {
  std::set<Timestamp> times;
  for (const auto& e : g.edges()) times.insert(e.t);
  std::map<Timestamp, Timestamp> warp;
  Timestamp next = std::uniform_int_distribution<Timestamp>(0, 3)(rng);
  for (auto t : times) {
    next += std::uniform_int_distribution<Timestamp>(1, 3)(rng);
    warp[t] = next;
  }
  std::vector<TimestampedEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.src, e.dst, warp[e.t]});
  auto perm = random_permutation(rng, g.num_nodes());
  return rename_nodes(TemporalGraph(g.num_nodes(), std::move(edges)), perm);
}

/// Copy with one timestamp moved to a free slot.
inline TemporalGraph perturbed_clone(std::mt19937_64& rng, const TemporalGraph& g,
                                     Timestamp max_t) {
  std::vector<TimestampedEdge> edges(g.edges().begin(), g.edges().end());
  const auto i = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
  for (int attempt = 0; attempt < 50; ++attempt) {
    auto e = edges[i];
    e.t = std::uniform_int_distribution<Timestamp>(1, max_t)(rng);
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
      edges[i] = e;
      break;
    }
  }
  auto perm = random_permutation(rng, g.num_nodes());
  return rename_nodes(TemporalGraph(g.num_nodes(), std::move(edges)), perm);
}

struct IsoCase {
  TemporalGraph a;
  TemporalGraph b;
  Timestamp delta;
};

/// Mixed corpus: renamed/shifted clones, order-preserving restamps, single
/// timestamp perturbations and independent pairs with equal sizes.
inline std::vector<IsoCase> iso_corpus(std::uint64_t seed, std::size_t count,
                                       std::size_t max_nodes = 5, std::size_t max_edges = 6,
                                       Timestamp max_t = 10) {
  std::mt19937_64 rng(seed);
  std::vector<IsoCase> out;
  while (out.size() < count) {
    const Timestamp delta = 1 + static_cast<Timestamp>(out.size() % 3);
    auto a = random_temporal_graph(rng, max_nodes, max_edges, max_t);
    switch (out.size() % 4) {
      case 0: out.push_back({a, renamed_clone(rng, a), delta}); break;
      case 1: out.push_back({a, restamped_clone(rng, a), delta}); break;
      case 2: out.push_back({a, perturbed_clone(rng, a, max_t), delta}); break;
      default: {
        TemporalGraph b;
        do {
          b = random_temporal_graph(rng, max_nodes, max_edges, max_t);
        } while (b.num_nodes() != a.num_nodes() || b.num_edges() != a.num_edges());
        out.push_back({a, b, delta});
      }
    }
  }
  return out;
}

// Path oracles ----------------------------------------------------------------

inline bool follows(const TemporalGraph& g, std::size_t i, std::size_t j, Timestamp delta) {
  const auto& e = g.edges()[i];
  const auto& f = g.edges()[j];
  const auto gap = f.t - e.t;
  return e.dst == f.src && gap >= 1 && gap <= delta;
}

/// Every time-respecting path as a sequence of edge indices, found by
/// scanning all edges at every step.
inline std::vector<std::vector<std::size_t>> all_paths(const TemporalGraph& g, Timestamp delta) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto extend = [&](auto&& self) -> void {
    out.push_back(cur);
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      if (follows(g, cur.back(), j, delta)) {
        cur.push_back(j);
        self(self);
        cur.pop_back();
      }
    }
  };
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    cur = {i};
    extend(extend);
  }
  return out;
}

inline std::map<std::size_t, std::size_t> path_length_histogram(const TemporalGraph& g,
                                                                Timestamp delta) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& p : all_paths(g, delta)) ++h[p.size()];
  return h;
}

inline std::set<std::pair<std::size_t, std::size_t>> event_arcs(const TemporalGraph& g,
                                                                Timestamp delta) {
  std::set<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      if (follows(g, i, j, delta)) arcs.insert({i, j});
    }
  }
  return arcs;
}

inline std::set<NodeId> reachable(const TemporalGraph& g, Timestamp delta, NodeId source) {
  std::set<NodeId> r{source};
  for (const auto& p : all_paths(g, delta)) {
    if (g.edges()[p.front()].src == source) r.insert(g.edges()[p.back()].dst);
  }
  return r;
}

// Component classes -----------------------------------------------------------

/// Weak components of the event graph as sorted lists of edge indices.
inline std::vector<std::vector<std::size_t>> event_components(const TemporalGraph& g,
                                                              Timestamp delta) {
  const auto arcs = event_arcs(g, delta);
  std::vector<int> comp(g.num_edges(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.num_edges(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (const auto& [i, j] : arcs) {
        for (auto [from, to] : {std::pair{i, j}, std::pair{j, i}}) {
          if (from == x && comp[to] < 0) {
            comp[to] = comp[s];
            stack.push_back(to);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

/// Rank-relabelled node and arc sets of one component.
using RankedEdge = std::tuple<NodeId, NodeId, std::size_t>;
using ComponentShape = std::pair<std::set<RankedEdge>, std::set<std::pair<RankedEdge, RankedEdge>>>;

inline ComponentShape component_shape(const TemporalGraph& g, Timestamp delta,
                                      const std::vector<std::size_t>& members) {
  std::map<std::pair<NodeId, NodeId>, std::set<Timestamp>> times;
  for (auto i : members) times[{g.edges()[i].src, g.edges()[i].dst}].insert(g.edges()[i].t);
  auto ranked = [&](std::size_t i) {
    const auto& e = g.edges()[i];
    const auto& ts = times[{e.src, e.dst}];
    return RankedEdge{e.src, e.dst,
                      static_cast<std::size_t>(std::distance(ts.begin(), ts.find(e.t))) + 1};
  };
  ComponentShape shape;
  for (auto i : members) {
    shape.first.insert(ranked(i));
    for (auto j : members) {
      if (follows(g, i, j, delta)) shape.second.insert({ranked(i), ranked(j)});
    }
  }
  return shape;
}

/// Sorted class cardinalities of the rank-equivalence partition.
inline std::vector<std::size_t> class_sizes(const TemporalGraph& g, Timestamp delta) {
  std::map<ComponentShape, std::size_t> counts;
  for (const auto& c : event_components(g, delta)) ++counts[component_shape(g, delta, c)];
  std::vector<std::size_t> out;
  for (const auto& [shape, n] : counts) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

// Aggregations ----------------------------------------------------------------

using PairCounts = std::map<std::pair<NodeId, NodeId>, std::size_t>;
using PairOffsets = std::map<std::pair<NodeId, NodeId>, std::set<Timestamp>>;

inline PairCounts pair_counts(const TemporalGraph& g) {
  PairCounts c;
  for (const auto& e : g.edges()) ++c[{e.src, e.dst}];
  return c;
}

inline PairOffsets pair_offsets(const TemporalGraph& g) {
  PairOffsets o;
  Timestamp lo = g.edges().front().t;
  for (const auto& e : g.edges()) lo = std::min(lo, e.t);
  for (const auto& e : g.edges()) o[{e.src, e.dst}].insert(e.t - lo);
  return o;
}

// Brute-force isomorphism -----------------------------------------------------

/// Tries every node permutation; `accept(perm)` decides.
template <typename Accept>
bool any_permutation(std::size_t n, Accept accept) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (accept(perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

template <typename Map>
Map remap(const Map& m, const std::vector<std::size_t>& perm) {
  Map out;
  for (const auto& [pair, value] : m) {
    out[{static_cast<NodeId>(perm[pair.first]), static_cast<NodeId>(perm[pair.second])}] = value;
  }
  return out;
}

inline bool brute_aggregated_iso(const TemporalGraph& a, const TemporalGraph& b) {
  if (a.num_nodes() != b.num_nodes()) return false;
  const auto ca = pair_counts(a), cb = pair_counts(b);
  return any_permutation(a.num_nodes(), [&](const auto& p) { return remap(ca, p) == cb; });
}

inline bool brute_concatenated_iso(const TemporalGraph& a, const TemporalGraph& b) {
  if (a.num_nodes() != b.num_nodes()) return false;
  const auto oa = pair_offsets(a), ob = pair_offsets(b);
  return any_permutation(a.num_nodes(), [&](const auto& p) { return remap(oa, p) == ob; });
}

/// Static isomorphism respecting node labels and edge weights.
inline bool brute_static_iso(const StaticGraph& a, const StaticGraph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> eb;
  for (const auto& e : b.edges()) eb[{e.src, e.dst}] = e.weight;
  return any_permutation(a.num_nodes(), [&](const auto& p) {
    for (std::size_t v = 0; v < a.num_nodes(); ++v) {
      if (a.node(v).label != b.node(p[v]).label) return false;
    }
    for (const auto& e : a.edges()) {
      auto it = eb.find({p[e.src], p[e.dst]});
      if (it == eb.end() || it->second != e.weight) return false;
    }
    return true;
  });
}

/// Checks the consistent event graph isomorphism conditions from scratch:
/// both maps are bijections, every edge maps onto the image of its endpoints,
/// and event arcs are preserved in both directions.
inline bool check_consistent_witness(const TemporalGraph& a, const TemporalGraph& b,
                                     Timestamp delta, const std::vector<std::size_t>& nodes,
                                     const std::vector<std::size_t>& edges) {
  if (nodes.size() != a.num_nodes() || edges.size() != a.num_edges()) return false;
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
  if (std::set<std::size_t>(nodes.begin(), nodes.end()).size() != nodes.size()) return false;
  if (std::set<std::size_t>(edges.begin(), edges.end()).size() != edges.size()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= b.num_edges()) return false;
    const auto& e = a.edges()[i];
    const auto& f = b.edges()[edges[i]];
    if (nodes[e.src] != f.src || nodes[e.dst] != f.dst) return false;
  }
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    for (std::size_t j = 0; j < a.num_edges(); ++j) {
      if (follows(a, i, j, delta) != follows(b, edges[i], edges[j], delta)) return false;
    }
  }
  return true;
}

// Reference colour refinement -------------------------------------------------

/// Per-iteration partitions of a plain D-WL run on the disjoint union of the
/// given graphs, with colours named by canonical strings. partitions[t][k][v]
/// is the class of node v of graph k, numbered by first occurrence.
inline std::vector<std::vector<std::vector<std::size_t>>> reference_refinement(
    const std::vector<const StaticGraph*>& graphs, std::size_t iterations, bool directed,
    bool weights) {
  std::vector<std::vector<std::string>> color(graphs.size());
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    for (const auto& n : graphs[k]->nodes()) color[k].push_back("L" + std::to_string(n.label));
  }
  auto number = [&]() {
    std::map<std::string, std::size_t> ids;
    std::vector<std::vector<std::size_t>> out(graphs.size());
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      for (const auto& c : color[k]) out[k].push_back(ids.emplace(c, ids.size()).first->second);
    }
    return out;
  };
  std::vector<std::vector<std::vector<std::size_t>>> partitions{number()};
  for (std::size_t t = 0; t < iterations; ++t) {
    std::vector<std::vector<std::string>> next(graphs.size());
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const auto& g = *graphs[k];
      for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        std::vector<std::string> in, out;
        for (const auto& nb : g.in_neighbors(v)) {
          in.push_back(color[k][nb.node] + (weights ? "/" + std::to_string(nb.weight) : ""));
        }
        for (const auto& nb : g.out_neighbors(v)) {
          out.push_back(color[k][nb.node] + (weights ? "/" + std::to_string(nb.weight) : ""));
        }
        if (!directed) {
          in.insert(in.end(), out.begin(), out.end());
          out.clear();
        }
        std::sort(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        std::string key = "(" + color[k][v] + "|";
        for (const auto& s : in) key += s + ",";
        key += "|";
        for (const auto& s : out) key += s + ",";
        next[k].push_back(key + ")");
      }
    }
    color = std::move(next);
    partitions.push_back(number());
    // Short names keep the keys of later rounds small.
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      for (std::size_t v = 0; v < color[k].size(); ++v) {
        color[k][v] = "c" + std::to_string(partitions.back()[k][v]);
      }
    }
  }
  return partitions;
}

/// Sorted colour multiset of graph k at iteration t of a reference run.
inline std::vector<std::size_t> colour_multiset(
    const std::vector<std::vector<std::vector<std::size_t>>>& partitions, std::size_t t,
    std::size_t k) {
  auto v = partitions[t][k];
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace tiso::test
