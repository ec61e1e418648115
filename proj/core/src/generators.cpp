#include "tiso/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "tiso/errors.hpp"
#include "tiso/random.hpp"

namespace tiso {
namespace {

using UndirectedEdge = std::pair<std::size_t, std::size_t>;

std::vector<UndirectedEdge> regular_pairing(std::size_t n, std::size_t k,
                                            std::size_t offset, Rng& rng,
                                            std::size_t max_retries) {
  if ((n * k) % 2 != 0) {
    throw Error(ErrorCode::kInfeasibleDegree,
                "n*k must be even (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (k > 0 && k >= n) {
    throw Error(ErrorCode::kInfeasibleDegree,
                "k must be below n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  std::vector<std::size_t> points;
  points.reserve(n * k);
  for (std::size_t v = 0; v < n; ++v) points.insert(points.end(), k, v);

  std::set<UndirectedEdge> edges;
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    rng.shuffle(points);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      auto u = points[i], v = points[i + 1];
      if (u == v) simple = false;
      else simple = edges.insert(std::minmax(u, v)).second;
    }
    if (simple) {
      std::vector<UndirectedEdge> out;
      for (auto [u, v] : edges) out.emplace_back(u + offset, v + offset);
      return out;
    }
  }
  throw Error(ErrorCode::kRetriesExhausted,
              "no simple " + std::to_string(k) + "-regular pairing after " +
                  std::to_string(max_retries) + " attempts");
}

StaticGraph symmetric_graph(std::size_t n, std::vector<UndirectedEdge> edges) {
  std::sort(edges.begin(), edges.end());
  StaticGraph g;
  for (NodeId v = 0; v < n; ++v) g.add_node({kOriginalLabel, OriginalNode{v}});
  for (auto [u, v] : edges) {
    g.add_edge(u, v);
    g.add_edge(v, u);
  }
  return g;
}

}  // namespace

StaticGraph k_regular_random_graph(std::size_t n, std::size_t k, std::uint64_t seed,
                                   std::size_t max_retries) {
  Rng rng(seed);
  return symmetric_graph(n, regular_pairing(n, k, 0, rng, max_retries));
}

TwoCommunityGraph two_community_graph(std::size_t n1, std::size_t n2, std::size_t k,
                                      std::size_t bridges, std::uint64_t seed) {
  if (bridges > n1 * n2) {
    throw Error(ErrorCode::kInvalidArgument, "more bridges than cross pairs");
  }
  Rng rng(seed);
  auto edges = regular_pairing(n1, k, 0, rng, 100'000);
  auto second = regular_pairing(n2, k, n1, rng, 100'000);
  edges.insert(edges.end(), second.begin(), second.end());

  std::set<UndirectedEdge> cross;
  while (cross.size() < bridges) {
    cross.insert({rng.index(n1), n1 + rng.index(n2)});
  }
  edges.insert(edges.end(), cross.begin(), cross.end());

  TwoCommunityGraph out;
  out.graph = symmetric_graph(n1 + n2, std::move(edges));
  out.communities.assign(n1 + n2, 0);
  std::fill(out.communities.begin() + static_cast<std::ptrdiff_t>(n1), out.communities.end(), 1);
  return out;
}

std::vector<double> sigma_bias(NodeId previous, NodeId /*current*/,
                               std::span<const NodeId> candidates,
                               const CommunityAssignment& communities, double sigma) {
  if (candidates.empty()) throw Error(ErrorCode::kInvalidArgument, "no candidates");
  if (!(sigma > -1.0 && sigma < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma must lie in (-1, 1)");
  }
  const double base = 1.0 / static_cast<double>(candidates.size());
  std::vector<double> w;
  w.reserve(candidates.size());
  for (auto c : candidates) {
    bool crosses = communities.at(previous) != communities.at(c);
    w.push_back(base * (crosses ? 1.0 + sigma : 1.0 - sigma));
  }
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

TemporalGraph walk_temporal_graph(const StaticGraph& graph, std::size_t num_walks,
                                  std::size_t walk_len, std::uint64_t seed,
                                  const std::optional<SigmaBias>& bias) {
  if (walk_len < 1) throw Error(ErrorCode::kInvalidArgument, "walk_len must be >= 1");
  const auto n = graph.num_nodes();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty static graph");
  for (std::size_t v = 0; v < n; ++v) {
    if (graph.out_neighbors(v).empty() && graph.in_neighbors(v).empty()) {
      throw Error(ErrorCode::kInvalidArgument, "node " + std::to_string(v) + " is isolated");
    }
  }
  if (bias && bias->communities.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "community assignment size mismatch");
  }

  Rng rng(seed);
  std::vector<TimestampedEdge> edges;
  edges.reserve(num_walks * walk_len);
  std::vector<NodeId> candidates;
  const auto stride = static_cast<Timestamp>(walk_len + 1);
  for (std::size_t j = 0; j < num_walks; ++j) {
    auto previous = static_cast<NodeId>(n);
    auto current = static_cast<NodeId>(rng.index(n));
    for (std::size_t i = 0; i < walk_len; ++i) {
      auto out = graph.out_neighbors(current);
      if (out.empty()) {
        throw Error(ErrorCode::kDeadEnd, "walk stuck at node " + std::to_string(current));
      }
      candidates.clear();
      for (const auto& nb : out) candidates.push_back(static_cast<NodeId>(nb.node));
      std::size_t pick;
      if (bias && i > 0) {
        auto w = sigma_bias(previous, current, candidates, bias->communities, bias->sigma);
        pick = rng.weighted(w);
      } else {
        pick = rng.index(candidates.size());
      }
      auto next = candidates[pick];
      edges.push_back({current, next,
                       static_cast<Timestamp>(j) * stride + static_cast<Timestamp>(i) + 1});
      previous = current;
      current = next;
    }
  }
  return TemporalGraph(n, std::move(edges));
}

std::size_t shuffled_edge_count(std::size_t num_edges, double alpha) {
  // Tolerance keeps e.g. 0.3 * 10 from rounding up to 4.
  auto raw = alpha * static_cast<double>(num_edges);
  return std::min(num_edges, static_cast<std::size_t>(std::ceil(raw - 1e-9)));
}

TemporalGraph shuffle_timestamps(const TemporalGraph& g, double alpha, std::uint64_t seed,
                                 std::size_t max_retries) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in [0, 1]");
  }
  const auto m = g.num_edges();
  const auto count = shuffled_edge_count(m, alpha);
  Rng rng(seed);

  std::vector<EdgeIndex> order(m);
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  // Partial Fisher-Yates: the first `count` entries are a uniform sample.
  for (std::size_t i = 0; i < count; ++i) std::swap(order[i], order[i + rng.index(m - i)]);
  std::vector<EdgeIndex> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));
  std::sort(chosen.begin(), chosen.end());

  std::vector<Timestamp> times;
  for (auto i : chosen) times.push_back(g.edge(i).t);

  std::vector<TimestampedEdge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    auto permuted = times;
    rng.shuffle(permuted);
    for (std::size_t k = 0; k < chosen.size(); ++k) edges[chosen[k]].t = permuted[k];
    std::set<TimestampedEdge> seen(edges.begin(), edges.end());
    if (seen.size() == edges.size()) {
      return TemporalGraph(g.num_nodes(), std::move(edges),
                           {g.names().begin(), g.names().end()});
    }
  }
  throw Error(ErrorCode::kRetriesExhausted, "every permutation collided");
}

}  // namespace tiso
