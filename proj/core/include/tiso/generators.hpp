#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tiso/static_graph.hpp"
#include "tiso/temporal_graph.hpp"

namespace tiso {

/// Community id (0 or 1) per node.
using CommunityAssignment = std::vector<std::uint8_t>;

/// Undirected simple k-regular graph, stored as symmetric arcs of weight 1.
/// Pairing model with rejection of self-loops and multi-edges.
/// Errors: kInfeasibleDegree if n*k is odd or k >= n (k > 0);
/// kRetriesExhausted if no simple pairing is found.
StaticGraph k_regular_random_graph(std::size_t n, std::size_t k, std::uint64_t seed,
                                   std::size_t max_retries = 100'000);

struct TwoCommunityGraph {
  StaticGraph graph;
  CommunityAssignment communities;
};

/// Two independent k-regular graphs on nodes [0,n1) and [n1,n1+n2) joined by
/// `bridges` distinct undirected cross edges.
TwoCommunityGraph two_community_graph(std::size_t n1, std::size_t n2, std::size_t k,
                                      std::size_t bridges, std::uint64_t seed);

/// Second-step transition weights of the community-biased walk. Candidate c
/// gets weight (1+sigma) when c and `previous` lie in different communities
/// and (1-sigma) otherwise, normalised to sum 1. `current` is the node the
/// walk sits on; sigma must lie in (-1, 1).
std::vector<double> sigma_bias(NodeId previous, NodeId current,
                               std::span<const NodeId> candidates,
                               const CommunityAssignment& communities, double sigma);

struct SigmaBias {
  CommunityAssignment communities;
  double sigma = 0.0;
};

/// Random walks on `graph`. Walk j starts at a uniform node; step i of walk j
/// gets timestamp j*(walk_len+1) + i + 1. Steps after the first follow
/// sigma_bias when `bias` is set, otherwise uniform over out-neighbours.
TemporalGraph walk_temporal_graph(const StaticGraph& graph, std::size_t num_walks,
                                  std::size_t walk_len, std::uint64_t seed,
                                  const std::optional<SigmaBias>& bias = std::nullopt);

/// Permutes the timestamps of ceil(alpha*|E|) uniformly chosen edges among
/// themselves; all other edges are untouched. Resamples the permutation if
/// it would create a duplicate triple.
TemporalGraph shuffle_timestamps(const TemporalGraph& g, double alpha, std::uint64_t seed,
                                 std::size_t max_retries = 1000);

/// Number of edges shuffle_timestamps selects for a given alpha.
std::size_t shuffled_edge_count(std::size_t num_edges, double alpha);

}  // namespace tiso
