#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "support.hpp"
#include "tiso/errors.hpp"
#include "tiso/generators.hpp"
#include "tiso/random.hpp"
#include "tiso/representations.hpp"

using namespace tiso;
using namespace tiso::test;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParse;
}

std::set<std::pair<std::size_t, std::size_t>> undirected(const StaticGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges()) out.insert({std::min(e.src, e.dst), std::max(e.src, e.dst)});
  return out;
}

void check_simple_regular(const StaticGraph& g, std::size_t n, std::size_t k) {
  CHECK(g.num_nodes() == n);
  CHECK(g.num_edges() == n * k);
  for (std::size_t v = 0; v < n; ++v) {
    CHECK(g.out_neighbors(v).size() == k);
    CHECK(g.in_neighbors(v).size() == k);
    CHECK_FALSE(g.has_edge(v, v));
  }
  for (const auto& e : g.edges()) {
    CHECK(g.has_edge(e.dst, e.src));
    CHECK(e.weight == 1);
  }
  CHECK(undirected(g).size() == n * k / 2);
}

bool same(const TemporalGraph& a, const TemporalGraph& b) {
  return a.num_nodes() == b.num_nodes() &&
         std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
}

std::multiset<Timestamp> timestamps(const TemporalGraph& g) {
  std::multiset<Timestamp> out;
  for (const auto& e : g.edges()) out.insert(e.t);
  return out;
}

}  // namespace

TEST_CASE("k-regular graphs") {
  check_simple_regular(k_regular_random_graph(10, 3, 1), 10, 3);
  check_simple_regular(k_regular_random_graph(20, 4, 2), 20, 4);
  auto k4 = k_regular_random_graph(4, 3, 3);
  check_simple_regular(k4, 4, 3);
  CHECK(undirected(k4).size() == 6);

  CHECK(code_of([] { k_regular_random_graph(5, 3, 1); }) == ErrorCode::kInfeasibleDegree);
  CHECK(code_of([] { k_regular_random_graph(3, 3, 1); }) == ErrorCode::kInfeasibleDegree);
  CHECK(k_regular_random_graph(10, 3, 7) == k_regular_random_graph(10, 3, 7));
}

TEST_CASE("two-community graphs") {
  auto t = two_community_graph(10, 10, 3, 2, 5);
  CHECK(t.graph.num_nodes() == 20);
  CHECK(undirected(t.graph).size() == 32);
  REQUIRE(t.communities.size() == 20);
  for (std::size_t v = 0; v < 20; ++v) CHECK(t.communities[v] == (v < 10 ? 0 : 1));
  std::size_t cross = 0;
  for (auto [u, v] : undirected(t.graph)) cross += t.communities[u] != t.communities[v];
  CHECK(cross == 2);

  auto apart = two_community_graph(10, 10, 3, 0, 5);
  CHECK(undirected(apart.graph).size() == 30);
  for (const auto& e : apart.graph.edges()) {
    CHECK(apart.communities[e.src] == apart.communities[e.dst]);
  }

  auto small = two_community_graph(4, 4, 3, 1, 5);
  CHECK(undirected(small.graph).size() == 13);
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t v = 0; v < 4; ++v) {
      if (u != v) {
        CHECK(small.graph.has_edge(u, v));
        CHECK(small.graph.has_edge(u + 4, v + 4));
      }
    }
  }
}

TEST_CASE("walk timestamps") {
  auto g = k_regular_random_graph(10, 3, 11);
  auto one = walk_temporal_graph(g, 1, 2, 3);
  REQUIRE(one.num_edges() == 2);
  CHECK(timestamps(one) == std::multiset<Timestamp>{1, 2});
  CHECK(one.edge(0).dst == one.edge(1).src);

  auto many = walk_temporal_graph(g, 500, 2, 4);
  CHECK(many.num_edges() == 1000);
  CHECK(event_arcs(many, 1).size() == 500);
  for (const auto& e : many.edges()) {
    CHECK(g.has_edge(e.src, e.dst));
    CHECK(e.t % 3 != 0);
  }
  CHECK(same(walk_temporal_graph(g, 50, 2, 9), walk_temporal_graph(g, 50, 2, 9)));
  CHECK(code_of([&] { walk_temporal_graph(g, 5, 0, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("community bias weights") {
  CommunityAssignment c{0, 0, 1};
  std::vector<NodeId> three{0, 1, 2};
  for (double w : sigma_bias(0, 1, three, c, 0.0)) CHECK(w == doctest::Approx(1.0 / 3));

  std::vector<NodeId> pair{1, 2};  // same community as 0, then the other one
  auto up = sigma_bias(0, 1, pair, c, 0.9);
  CHECK(up[0] == doctest::Approx(0.05));
  CHECK(up[1] == doctest::Approx(0.95));
  auto down = sigma_bias(0, 1, pair, c, -0.9);
  CHECK(down[0] == doctest::Approx(0.95));
  CHECK(down[1] == doctest::Approx(0.05));

  CHECK(code_of([&] { sigma_bias(0, 1, pair, c, 1.0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { sigma_bias(0, 1, {}, c, 0.0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("timestamp shuffling examples") {
  auto f = repeated_motif();
  CHECK(same(shuffle_timestamps(f, 0.0, 1), f));
  CHECK(build_time_aggregated(shuffle_timestamps(f, 1.0, 2)) == build_time_aggregated(f));

  auto big = walk_temporal_graph(k_regular_random_graph(10, 3, 1), 500, 2, 2);
  CHECK(shuffled_edge_count(1000, 0.5) == 500);
  CHECK(shuffled_edge_count(5, 0.5) == 3);
  auto s = shuffle_timestamps(big, 0.5, 3);
  CHECK(timestamps(s) == timestamps(big));
  std::size_t moved = 0;
  for (std::size_t i = 0; i < big.num_edges(); ++i) {
    CHECK(s.edge(i).src == big.edge(i).src);
    CHECK(s.edge(i).dst == big.edge(i).dst);
    moved += s.edge(i).t != big.edge(i).t;
  }
  CHECK(moved <= 500);
  CHECK(moved > 400);
  CHECK(code_of([&] { shuffle_timestamps(f, 1.5, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("property: shuffling keeps the aggregate and the timestamp multiset") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 200; ++round) {
    auto g = random_temporal_graph(rng, 6, 12, 12);
    const double alpha = (round % 11) / 10.0;
    auto s = shuffle_timestamps(g, alpha, 100 + round);
    CHECK(build_time_aggregated(s) == build_time_aggregated(g));
    CHECK(pair_counts(s) == pair_counts(g));
    CHECK(timestamps(s) == timestamps(g));
    CHECK(std::set<TimestampedEdge>(s.edges().begin(), s.edges().end()).size() == s.num_edges());
    CHECK(same(s, shuffle_timestamps(g, alpha, 100 + round)));
  }
}

TEST_CASE("property: first steps do not depend on the bias") {
  // Per directed edge, the number of first steps over 200 walk graphs at
  // sigma 0 and sigma 0.9 must agree within three standard errors.
  auto base = two_community_graph(10, 10, 3, 2, 61);
  const std::size_t graphs = 200, walks = 500;
  std::map<std::pair<NodeId, NodeId>, std::vector<double>> counts[2];
  double cross_second_steps[2] = {0, 0};
  const double sigmas[2] = {0.0, 0.9};
  for (int s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < graphs; ++i) {
      auto g = walk_temporal_graph(base.graph, walks, 2, mix_seed(7000 + 1000 * s + i),
                                   SigmaBias{base.communities, sigmas[s]});
      std::map<std::pair<NodeId, NodeId>, double> first;
      for (const auto& e : g.edges()) {
        if (e.t % 3 == 1) {
          first[{e.src, e.dst}] += 1;
        } else {
          cross_second_steps[s] += base.communities[e.src] != base.communities[e.dst];
        }
      }
      for (const auto& e : base.graph.edges()) {
        counts[s][{static_cast<NodeId>(e.src), static_cast<NodeId>(e.dst)}].push_back(
            first[{static_cast<NodeId>(e.src), static_cast<NodeId>(e.dst)}]);
      }
    }
  }
  auto mean_var = [](const std::vector<double>& x) {
    double m = 0;
    for (double v : x) m += v;
    m /= x.size();
    double s = 0;
    for (double v : x) s += (v - m) * (v - m);
    return std::pair{m, s / (x.size() - 1)};
  };
  for (const auto& [edge, x] : counts[0]) {
    auto [m0, v0] = mean_var(x);
    auto [m1, v1] = mean_var(counts[1][edge]);
    const double se = std::sqrt(v0 / graphs + v1 / graphs);
    CHECK(std::abs(m0 - m1) < 3 * se);
  }
  // The bias itself does act on later steps.
  CHECK(cross_second_steps[1] > 1.5 * cross_second_steps[0]);
}
