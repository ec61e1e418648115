#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tiso/errors.hpp"
#include "tiso/isomorphism.hpp"
#include "tiso/paths.hpp"

namespace tiso {
namespace {

struct PathKey {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
  friend auto operator<=>(const PathKey&, const PathKey&) = default;
};

std::vector<PathKey> all_paths(const TemporalGraph& g, Delta delta) {
  std::vector<PathKey> out;
  for_each_time_respecting_path(g, delta, {}, [&](std::span<const EdgeIndex> p) {
    PathKey k;
    k.nodes.push_back(g.edge(p[0]).src);
    for (EdgeIndex i : p) {
      k.edges.push_back(i);
      k.nodes.push_back(g.edge(i).dst);
    }
    out.push_back(std::move(k));
  });
  return out;
}

void check_cap(const TemporalGraph& g, SizeCap cap, const char* which) {
  if (g.num_nodes() > cap.max_nodes || g.num_edges() > cap.max_edges) {
    throw Error(ErrorCode::kSizeCapExceeded,
                std::string(which) + " has " + std::to_string(g.num_nodes()) +
                    " nodes / " + std::to_string(g.num_edges()) +
                    " edges, cap is " + std::to_string(cap.max_nodes) + " / " +
                    std::to_string(cap.max_edges));
  }
}

class Search {
 public:
  Search(const TemporalGraph& g1, const TemporalGraph& g2, Delta delta)
      : g1_(g1), g2_(g2), paths1_(all_paths(g1, delta)) {
    auto p2 = all_paths(g2, delta);
    paths2_.insert(p2.begin(), p2.end());
    for (EdgeIndex i = 0; i < g1.num_edges(); ++i) {
      groups1_[{g1.edge(i).src, g1.edge(i).dst}].push_back(i);
    }
    for (EdgeIndex i = 0; i < g2.num_edges(); ++i) {
      groups2_[{g2.edge(i).src, g2.edge(i).dst}].push_back(i);
    }
  }

  IsoResult run() {
    IsoResult none;
    if (g1_.num_nodes() != g2_.num_nodes() || g1_.num_edges() != g2_.num_edges() ||
        paths1_.size() != paths2_.size()) {
      return none;
    }
    std::vector<std::size_t> pi(g1_.num_nodes());
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    do {
      if (try_node_map(pi)) {
        IsoResult r;
        r.verdict = Verdict::kIsomorphic;
        r.node_map = pi;
        r.edge_map = edge_map_;
        return r;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return none;
  }

 private:
  using Pair = std::pair<NodeId, NodeId>;

  bool try_node_map(const std::vector<std::size_t>& pi) {
    // Node-consistent edge maps send the edges of pair (u,v) onto the edges
    // of (pi(u),pi(v)); group sizes must agree.
    slots_.clear();
    for (const auto& [pair, edges] : groups1_) {
      Pair image{static_cast<NodeId>(pi[pair.first]), static_cast<NodeId>(pi[pair.second])};
      auto it = groups2_.find(image);
      if (it == groups2_.end() || it->second.size() != edges.size()) return false;
      slots_.push_back({&edges, it->second});
    }
    pi_ = &pi;
    edge_map_.assign(g1_.num_edges(), 0);
    return assign_group(0);
  }

  bool assign_group(std::size_t k) {
    if (k == slots_.size()) return paths_match();
    auto& slot = slots_[k];
    std::sort(slot.targets.begin(), slot.targets.end());
    do {
      for (std::size_t i = 0; i < slot.sources->size(); ++i) {
        edge_map_[(*slot.sources)[i]] = slot.targets[i];
      }
      if (assign_group(k + 1)) return true;
    } while (std::next_permutation(slot.targets.begin(), slot.targets.end()));
    return false;
  }

  bool paths_match() const {
    const auto& pi = *pi_;
    PathKey image;
    for (const auto& p : paths1_) {
      image.nodes.clear();
      image.edges.clear();
      for (auto v : p.nodes) image.nodes.push_back(pi[v]);
      for (auto e : p.edges) image.edges.push_back(edge_map_[e]);
      if (!paths2_.contains(image)) return false;
    }
    // |P1| == |P2| and the image is injective, so the image is all of P2.
    return true;
  }

  struct Slot {
    const std::vector<EdgeIndex>* sources;
    std::vector<EdgeIndex> targets;
  };

  const TemporalGraph& g1_;
  const TemporalGraph& g2_;
  std::vector<PathKey> paths1_;
  std::set<PathKey> paths2_;
  std::map<Pair, std::vector<EdgeIndex>> groups1_;
  std::map<Pair, std::vector<EdgeIndex>> groups2_;
  std::vector<Slot> slots_;
  const std::vector<std::size_t>* pi_ = nullptr;
  std::vector<std::size_t> edge_map_;
};

}  // namespace

IsoResult brute_force_trp_iso(const TemporalGraph& g1, const TemporalGraph& g2,
                              Delta delta, SizeCap cap) {
  check_cap(g1, cap, "first graph");
  check_cap(g2, cap, "second graph");
  return Search(g1, g2, delta).run();
}

}  // namespace tiso
