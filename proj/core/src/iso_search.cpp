#include "iso_search.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace tiso::detail {

LabeledDigraph::LabeledDigraph(std::vector<std::uint64_t> node_labels)
    : node_labels_(std::move(node_labels)),
      out_(node_labels_.size()),
      in_(node_labels_.size()) {}

void LabeledDigraph::add_edge(std::size_t src, std::size_t dst,
                              std::uint64_t label) {
  out_[src].push_back({static_cast<std::uint32_t>(dst), label});
  in_[dst].push_back({static_cast<std::uint32_t>(src), label});
  ++num_edges_;
}

void LabeledDigraph::finalize() {
  auto by_node = [](const Arc& x, const Arc& y) { return x.node < y.node; };
  for (auto& arcs : out_) std::sort(arcs.begin(), arcs.end(), by_node);
  for (auto& arcs : in_) std::sort(arcs.begin(), arcs.end(), by_node);
}

std::optional<std::uint64_t> LabeledDigraph::edge_label(std::size_t src,
                                                        std::size_t dst) const {
  const auto& arcs = out_[src];
  auto it = std::lower_bound(arcs.begin(), arcs.end(), dst,
                             [](const Arc& a, std::size_t d) { return a.node < d; });
  if (it != arcs.end() && it->node == dst) return it->label;
  return std::nullopt;
}

LabeledDigraph from_static(const StaticGraph& g) {
  std::vector<std::uint64_t> labels;
  labels.reserve(g.num_nodes());
  for (const auto& n : g.nodes()) labels.push_back(n.label);
  LabeledDigraph out(std::move(labels));
  for (const auto& e : g.edges()) out.add_edge(e.src, e.dst, e.weight);
  out.finalize();
  return out;
}

namespace {

using Colors = std::vector<std::uint64_t>;

/// Refines both graphs with one shared dictionary until the number of
/// classes over the disjoint union stops growing.
std::pair<Colors, Colors> joint_refinement(const LabeledDigraph& a,
                                           const LabeledDigraph& b) {
  std::map<std::vector<std::uint64_t>, std::uint64_t> dict;
  auto intern = [&](std::vector<std::uint64_t> key) {
    auto [it, inserted] = dict.try_emplace(std::move(key), dict.size());
    return it->second;
  };

  Colors ca(a.num_nodes()), cb(b.num_nodes());
  for (std::size_t v = 0; v < a.num_nodes(); ++v) ca[v] = intern({0, a.node_label(v)});
  for (std::size_t v = 0; v < b.num_nodes(); ++v) cb[v] = intern({0, b.node_label(v)});

  auto count_classes = [](const Colors& x, const Colors& y) {
    std::vector<std::uint64_t> all(x);
    all.insert(all.end(), y.begin(), y.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };

  auto step = [&](const LabeledDigraph& g, const Colors& c) {
    Colors next(g.num_nodes());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> nb;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
      std::vector<std::uint64_t> key{1, c[v]};
      for (auto arcs : {g.out(v), g.in(v)}) {
        nb.clear();
        for (const auto& arc : arcs) nb.emplace_back(arc.label, c[arc.node]);
        std::sort(nb.begin(), nb.end());
        key.push_back(nb.size());
        for (auto [l, col] : nb) {
          key.push_back(l);
          key.push_back(col);
        }
      }
      next[v] = intern(std::move(key));
    }
    return next;
  };

  auto classes = count_classes(ca, cb);
  while (true) {
    auto na = step(a, ca);
    auto nb = step(b, cb);
    auto next_classes = count_classes(na, nb);
    ca = std::move(na);
    cb = std::move(nb);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return {std::move(ca), std::move(cb)};
}

class Matcher {
 public:
  Matcher(const LabeledDigraph& a, const LabeledDigraph& b, const Colors& ca,
          const Colors& cb, std::size_t budget)
      : a_(a), b_(b), ca_(ca), budget_(budget),
        map_(a.num_nodes(), kUnmapped), inv_(b.num_nodes(), kUnmapped) {
    for (std::size_t v = 0; v < b.num_nodes(); ++v) cells_[cb[v]].push_back(v);
    build_order();
  }

  SearchOutcome run() {
    SearchOutcome out;
    bool found = false;
    try {
      found = extend(0);
    } catch (const BudgetHit&) {
      out.status = SearchStatus::kBudgetExceeded;
      out.expanded = expanded_;
      return out;
    }
    out.expanded = expanded_;
    if (found) {
      out.status = SearchStatus::kFound;
      out.mapping = map_;
    }
    return out;
  }

 private:
  static constexpr std::size_t kUnmapped = std::numeric_limits<std::size_t>::max();
  struct BudgetHit {};

  // Greedy order: prefer nodes with many arcs into the already ordered set,
  // then small color cells.
  void build_order() {
    const auto n = a_.num_nodes();
    std::vector<std::size_t> links(n, 0);
    std::vector<bool> placed(n, false);
    order_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t best = kUnmapped;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == kUnmapped) {
          best = v;
          continue;
        }
        auto cell_v = cells_[ca_[v]].size();
        auto cell_b = cells_[ca_[best]].size();
        if (links[v] > links[best] || (links[v] == links[best] && cell_v < cell_b)) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (const auto& arc : a_.out(best)) ++links[arc.node];
      for (const auto& arc : a_.in(best)) ++links[arc.node];
    }
  }

  bool feasible(std::size_t u, std::size_t v) const {
    std::size_t mapped_out = 0, mapped_in = 0;
    for (const auto& arc : a_.out(u)) {
      auto w = map_[arc.node];
      if (w == kUnmapped) continue;
      ++mapped_out;
      auto l = b_.edge_label(v, w);
      if (!l || *l != arc.label) return false;
    }
    for (const auto& arc : a_.in(u)) {
      auto w = map_[arc.node];
      if (w == kUnmapped) continue;
      ++mapped_in;
      auto l = b_.edge_label(w, v);
      if (!l || *l != arc.label) return false;
    }
    std::size_t b_out = 0, b_in = 0;
    for (const auto& arc : b_.out(v)) b_out += inv_[arc.node] != kUnmapped;
    for (const auto& arc : b_.in(v)) b_in += inv_[arc.node] != kUnmapped;
    return b_out == mapped_out && b_in == mapped_in;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    auto u = order_[depth];
    for (auto v : cells_[ca_[u]]) {
      if (inv_[v] != kUnmapped) continue;
      if (++expanded_ > budget_) throw BudgetHit{};
      map_[u] = v;
      inv_[v] = u;
      if (feasible(u, v) && extend(depth + 1)) return true;
      map_[u] = kUnmapped;
      inv_[v] = kUnmapped;
    }
    return false;
  }

  const LabeledDigraph& a_;
  const LabeledDigraph& b_;
  const Colors& ca_;
  std::size_t budget_;
  std::map<std::uint64_t, std::vector<std::size_t>> cells_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<std::size_t> inv_;
  std::size_t expanded_ = 0;
};

}  // namespace

SearchOutcome find_isomorphism(const LabeledDigraph& a, const LabeledDigraph& b,
                               std::size_t budget) {
  SearchOutcome none;
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return none;
  if (a.num_nodes() == 0) {
    none.status = SearchStatus::kFound;
    return none;
  }
  auto [ca, cb] = joint_refinement(a, b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return none;
  return Matcher(a, b, ca, cb, budget).run();
}

}  // namespace tiso::detail
