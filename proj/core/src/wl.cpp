#include "tiso/wl.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace tiso {
namespace {

std::atomic<std::uint64_t> next_epoch{1};

constexpr std::uint64_t kInitialTag = 0;
constexpr std::uint64_t kDirectedTag = 1;
constexpr std::uint64_t kUndirectedTag = 2;

void append_multiset(std::vector<std::uint64_t>& key,
                     std::vector<std::pair<std::uint64_t, std::uint64_t>>& items,
                     bool use_weights) {
  std::sort(items.begin(), items.end());
  key.push_back(items.size());
  for (auto [color, weight] : items) {
    key.push_back(color);
    if (use_weights) key.push_back(weight);
  }
}

}  // namespace

ColorDictionary::ColorDictionary() : epoch_(next_epoch.fetch_add(1)) {}

std::uint64_t ColorDictionary::get_or_insert(std::span<const std::uint64_t> key) {
  std::lock_guard lock(mu_);
  auto [it, inserted] =
      ids_.try_emplace(std::vector<std::uint64_t>(key.begin(), key.end()), ids_.size());
  return it->second;
}

std::size_t ColorDictionary::size() const {
  std::lock_guard lock(mu_);
  return ids_.size();
}

std::size_t ColorAssignment::distinct(std::size_t t) const {
  auto c = colors.at(t);
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

ColorAssignment dwl_refine(const StaticGraph& g, std::size_t iterations,
                           ColorDictionary& dict, WlOptions options) {
  const auto n = g.num_nodes();
  ColorAssignment out;
  out.colors.reserve(iterations + 1);
  out.stable_iteration = iterations + 1;

  std::vector<std::uint64_t> current(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t key[] = {kInitialTag, g.node(v).label};
    current[v] = dict.get_or_insert(key);
  }
  out.colors.push_back(current);
  std::size_t classes = out.distinct(0);

  std::vector<std::uint64_t> key;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
  for (std::size_t t = 1; t <= iterations; ++t) {
    if (out.stable_iteration <= iterations) {
      out.colors.push_back(out.colors.back());
      continue;
    }
    std::vector<std::uint64_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      key.assign({options.directed ? kDirectedTag : kUndirectedTag, current[v]});
      items.clear();
      for (const auto& nb : g.in_neighbors(v)) items.emplace_back(current[nb.node], nb.weight);
      if (options.directed) {
        append_multiset(key, items, options.use_weights);
        items.clear();
      }
      for (const auto& nb : g.out_neighbors(v)) items.emplace_back(current[nb.node], nb.weight);
      append_multiset(key, items, options.use_weights);
      next[v] = dict.get_or_insert(key);
    }
    current = std::move(next);
    out.colors.push_back(current);
    auto now = out.distinct(t);
    if (now == classes) out.stable_iteration = t;
    classes = now;
  }
  return out;
}

std::uint64_t WLFingerprint::total() const {
  std::uint64_t sum = 0;
  for (const auto& [c, n] : histogram) sum += n;
  return sum;
}

WLFingerprint wl_fingerprint(const StaticGraph& g, std::size_t iterations,
                             ColorDictionary& dict, WlOptions options) {
  auto colors = dwl_refine(g, iterations, dict, options);
  WLFingerprint fp;
  fp.iterations = iterations;
  fp.epoch = dict.epoch();
  for (const auto& round : colors.colors) {
    for (auto c : round) ++fp.histogram[c];
  }
  return fp;
}

std::optional<std::size_t> first_distinguishing_iteration(
    const StaticGraph& g1, const StaticGraph& g2, std::size_t iterations,
    WlOptions options) {
  // Refining the disjoint union makes early stopping exact for both sides.
  StaticGraph joint;
  for (const auto& n : g1.nodes()) joint.add_node(n);
  for (const auto& n : g2.nodes()) joint.add_node(n);
  const auto offset = g1.num_nodes();
  for (const auto& e : g1.edges()) joint.add_edge(e.src, e.dst, e.weight);
  for (const auto& e : g2.edges()) joint.add_edge(offset + e.src, offset + e.dst, e.weight);

  ColorDictionary dict;
  auto colors = dwl_refine(joint, iterations, dict, options);
  for (std::size_t t = 0; t <= iterations; ++t) {
    const auto& round = colors.colors[t];
    std::vector<std::uint64_t> a(round.begin(), round.begin() + static_cast<std::ptrdiff_t>(offset));
    std::vector<std::uint64_t> b(round.begin() + static_cast<std::ptrdiff_t>(offset), round.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return t;
  }
  return std::nullopt;
}

bool dwl_distinguish(const StaticGraph& g1, const StaticGraph& g2,
                     std::size_t iterations, WlOptions options) {
  return first_distinguishing_iteration(g1, g2, iterations, options).has_value();
}

std::string fingerprint_to_json(const WLFingerprint& fp) {
  nlohmann::json features = nlohmann::json::object();
  for (const auto& [c, n] : fp.histogram) features[std::to_string(c)] = n;
  nlohmann::json doc{{"epoch", fp.epoch},
                     {"iterations", fp.iterations},
                     {"features", features}};
  return doc.dump();
}

}  // namespace tiso
