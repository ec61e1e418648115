#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tiso/static_graph.hpp"

namespace tiso {

inline constexpr std::size_t kDefaultWlIterations = 3;

struct WlOptions {
  /// Keep in- and out-neighbour multisets apart (D-WL). When false the two
  /// are merged, which is plain 1-WL on the undirected skeleton.
  bool directed = true;
  /// Pair each neighbour colour with the connecting edge weight.
  bool use_weights = true;
};

/// Injective, append-only map from refinement keys to dense colour ids.
///
/// get_or_insert is safe to call concurrently, but ids follow insertion
/// order: callers that need reproducible ids must insert in a fixed order.
class ColorDictionary {
 public:
  ColorDictionary();

  std::uint64_t get_or_insert(std::span<const std::uint64_t> key);
  std::size_t size() const;
  /// Distinguishes dictionaries; colour ids are only comparable within one.
  std::uint64_t epoch() const noexcept { return epoch_; }

 private:
  mutable std::mutex mu_;
  std::map<std::vector<std::uint64_t>, std::uint64_t> ids_;
  std::uint64_t epoch_;
};

struct ColorAssignment {
  /// colors[t][v] for t = 0..K.
  std::vector<std::vector<std::uint64_t>> colors;
  /// First iteration whose partition equals the previous one; later
  /// iterations repeat it. Equals K+1 if the partition never settled.
  std::size_t stable_iteration = 0;

  std::size_t iterations() const noexcept {
    return colors.empty() ? 0 : colors.size() - 1;
  }
  std::size_t distinct(std::size_t t) const;
};

/// D-WL colour refinement for K rounds. Iteration 0 is the node label;
/// round t hashes (previous colour, in-multiset, out-multiset) through the
/// dictionary.
ColorAssignment dwl_refine(const StaticGraph& g, std::size_t iterations,
                           ColorDictionary& dict, WlOptions options = {});

struct WLFingerprint {
  std::map<std::uint64_t, std::uint64_t> histogram;  // colour id -> count
  std::size_t iterations = 0;
  std::uint64_t epoch = 0;

  std::uint64_t total() const;
  friend bool operator==(const WLFingerprint&, const WLFingerprint&) = default;
};

/// Histogram of all colours of iterations 0..K.
WLFingerprint wl_fingerprint(const StaticGraph& g, std::size_t iterations,
                             ColorDictionary& dict, WlOptions options = {});

/// First iteration in 0..K at which the colour multisets of the two graphs
/// differ, refining both with one fresh dictionary.
std::optional<std::size_t> first_distinguishing_iteration(
    const StaticGraph& g1, const StaticGraph& g2, std::size_t iterations,
    WlOptions options = {});

bool dwl_distinguish(const StaticGraph& g1, const StaticGraph& g2,
                     std::size_t iterations, WlOptions options = {});

/// {"epoch":..,"iterations":..,"features":{"<id>":count,...}}
std::string fingerprint_to_json(const WLFingerprint& fp);

}  // namespace tiso
