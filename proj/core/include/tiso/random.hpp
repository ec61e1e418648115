#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace tiso {

/// Seeded generator with platform-independent draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so bounded integers use
/// rejection sampling on the raw 64-bit output and reals use the top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::size_t index(std::size_t n);
  /// Uniform in [0, 1).
  double uniform();
  /// Draws an index with probability proportional to weights[i].
  std::size_t weighted(std::span<const double> weights);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace tiso
