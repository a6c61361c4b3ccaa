#pragma once

// Reproducible randomness. std::mt19937_64 is fully specified by the
// standard; the standard distributions are not, so bounded integers and unit
// reals are derived here from raw 64-bit draws.

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace elicit {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// 64-bit FNV-1a.
std::uint64_t hash_string(std::string_view s) noexcept;

/// Mixes (master seed, tag, index) into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() >> 63) != 0; }

  template <class T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform random k-subset of {0, ..., m-1} via Floyd's algorithm.
/// `out` receives the subset in ascending order.
void floyd_subset(int m, int k, Rng& rng, std::vector<std::int32_t>& out);

}  // namespace elicit
