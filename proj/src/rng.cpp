#include "elicit/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace elicit {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_string(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) noexcept {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ hash_string(tag));
  return splitmix64(h ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
  // Largest multiple of bound that fits, minus one: draws above it are redrawn.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return x % bound;
}

void floyd_subset(int m, int k, Rng& rng, std::vector<std::int32_t>& out) {
  if (k < 0 || k > m) throw std::invalid_argument("subset size outside [0, m]");
  out.clear();
  for (int j = m - k; j < m; ++j) {
    const auto t = static_cast<std::int32_t>(rng.uniform_index(static_cast<std::uint64_t>(j) + 1));
    // out stays sorted, k is small
    const auto it = std::lower_bound(out.begin(), out.end(), t);
    if (it != out.end() && *it == t)
      out.insert(std::lower_bound(out.begin(), out.end(), j), j);
    else
      out.insert(it, t);
  }
}

}  // namespace elicit
