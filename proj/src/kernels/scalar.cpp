#include "kernels/variants.hpp"

namespace elicit::kernels::scalar {

void tally_pairwise(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                    std::span<std::int32_t> out) {
  for (std::size_t v = 0; v < n; ++v) {
    const std::int32_t* row = keys.data() + v * m;
    for (std::size_t c = 0; c < m; ++c) {
      const std::int32_t kc = row[c];
      std::int32_t* dst = out.data() + c * m;
      for (std::size_t d = 0; d < m; ++d) dst[d] += static_cast<std::int32_t>(kc < row[d]);
    }
  }
}

void accumulate_positional(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                           std::span<const double> key_scores, std::span<double> out) {
  for (std::size_t v = 0; v < n; ++v) {
    const std::int32_t* row = keys.data() + v * m;
    for (std::size_t c = 0; c < m; ++c) out[c] += key_scores[static_cast<std::size_t>(row[c])];
  }
}

}  // namespace elicit::kernels::scalar
