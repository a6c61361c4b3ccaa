// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels/variants.hpp"

namespace elicit::kernels::avx2 {

void tally_pairwise(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                    std::span<std::int32_t> out) {
  const std::size_t body = m & ~std::size_t{7};
  for (std::size_t v = 0; v < n; ++v) {
    const std::int32_t* row = keys.data() + v * m;
    for (std::size_t c = 0; c < m; ++c) {
      const std::int32_t kc = row[c];
      const __m256i pivot = _mm256_set1_epi32(kc);
      std::int32_t* dst = out.data() + c * m;
      std::size_t d = 0;
      for (; d < body; d += 8) {
        const __m256i other = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + d));
        // all-ones lanes where c is preferred; subtracting -1 adds one
        const __m256i wins = _mm256_cmpgt_epi32(other, pivot);
        const __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + d));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + d), _mm256_sub_epi32(acc, wins));
      }
      for (; d < m; ++d) dst[d] += static_cast<std::int32_t>(kc < row[d]);
    }
  }
}

void accumulate_positional(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                           std::span<const double> key_scores, std::span<double> out) {
  const std::size_t body = m & ~std::size_t{3};
  const double* table = key_scores.data();
  for (std::size_t v = 0; v < n; ++v) {
    const std::int32_t* row = keys.data() + v * m;
    std::size_t c = 0;
    for (; c < body; c += 4) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row + c));
      const __m256d gathered = _mm256_i32gather_pd(table, idx, 8);
      const __m256d acc = _mm256_loadu_pd(out.data() + c);
      _mm256_storeu_pd(out.data() + c, _mm256_add_pd(acc, gathered));
    }
    for (; c < m; ++c) out[c] += table[row[c]];
  }
}

}  // namespace elicit::kernels::avx2
