#pragma once

#include "elicit/kernels.hpp"

namespace elicit::kernels {

namespace scalar {
void tally_pairwise(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                    std::span<std::int32_t> out);
void accumulate_positional(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                           std::span<const double> key_scores, std::span<double> out);
}  // namespace scalar

#if defined(ELICIT_HAVE_AVX2)
namespace avx2 {
void tally_pairwise(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                    std::span<std::int32_t> out);
void accumulate_positional(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                           std::span<const double> key_scores, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace elicit::kernels
