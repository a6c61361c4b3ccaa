#pragma once

// Data-parallel inner loops over voter x candidate key matrices.
//
// A key matrix is row-major n x m: key[v][c] orders candidates for voter v,
// smaller = more preferred, equal keys = no preference. Full elections use
// 0-based positions; truncated profiles use the prefix position or the depth
// ell for every unranked candidate.
//
// Every kernel has a scalar reference implementation. SIMD variants must be
// bit-identical to it: they vectorise across candidates and keep the per-
// candidate accumulation order over voters.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace elicit::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  /// out[c * m + d] += |{v : key[v][c] < key[v][d]}|. `out` has m * m entries.
  void (*tally_pairwise)(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                         std::span<std::int32_t> out);

  /// out[c] += sum over v of key_scores[key[v][c]]. Every key must index
  /// into `key_scores`; `out` has m entries.
  void (*accumulate_positional)(std::span<const std::int32_t> keys, std::size_t n, std::size_t m,
                                std::span<const double> key_scores, std::span<double> out);
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels() noexcept;

/// Chosen once per process: the best supported ISA, unless the environment
/// variable ELICIT_KERNELS is set to "scalar" or "avx2".
const KernelTable& active() noexcept;

}  // namespace elicit::kernels
