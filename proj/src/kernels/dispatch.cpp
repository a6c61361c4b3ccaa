#include <cstdlib>
#include <cstring>
#include <iostream>

#include "kernels/variants.hpp"

namespace elicit::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::tally_pairwise, &scalar::accumulate_positional};

#if defined(ELICIT_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::tally_pairwise, &avx2::accumulate_positional};

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

const KernelTable& choose() noexcept {
  const KernelTable* best = avx2_kernels();
  if (const char* forced = std::getenv("ELICIT_KERNELS")) {
    if (std::strcmp(forced, "scalar") == 0) return kScalar;
    if (std::strcmp(forced, "avx2") == 0) {
      if (best) return *best;
      std::cerr << "elicit: ELICIT_KERNELS=avx2 unavailable on this build/CPU, using scalar\n";
      return kScalar;
    }
    std::cerr << "elicit: ignoring unknown ELICIT_KERNELS=" << forced << '\n';
  }
  return best ? *best : kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() noexcept { return kScalar; }

const KernelTable* avx2_kernels() noexcept {
#if defined(ELICIT_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = choose();
  return chosen;
}

}  // namespace elicit::kernels
