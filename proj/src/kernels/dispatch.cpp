#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "genfact/kernels.hpp"

namespace genfact::kernels {

namespace {

Isa detect_best() {
  if (const char* env = std::getenv("GENFACT_KERNEL"); env != nullptr && std::string_view(env) == "scalar")
    return Isa::Scalar;
  return isa_supported(Isa::Avx) ? Isa::Avx : Isa::Scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect_best()};
  return isa;
}

bool fits_vector_lanes(std::span<const std::int64_t> xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [](std::int64_t v) { return v > -kVectorMagnitudeLimit && v < kVectorMagnitudeLimit; });
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx ? "avx" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::Scalar) return true;
#ifdef GENFACT_HAVE_AVX_KERNEL
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx") != 0;
#else
  return false;
#endif
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument(std::string("kernel ISA not supported: ") + isa_name(isa));
  selected().store(isa, std::memory_order_relaxed);
}

void valuation_sums(std::span<const std::int64_t> candidates, std::span<const std::int64_t> prefix,
                    std::int64_t b, std::span<std::uint32_t> out) {
  if (out.size() != candidates.size()) throw std::invalid_argument("valuation_sums: output size mismatch");
  if (b < 0) throw std::domain_error("valuation_sums: negative base");
#ifdef GENFACT_HAVE_AVX_KERNEL
  if (active_isa() == Isa::Avx && b >= 2 && b < kVectorMagnitudeLimit && candidates.size() >= 4 &&
      fits_vector_lanes(candidates) && fits_vector_lanes(prefix)) {
    avx::valuation_sums(candidates, prefix, b, out);
    return;
  }
#endif
  scalar::valuation_sums(candidates, prefix, b, out);
}

}  // namespace genfact::kernels
