#pragma once

// Batched valuation-sum kernels used by the exhaustive and windowed greedy
// scans. A scalar reference implementation is always present; an AVX variant
// is compiled on x86-64 and selected at runtime when the CPU supports it.
// Both must produce identical output for every input (see test_kernels).

#include <cstdint>
#include <span>

namespace genfact::kernels {

enum class Isa { Scalar, Avx };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);

/// The ISA used by valuation_sums(). Defaults to the best supported one;
/// GENFACT_KERNEL=scalar in the environment forces the reference path.
Isa active_isa();
/// Throws std::invalid_argument if the ISA is not supported on this host.
void set_active_isa(Isa isa);

/// Values with |a| below this bound are exact in double lanes after one
/// subtraction; anything larger is routed to the scalar kernel.
inline constexpr std::int64_t kVectorMagnitudeLimit = std::int64_t{1} << 50;

/// out[i] = Σ_j ord_b(candidates[i] − prefix[j]), saturating to
/// kOrdInfinite (0xFFFFFFFF) when any difference has infinite valuation
/// (zero difference, or b == 1 with a nonempty prefix).
/// Requires out.size() == candidates.size() and b >= 0.
void valuation_sums(std::span<const std::int64_t> candidates, std::span<const std::int64_t> prefix,
                    std::int64_t b, std::span<std::uint32_t> out);

namespace scalar {
void valuation_sums(std::span<const std::int64_t> candidates, std::span<const std::int64_t> prefix,
                    std::int64_t b, std::span<std::uint32_t> out);
}

#if defined(__x86_64__) || defined(_M_X64)
#define GENFACT_HAVE_AVX_KERNEL 1
namespace avx {
/// Precondition: b >= 2, every |value| < kVectorMagnitudeLimit, b < 2^50.
void valuation_sums(std::span<const std::int64_t> candidates, std::span<const std::int64_t> prefix,
                    std::int64_t b, std::span<std::uint32_t> out);
}
#endif

}  // namespace genfact::kernels
