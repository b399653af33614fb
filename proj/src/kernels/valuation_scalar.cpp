#include <stdexcept>

#include "genfact/kernels.hpp"
#include "genfact/numerics.hpp"

namespace genfact::kernels::scalar {

void valuation_sums(std::span<const std::int64_t> candidates, std::span<const std::int64_t> prefix,
                    std::int64_t b, std::span<std::uint32_t> out) {
  if (out.size() != candidates.size()) throw std::invalid_argument("valuation_sums: output size mismatch");
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::uint64_t sum = 0;
    for (std::int64_t a : prefix) {
      const std::uint32_t v = ord_b_u32(b, candidates[i] - a);
      if (v == kOrdInfinite) {
        sum = kOrdInfinite;
        break;
      }
      sum += v;
    }
    out[i] = sum >= kOrdInfinite ? kOrdInfinite : static_cast<std::uint32_t>(sum);
  }
}

}  // namespace genfact::kernels::scalar
