// Compiled with -mavx. Only reached through the runtime dispatcher.
#include <immintrin.h>

#include <vector>

#include "genfact/kernels.hpp"
#include "genfact/numerics.hpp"

namespace genfact::kernels::avx {

// Divisibility of an exact integer d by b is tested in double lanes as
// round(d / b) * b == d. For |d| + b < 2^53 both the quotient (when exact)
// and the product are representable, so the test is exact.
void valuation_sums(std::span<const std::int64_t> candidates, std::span<const std::int64_t> prefix,
                    std::int64_t b, std::span<std::uint32_t> out) {
  const std::size_t n = candidates.size();
  std::vector<double> cand(n);
  for (std::size_t i = 0; i < n; ++i) cand[i] = static_cast<double>(candidates[i]);
  std::vector<double> pre(prefix.size());
  for (std::size_t j = 0; j < prefix.size(); ++j) pre[j] = static_cast<double>(prefix[j]);

  const __m256d vb = _mm256_set1_pd(static_cast<double>(b));
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c = _mm256_loadu_pd(cand.data() + i);
    __m256d count = zero;
    __m256d hit_zero = zero;  // all-ones in lanes that met a zero difference
    for (double pj : pre) {
      __m256d d = _mm256_sub_pd(c, _mm256_set1_pd(pj));
      const __m256d is_zero = _mm256_cmp_pd(d, zero, _CMP_EQ_OQ);
      hit_zero = _mm256_or_pd(hit_zero, is_zero);
      __m256d active = _mm256_cmp_pd(d, zero, _CMP_NEQ_OQ);
      for (;;) {
        const __m256d q = _mm256_round_pd(_mm256_div_pd(d, vb), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        const __m256d divisible = _mm256_and_pd(active, _mm256_cmp_pd(_mm256_mul_pd(q, vb), d, _CMP_EQ_OQ));
        if (_mm256_movemask_pd(divisible) == 0) break;
        d = _mm256_blendv_pd(d, q, divisible);
        count = _mm256_add_pd(count, _mm256_and_pd(divisible, one));
        active = divisible;
      }
    }
    alignas(32) double counts[4];
    _mm256_store_pd(counts, count);
    const int zmask = _mm256_movemask_pd(hit_zero);
    for (int lane = 0; lane < 4; ++lane) {
      if ((zmask >> lane) & 1) {
        out[i + lane] = kOrdInfinite;
      } else {
        const double v = counts[lane];
        out[i + lane] = v >= static_cast<double>(kOrdInfinite) ? kOrdInfinite : static_cast<std::uint32_t>(v);
      }
    }
  }
  if (i < n) scalar::valuation_sums(candidates.subspan(i), prefix, b, out.subspan(i));
}

}  // namespace genfact::kernels::avx
