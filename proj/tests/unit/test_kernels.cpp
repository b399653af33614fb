#include <random>
#include <vector>

#include "doctest.h"
#include "genfact/kernels.hpp"
#include "genfact/numerics.hpp"

using namespace genfact;

namespace {

std::vector<std::uint32_t> run(kernels::Isa isa, const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& p,
                               std::int64_t b) {
  const kernels::Isa saved = kernels::active_isa();
  kernels::set_active_isa(isa);
  std::vector<std::uint32_t> out(c.size());
  kernels::valuation_sums(c, p, b, out);
  kernels::set_active_isa(saved);
  return out;
}

}  // namespace

TEST_CASE("scalar kernel matches direct valuation sums") {
  const std::vector<std::int64_t> cand{0, 1, -1, 2, -2, 3, 8, 16};
  const std::vector<std::int64_t> pre{0, 1};
  std::vector<std::uint32_t> out(cand.size());
  kernels::scalar::valuation_sums(cand, pre, 2, out);
  CHECK(out[0] == kOrdInfinite);
  CHECK(out[1] == kOrdInfinite);
  CHECK(out[2] == 1);  // ord2(-1)=0, ord2(-2)=1
  CHECK(out[3] == 1);
  CHECK(out[6] == 3);
  std::vector<std::uint32_t> one(cand.size());
  kernels::scalar::valuation_sums(cand, pre, 1, one);
  for (auto v : one) CHECK(v == kOrdInfinite);
  std::vector<std::uint32_t> empty_prefix(cand.size());
  kernels::scalar::valuation_sums(cand, {}, 5, empty_prefix);
  for (auto v : empty_prefix) CHECK(v == 0);
}

TEST_CASE("vector kernel is equivalent to scalar reference") {
  if (!kernels::isa_supported(kernels::Isa::Avx)) {
    MESSAGE("AVX not supported on this host; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 40);
    const std::int64_t mag = (trial % 4 == 0) ? (kernels::kVectorMagnitudeLimit - 1) : 2000;
    std::uniform_int_distribution<std::int64_t> val(-mag, mag);
    std::vector<std::int64_t> cand(static_cast<std::size_t>(rng() % 37));
    std::vector<std::int64_t> pre(static_cast<std::size_t>(rng() % 13));
    for (auto& x : cand) x = val(rng);
    for (auto& x : pre) x = val(rng);
    // plant collisions and high-valuation differences
    if (!pre.empty() && cand.size() > 2) {
      cand[0] = pre[0];
      cand[1] = pre[0] + checked_pow(b, 3);
    }
    REQUIRE(run(kernels::Isa::Avx, cand, pre, b) == run(kernels::Isa::Scalar, cand, pre, b));
  }
}

TEST_CASE("vector kernel handles values at the exactness limit") {
  if (!kernels::isa_supported(kernels::Isa::Avx)) return;
  const std::int64_t L = kernels::kVectorMagnitudeLimit - 1;
  const std::vector<std::int64_t> cand{L, -L, L - 1, 0, 1 - L, 2, 3, 4};
  const std::vector<std::int64_t> pre{-L, L, 0};
  for (std::int64_t b : {2, 3, 7, 10, 1 << 20})
    CHECK(run(kernels::Isa::Avx, cand, pre, b) == run(kernels::Isa::Scalar, cand, pre, b));
}

TEST_CASE("dispatch falls back to scalar for large magnitudes and small bases") {
  const std::vector<std::int64_t> cand{INT64_C(1) << 60, 0, 1, 2, 3};
  const std::vector<std::int64_t> pre{0};
  std::vector<std::uint32_t> out(cand.size());
  kernels::valuation_sums(cand, pre, 2, out);
  CHECK(out[0] == 60);
  CHECK(out[1] == kOrdInfinite);
  kernels::valuation_sums(cand, pre, 0, out);
  CHECK(out[0] == 0);
  CHECK(out[1] == kOrdInfinite);
  CHECK_THROWS(kernels::valuation_sums(cand, pre, -1, out));
  std::vector<std::uint32_t> wrong(2);
  CHECK_THROWS(kernels::valuation_sums(cand, pre, 2, wrong));
}

TEST_CASE("isa names") {
  CHECK(std::string(kernels::isa_name(kernels::Isa::Scalar)) == "scalar");
  CHECK(std::string(kernels::isa_name(kernels::Isa::Avx)) == "avx");
  CHECK(kernels::isa_supported(kernels::Isa::Scalar));
}
