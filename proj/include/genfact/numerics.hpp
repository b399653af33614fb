#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "genfact/extnat.hpp"

namespace genfact {

/// Floor division for signed 64-bit values (rounds toward -∞).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  std::int64_t q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

/// Least nonnegative residue of a mod m, m > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// ord_b(a) with the extended conventions for b = 0 and b = 1:
///   b >= 2: sup{k : b^k | a}, so ord_b(0) = ∞
///   b == 0: ∞ if a == 0, else 0
///   b == 1: ∞ for every a
/// Negative b throws std::domain_error.
ExtNat ord_b(std::int64_t b, std::int64_t a);
ExtNat ord_b(std::int64_t b, const BigInt& a);

/// Finite-valued variant for the hot paths: returns kOrdInfinite for the ∞ case.
inline constexpr std::uint32_t kOrdInfinite = 0xFFFFFFFFu;
std::uint32_t ord_b_u32(std::int64_t b, std::int64_t a);

struct DigitExpansion {
  std::int64_t base = 2;
  std::vector<std::int64_t> digits;  // d_0 .. d_{count-1}

  std::size_t length() const { return digits.size(); }
};

/// First `count` base-b digits d_k = ⌊a/b^k⌋ − b⌊a/b^{k+1}⌋. Negative a yields
/// the (infinite) b-adic expansion truncated at `count`.
DigitExpansion digits(const BigInt& a, std::int64_t b, std::size_t count);
DigitExpansion digits(std::int64_t a, std::int64_t b, std::size_t count);

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t b);

/// S_b(n) = Σ_{j=1}^{n-1} d_b(j).
std::uint64_t cumulative_digit_sum(std::uint64_t n, std::uint64_t b);

/// Trial-division factorisation, ascending primes with multiplicities.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

std::uint64_t totient(std::uint64_t b);
std::uint32_t omega(std::uint64_t b);

/// Σ_{i=0}^{k-1} ⌊i/m⌋, summed block by block (m·C(q,2) for the q full
/// blocks plus q·(k − mq) for the tail).
std::uint64_t floor_sum(std::uint64_t k, std::uint64_t m);

std::uint64_t binomial2(std::uint64_t n);  // C(n, 2)

/// Deterministic for the full signed 64-bit range.
bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// b^e as int64, or nullopt-like -1 when it overflows.
std::int64_t checked_pow(std::int64_t b, unsigned e);

}  // namespace genfact
