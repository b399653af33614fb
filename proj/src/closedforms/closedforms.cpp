#include "genfact/closedforms.hpp"

#include <numeric>
#include <stdexcept>

#include "genfact/numerics.hpp"

namespace genfact {

namespace {

void require_base(std::int64_t b) {
  if (b < 2) throw std::domain_error("closed forms need b >= 2");
}

std::uint64_t floor_power_sum(std::uint64_t n, std::uint64_t b) {
  std::uint64_t s = 0;
  for (std::uint64_t q = n / b; q != 0; q /= b) s += q;
  return s;
}

}  // namespace

std::uint64_t alpha_Z(std::uint64_t k, std::int64_t b) {
  require_base(b);
  return floor_power_sum(k, static_cast<std::uint64_t>(b));
}

std::uint64_t beta_floor(std::uint64_t k, std::uint64_t l, std::int64_t b) {
  require_base(b);
  if (l > k) throw std::domain_error("beta: need l <= k");
  const auto ub = static_cast<std::uint64_t>(b);
  return floor_power_sum(k, ub) - floor_power_sum(l, ub) - floor_power_sum(k - l, ub);
}

std::uint64_t beta_digit(std::uint64_t k, std::uint64_t l, std::int64_t b) {
  require_base(b);
  if (l > k) throw std::domain_error("beta: need l <= k");
  const auto ub = static_cast<std::uint64_t>(b);
  const std::uint64_t num = digit_sum(l, ub) + digit_sum(k - l, ub) - digit_sum(k, ub);
  if (num % (ub - 1) != 0) throw std::logic_error("beta: digit form not divisible by b-1");
  return num / (ub - 1);
}

std::uint64_t beta(std::uint64_t k, std::uint64_t l, std::int64_t b) {
  const std::uint64_t f = beta_floor(k, l, b);
  if (f != beta_digit(k, l, b)) throw std::logic_error("beta: floor and digit forms disagree");
  return f;
}

std::uint64_t alpha_P(std::uint64_t k, std::int64_t b) {
  require_base(b);
  const auto ub = static_cast<std::uint64_t>(b);
  const std::uint64_t w = omega(ub);
  if (k < w) return 0;
  const std::uint64_t n = k - w;
  std::uint64_t s = 0;
  for (std::uint64_t d = totient(ub); d <= n; d *= ub) {
    s += n / d;
    if (d > n / ub) break;
  }
  return s;
}

FactoredNumber factorial_P(std::uint64_t k, const std::vector<std::int64_t>& bases) {
  FactoredNumber f;
  for (std::int64_t b : bases) {
    if (b == 0) throw std::invalid_argument("factorial_P: base 0 is not allowed");
    if (b == 1) continue;
    f.multiply_power(b, ExtNat(alpha_P(k, b)));
  }
  return f;
}

std::uint64_t min_class_pairs(std::uint64_t k, std::uint64_t m) { return floor_sum(k, m); }

std::vector<std::uint64_t> equality_profile(std::uint64_t k, std::uint64_t m) {
  if (m == 0) throw std::domain_error("equality_profile: m must be >= 1");
  const std::uint64_t q = k / m;
  const std::uint64_t big = k - m * q;
  std::vector<std::uint64_t> parts(m, q);
  for (std::uint64_t i = 0; i < big; ++i) parts[i] = q + 1;
  return parts;
}

std::uint64_t p_test_lower_bound(std::uint64_t k, std::int64_t b) {
  require_base(b);
  const std::uint64_t w = omega(static_cast<std::uint64_t>(b));
  if (k < w) throw std::domain_error("p_test_lower_bound: need k >= omega(b)");
  std::uint64_t s = 0;
  for (std::uint64_t j = w; j <= k; ++j) s += alpha_P(j, b);
  return s;
}

PrimeWitness prime_witness_sequence(std::int64_t b, unsigned level, std::int64_t prime_cap) {
  require_base(b);
  if (level == 0) throw std::domain_error("prime_witness_sequence: level must be >= 1");
  PrimeWitness w;
  w.base = b;
  w.level = level;
  w.prime_cap = prime_cap;
  const std::int64_t m = checked_pow(b, level);
  if (m < 0) throw std::overflow_error("prime_witness_sequence: b^level overflows");
  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(b))) w.primes.push_back(static_cast<std::int64_t>(p));
  for (std::int64_t r = 1; r < m; ++r) {
    if (std::gcd(r, m) != 1) continue;
    std::int64_t found = -1;
    for (std::int64_t p = r; p <= prime_cap; p += m)
      if (is_prime(p)) {
        found = p;
        break;
      }
    if (found < 0) {
      w.failure = "no prime <= " + std::to_string(prime_cap) + " in class " + std::to_string(r) + " mod " +
                  std::to_string(m);
      return w;
    }
    w.primes.push_back(found);
  }
  w.complete = true;
  return w;
}

}  // namespace genfact
