#include "genfact/numerics.hpp"

#include <stdexcept>

namespace genfact {

namespace {

BigInt big_floor_div(const BigInt& a, const BigInt& m) {
  BigInt q = a / m;  // truncates toward zero
  if (q * m != a && ((a.sign() < 0) != (m.sign() < 0))) --q;
  return q;
}

void require_nonnegative_base(std::int64_t b) {
  if (b < 0) throw std::domain_error("ord_b: negative base " + std::to_string(b));
}

}  // namespace

std::uint32_t ord_b_u32(std::int64_t b, std::int64_t a) {
  require_nonnegative_base(b);
  if (b == 1) return kOrdInfinite;
  if (a == 0) return kOrdInfinite;
  if (b == 0) return 0;
  std::uint32_t k = 0;
  while (a % b == 0) {
    a /= b;
    ++k;
  }
  return k;
}

ExtNat ord_b(std::int64_t b, std::int64_t a) {
  std::uint32_t v = ord_b_u32(b, a);
  return v == kOrdInfinite ? ExtNat::infinity() : ExtNat(v);
}

ExtNat ord_b(std::int64_t b, const BigInt& a) {
  require_nonnegative_base(b);
  if (b == 1 || a.is_zero()) return ExtNat::infinity();
  if (b == 0) return ExtNat(0);
  BigInt x = a;
  const BigInt base(b);
  std::uint64_t k = 0;
  for (;;) {
    BigInt q, r;
    boost::multiprecision::divide_qr(x, base, q, r);
    if (!r.is_zero()) break;
    x = std::move(q);
    ++k;
  }
  return ExtNat(k);
}

DigitExpansion digits(const BigInt& a, std::int64_t b, std::size_t count) {
  if (b < 2) throw std::domain_error("digits: base must be >= 2");
  DigitExpansion out;
  out.base = b;
  out.digits.reserve(count);
  const BigInt base(b);
  BigInt cur = a;  // ⌊a/b^k⌋
  for (std::size_t k = 0; k < count; ++k) {
    BigInt next = big_floor_div(cur, base);
    out.digits.push_back(static_cast<std::int64_t>(cur - base * next));
    cur = std::move(next);
  }
  return out;
}

DigitExpansion digits(std::int64_t a, std::int64_t b, std::size_t count) {
  if (b < 2) throw std::domain_error("digits: base must be >= 2");
  DigitExpansion out;
  out.base = b;
  out.digits.reserve(count);
  std::int64_t cur = a;
  for (std::size_t k = 0; k < count; ++k) {
    std::int64_t next = floor_div(cur, b);
    out.digits.push_back(cur - b * next);
    cur = next;
  }
  return out;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t b) {
  if (b < 2) throw std::domain_error("digit_sum: base must be >= 2");
  std::uint64_t s = 0;
  while (n != 0) {
    s += n % b;
    n /= b;
  }
  return s;
}

std::uint64_t cumulative_digit_sum(std::uint64_t n, std::uint64_t b) {
  if (n == 0) throw std::domain_error("cumulative_digit_sum: n must be >= 1");
  std::uint64_t s = 0;
  for (std::uint64_t j = 1; j < n; ++j) s += digit_sum(j, b);
  return s;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t totient(std::uint64_t b) {
  if (b == 0) throw std::domain_error("totient: argument must be >= 1");
  std::uint64_t phi = b;
  for (const auto& [p, e] : factorize(b)) phi = phi / p * (p - 1);
  return phi;
}

std::uint32_t omega(std::uint64_t b) {
  if (b < 2) throw std::domain_error("omega: argument must be >= 2");
  return static_cast<std::uint32_t>(factorize(b).size());
}

std::uint64_t binomial2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::uint64_t floor_sum(std::uint64_t k, std::uint64_t m) {
  if (m == 0) throw std::domain_error("floor_sum: m must be >= 1");
  const std::uint64_t q = k / m;
  const std::uint64_t tail = k - m * q;
  // Block j (0 <= j < q) holds m copies of j; the partial block holds `tail` copies of q.
  return m * binomial2(q) + tail * q;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e != 0) {
    if (e & 1u) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const auto un = static_cast<std::uint64_t>(n);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (un % p == 0) return un == p;
  }
  std::uint64_t d = un - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic below 3.3·10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t q = p * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

std::int64_t checked_pow(std::int64_t b, unsigned e) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, b, &r)) return -1;
  }
  return r;
}

}  // namespace genfact
