#include "genfact/factorials.hpp"

#include <stdexcept>

#include "genfact/closedforms.hpp"
#include "genfact/numerics.hpp"

namespace genfact {

namespace {

void require_bases(const std::vector<std::int64_t>& bases) {
  for (std::int64_t b : bases)
    if (b < 0) throw std::invalid_argument("negative base " + std::to_string(b));
}

}  // namespace

FactoredResult factorial(const SetDescriptor& s, const std::vector<std::int64_t>& bases, std::uint64_t k,
                         const ExponentOptions& options) {
  require_bases(bases);
  FactoredResult r;
  r.bases = bases;
  for (std::int64_t b : bases) {
    const ExponentSequence seq = exponent_sequence(s, b, k, options);
    r.value.multiply_power(b, seq.values[k]);
    r.certified = r.certified && seq.certified;
  }
  return r;
}

FactoredResult gen_integer(const SetDescriptor& s, const std::vector<std::int64_t>& bases, std::uint64_t n,
                           const ExponentOptions& options) {
  require_bases(bases);
  if (n == 0) throw std::domain_error("gen_integer: n must be >= 1");
  FactoredResult r;
  r.bases = bases;
  if (ExtNat(n) >= s.cardinality()) {
    r.value = FactoredNumber::zero();
    return r;
  }
  for (std::int64_t b : bases) {
    if (b == 1) continue;
    const ExponentSequence seq = exponent_sequence(s, b, n, options);
    r.value.multiply_power(b, seq.values[n] - seq.values[n - 1]);
    r.certified = r.certified && seq.certified;
  }
  return r;
}

FactoredResult gen_binomial(const SetDescriptor& s, const std::vector<std::int64_t>& bases, std::uint64_t k,
                            std::uint64_t l, const ExponentOptions& options) {
  require_bases(bases);
  if (l > k) throw std::domain_error("gen_binomial: need l <= k");
  if (ExtNat(k) >= s.cardinality()) throw std::domain_error("gen_binomial: need k < |S|");
  FactoredResult r;
  r.bases = bases;
  for (std::int64_t b : bases) {
    if (b == 1) continue;
    const ExponentSequence seq = exponent_sequence(s, b, k, options);
    r.value.multiply_power(b, seq.values[k] - seq.values[l] - seq.values[k - l]);
    r.certified = r.certified && seq.certified;
  }
  return r;
}

std::uint64_t nu_bar(std::uint64_t n, std::int64_t b) {
  if (n == 0) throw std::domain_error("nu_bar: n must be >= 1");
  if (b < 2) throw std::domain_error("nu_bar: b must be >= 2");
  const auto ub = static_cast<std::uint64_t>(b);
  const std::uint64_t lhs = 2 * cumulative_digit_sum(n, ub);
  const std::uint64_t rhs = (n - 1) * digit_sum(n, ub);
  if (lhs < rhs || (lhs - rhs) % (ub - 1) != 0) throw std::logic_error("nu_bar: digit formula is not integral");
  const std::uint64_t v = (lhs - rhs) / (ub - 1);
  std::uint64_t check = 0;
  for (std::uint64_t k = 0; k <= n; ++k) check += beta(n, k, b);
  if (check != v) throw std::logic_error("nu_bar: digit formula disagrees with the beta sum");
  return v;
}

FactoredNumber partial_row_product(std::uint64_t n, std::uint64_t x) {
  if (n == 0) throw std::domain_error("row product: n must be >= 1");
  if (x > n) throw std::domain_error("partial row product: need x <= n");
  FactoredNumber f;
  for (std::uint64_t b = 2; b <= x; ++b) f.multiply_power(static_cast<std::int64_t>(b), ExtNat(nu_bar(n, static_cast<std::int64_t>(b))));
  return f;
}

FactoredNumber row_product(std::uint64_t n) { return partial_row_product(n, n); }

PairwiseMultipleReport pairwise_multiple_check(const SetDescriptor& s, const std::vector<std::int64_t>& bases,
                                               std::span<const std::int64_t> seq, const ExponentOptions& options) {
  require_bases(bases);
  PairwiseMultipleReport rep;
  if (seq.empty()) throw std::invalid_argument("pairwise_multiple_check: empty sequence");
  for (std::int64_t a : seq)
    if (!s.contains(a)) throw std::invalid_argument("pairwise_multiple_check: element not in S");
  const std::size_t n = seq.size() - 1;
  rep.holds = true;
  rep.equality = true;
  for (std::int64_t b : bases) {
    const ExtNat gamma = pairwise_valuation_sum(seq, b);
    const ExponentSequence inv = exponent_sequence(s, b, n, options);
    ExtNat total(0);
    for (const auto& v : inv.values) total += v;
    rep.pairwise.multiply_power(b, gamma);
    rep.factorial_product.multiply_power(b, total);
    rep.certified = rep.certified && inv.certified;
    if (b == 1) continue;  // 1^e = 1 on both sides
    if (gamma < total) rep.holds = false;
    if (gamma != total) rep.equality = false;
  }
  return rep;
}

}  // namespace genfact
