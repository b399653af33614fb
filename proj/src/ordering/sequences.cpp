#include <stdexcept>

#include "genfact/closedforms.hpp"
#include "genfact/numerics.hpp"
#include "genfact/ordering.hpp"

namespace genfact {

ExponentSequence exponent_sequence(const SetDescriptor& s, std::int64_t b, std::size_t k,
                                   const ExponentOptions& options) {
  if (b < 0) throw std::domain_error("exponent_sequence: negative base");
  ExponentSequence out;
  if (!options.force_greedy) {
    if (b == 1) {
      out.method = "convention";
      for (std::size_t j = 0; j <= k; ++j) out.values.push_back(j == 0 ? ExtNat(0) : ExtNat::infinity());
      return out;
    }
    if (b == 0 && s.kind() != SetKind::CustomPredicate) {
      out.method = "convention";
      const ExtNat n = s.cardinality();
      for (std::size_t j = 0; j <= k; ++j)
        out.values.push_back(ExtNat(static_cast<std::uint64_t>(j)) < n ? ExtNat(0) : ExtNat::infinity());
      return out;
    }
    if (b >= 2 && s.kind() == SetKind::AllIntegers) {
      out.method = "closed-form";
      for (std::size_t j = 0; j <= k; ++j) out.values.emplace_back(alpha_Z(j, b));
      return out;
    }
    if (b >= 2 && s.kind() == SetKind::Primes) {
      out.method = "closed-form";
      for (std::size_t j = 0; j <= k; ++j) out.values.emplace_back(alpha_P(j, b));
      return out;
    }
  }
  const BOrdering ord = b_ordering(s, b, k, TieBreakPolicy::canonical(), std::nullopt, options.limits);
  out.method = "greedy";
  out.values = ord.exponents;
  out.certified = ord.all_certified();
  return out;
}

TestSequence TestSequence::from(const SetDescriptor& s, std::vector<std::int64_t> elements) {
  for (std::int64_t a : elements)
    if (!s.contains(a)) throw std::invalid_argument("test sequence element " + std::to_string(a) + " not in S");
  return TestSequence{std::move(elements)};
}

std::vector<ExtNat> evaluate_test_sequence(std::span<const std::int64_t> seq, std::int64_t b) {
  std::vector<ExtNat> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    ExtNat v(0);
    for (std::size_t j = 0; j < i && v.is_finite(); ++j) v += ord_b(b, seq[i] - seq[j]);
    out.push_back(v);
  }
  return out;
}

std::vector<ExtNat> evaluate_multiplicative(std::span<const std::int64_t> seq, std::int64_t b) {
  if (b < 2) throw std::domain_error("evaluate_multiplicative: need b >= 2");
  std::vector<ExtNat> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    BigInt prod = 1;
    for (std::size_t j = 0; j < i; ++j) prod *= BigInt(seq[i]) - BigInt(seq[j]);
    out.push_back(ord_b(b, prod));
  }
  return out;
}

ExtNat pairwise_valuation_sum(std::span<const std::int64_t> seq, std::int64_t b) {
  ExtNat total(0);
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) total += ord_b(b, seq[i] - seq[j]);
  return total;
}

MajorizationReport check_majorization(const SetDescriptor& s, std::int64_t b, std::span<const std::int64_t> seq,
                                      const ExponentOptions& options) {
  MajorizationReport rep;
  if (seq.empty()) return rep;
  rep.sequence_values = evaluate_test_sequence(seq, b);
  const ExponentSequence inv = exponent_sequence(s, b, seq.size() - 1, options);
  rep.invariants = inv.values;
  rep.invariants_certified = inv.certified;
  ExtNat ps(0), pi(0);
  for (std::size_t m = 0; m < seq.size(); ++m) {
    ps += rep.sequence_values[m];
    pi += rep.invariants[m];
    rep.sequence_partial_sums.push_back(ps);
    rep.invariant_partial_sums.push_back(pi);
    rep.equal_at.push_back(ps == pi);
    if (ps < pi) rep.violations.push_back(m);
  }
  return rep;
}

}  // namespace genfact
