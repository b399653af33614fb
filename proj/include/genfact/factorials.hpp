#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "genfact/factored.hpp"
#include "genfact/intsets.hpp"
#include "genfact/ordering.hpp"

namespace genfact {

/// A computed value over the resolved bases, with the soundness of every
/// exponent that went into it.
struct FactoredResult {
  FactoredNumber value;
  std::vector<std::int64_t> bases;
  bool certified = true;
};

/// k!_{S,T} = Π_{b∈T} b^{α_k(S,b)}.
FactoredResult factorial(const SetDescriptor& s, const std::vector<std::int64_t>& bases, std::uint64_t k,
                         const ExponentOptions& options = {});

/// [n]_{S,T} = n!/(n−1)!, exponents α_n − α_{n−1}; 0 when n >= |S|.
/// Base 1 always contributes 1 and is omitted. Requires n >= 1.
FactoredResult gen_integer(const SetDescriptor& s, const std::vector<std::int64_t>& bases, std::uint64_t n,
                           const ExponentOptions& options = {});

/// Exponents α_k − α_ℓ − α_{k−ℓ}. Requires ℓ <= k < |S|; base 1 omitted.
FactoredResult gen_binomial(const SetDescriptor& s, const std::vector<std::int64_t>& bases, std::uint64_t k,
                            std::uint64_t l, const ExponentOptions& options = {});

/// ν̄(n, b) = (2 S_b(n) − (n − 1) d_b(n)) / (b − 1); throws std::logic_error if
/// the division is inexact or disagrees with Σ_k β(n, k, b).
std::uint64_t nu_bar(std::uint64_t n, std::int64_t b);

/// Π_{b=2}^{x} b^{ν̄(n,b)}; row_product(n) uses x = n.
FactoredNumber partial_row_product(std::uint64_t n, std::uint64_t x);
FactoredNumber row_product(std::uint64_t n);

struct PairwiseMultipleReport {
  FactoredNumber pairwise;           // Π_b b^{γ(S,b,a)}
  FactoredNumber factorial_product;  // 0!·1!·…·n! over T
  bool holds = false;                // exponentwise divisibility
  bool equality = false;
  bool certified = true;
};

/// Checks that Π_b b^{Σ_{i<j} ord_b(a_i − a_j)} is an exponentwise multiple
/// of Π_{k=0}^{n} k!_{S,T} for a sequence of length n + 1 drawn from S.
PairwiseMultipleReport pairwise_multiple_check(const SetDescriptor& s, const std::vector<std::int64_t>& bases,
                                               std::span<const std::int64_t> seq, const ExponentOptions& options = {});

}  // namespace genfact
