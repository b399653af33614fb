#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genfact/extnat.hpp"
#include "genfact/intsets.hpp"

namespace genfact {

/// Which minimizer a greedy step returns when several tie.
struct TieBreakPolicy {
  enum class Kind { Canonical, SeededRandom };
  Kind kind = Kind::Canonical;
  std::uint64_t seed = 0;

  static TieBreakPolicy canonical() { return {}; }
  static TieBreakPolicy seeded(std::uint64_t seed) { return {Kind::SeededRandom, seed}; }
  std::string name() const;
};

struct EngineLimits {
  unsigned max_level = 12;        // deepest residue level b^L explored before falling back
  std::int64_t window = 2048;     // |a| bound for the uncertified fallback scan
  std::size_t random_pool = 4;    // per-class candidates offered to the random policy
};

struct GreedyStep {
  std::int64_t element = 0;
  ExtNat value;
  bool certified = true;
};

/// One greedy step: an a′ ∈ S minimising Σ_j ord_b(a′ − prefix_j).
/// Finite S is scanned exhaustively; infinite built-in sets use a best-first
/// search over b-adic residue classes whose result is provably global;
/// predicate sets are scanned up to their cap and reported uncertified.
GreedyStep greedy_step(std::span<const std::int64_t> prefix, std::int64_t b, const SetDescriptor& s,
                       const TieBreakPolicy& policy = {}, const EngineLimits& limits = {});

struct BOrdering {
  std::int64_t base = 0;
  std::vector<std::int64_t> elements;
  std::vector<ExtNat> exponents;
  std::vector<bool> certified;
  std::string strategy;

  bool all_certified() const;
};

/// a_0 .. a_k built greedily. `start` fixes a_0 (must lie in S).
BOrdering b_ordering(const SetDescriptor& s, std::int64_t b, std::size_t k, const TieBreakPolicy& policy = {},
                     std::optional<std::int64_t> start = std::nullopt, const EngineLimits& limits = {});

struct ExponentOptions {
  bool force_greedy = false;
  EngineLimits limits;
};

struct ExponentSequence {
  std::vector<ExtNat> values;   // α_0 .. α_k
  bool certified = true;        // every value is proven
  std::string method;           // "closed-form", "convention" or "greedy"
};

/// α_0(S,b) .. α_k(S,b). Closed forms are used for ℤ and ℙ unless
/// force_greedy is set; b = 0 and b = 1 follow the extended conventions.
ExponentSequence exponent_sequence(const SetDescriptor& s, std::int64_t b, std::size_t k,
                                   const ExponentOptions& options = {});

/// A finite sequence drawn from S; membership is checked at construction.
struct TestSequence {
  std::vector<std::int64_t> elements;

  static TestSequence from(const SetDescriptor& s, std::vector<std::int64_t> elements);
};

/// α_i(S,b,a) = Σ_{j<i} ord_b(a_i − a_j).
std::vector<ExtNat> evaluate_test_sequence(std::span<const std::int64_t> seq, std::int64_t b);

/// α*_i = ord_b(Π_{j<i} (a_i − a_j)); b >= 2.
std::vector<ExtNat> evaluate_multiplicative(std::span<const std::int64_t> seq, std::int64_t b);

/// Σ_{i<j} ord_b(a_i − a_j).
ExtNat pairwise_valuation_sum(std::span<const std::int64_t> seq, std::int64_t b);

struct MajorizationReport {
  std::vector<ExtNat> sequence_values;
  std::vector<ExtNat> invariants;
  std::vector<ExtNat> sequence_partial_sums;
  std::vector<ExtNat> invariant_partial_sums;
  std::vector<bool> equal_at;           // per prefix length index m
  std::vector<std::size_t> violations;  // indices where dominance fails
  bool invariants_certified = true;

  bool holds() const { return violations.empty(); }
};

/// Compares partial sums of the sequence's values with those of α_k(S,b).
MajorizationReport check_majorization(const SetDescriptor& s, std::int64_t b, std::span<const std::int64_t> seq,
                                      const ExponentOptions& options = {});

}  // namespace genfact
