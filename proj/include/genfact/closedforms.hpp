#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genfact/factored.hpp"

namespace genfact {

/// α_k(ℤ, b) = Σ_{i>=1} ⌊k/b^i⌋.
std::uint64_t alpha_Z(std::uint64_t k, std::int64_t b);

/// Σ_i (⌊k/b^i⌋ − ⌊ℓ/b^i⌋ − ⌊(k−ℓ)/b^i⌋).
std::uint64_t beta_floor(std::uint64_t k, std::uint64_t l, std::int64_t b);
/// (d_b(ℓ) + d_b(k−ℓ) − d_b(k)) / (b − 1), the carry count of ℓ + (k−ℓ).
std::uint64_t beta_digit(std::uint64_t k, std::uint64_t l, std::int64_t b);
/// Both forms; throws std::logic_error if they disagree.
std::uint64_t beta(std::uint64_t k, std::uint64_t l, std::int64_t b);

/// α_k(ℙ, b) = max{0, Σ_{ℓ>=1} ⌊(k − ω(b)) / (b^{ℓ−1} φ(b))⌋}.
std::uint64_t alpha_P(std::uint64_t k, std::int64_t b);

/// k!_{ℙ,T} from the closed form. Base 0 is rejected; base 1 contributes 1.
FactoredNumber factorial_P(std::uint64_t k, const std::vector<std::int64_t>& bases);

/// Minimum of Σ C(n_i, 2) over n_1 + … + n_m = k, n_i >= 0.
std::uint64_t min_class_pairs(std::uint64_t k, std::uint64_t m);
/// The minimizing part sizes, largest first: (k − mq) parts of q + 1, the
/// remaining parts of q, where q = ⌊k/m⌋.
std::vector<std::uint64_t> equality_profile(std::uint64_t k, std::uint64_t m);

/// Σ_{j=ω(b)}^{k} α_j(ℙ, b). Throws std::domain_error when k < ω(b).
std::uint64_t p_test_lower_bound(std::uint64_t k, std::int64_t b);

/// A ℙ-test sequence built from residue classes: the prime divisors of b
/// ascending, then the least prime in each class r mod b^e with gcd(r, b) = 1,
/// classes in ascending r. Its first ω(b) + φ(b^e) terms realise α_k(ℙ, b).
struct PrimeWitness {
  std::int64_t base = 2;
  unsigned level = 1;
  std::vector<std::int64_t> primes;
  bool complete = false;  // false when some class had no prime below the cap
  std::int64_t prime_cap = 0;
  std::string failure;  // first class whose search was exhausted
};
PrimeWitness prime_witness_sequence(std::int64_t b, unsigned level, std::int64_t prime_cap);

}  // namespace genfact
