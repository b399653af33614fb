#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genfact/extnat.hpp"

namespace genfact {

class SetDescriptor;

/// Formal product Π b^{e_b} over bases b >= 0 with ExtNat exponents.
///
/// Value conventions: b^∞ = 0 for b >= 2 and b = 0, 1^e = 1, b^0 = 1
/// (including 0^0). The stored map is normalized: zero exponents and base 1
/// are dropped, and any zero value collapses to the single entry {0: ∞}.
class FactoredNumber {
 public:
  FactoredNumber() = default;  // the empty product, 1

  static FactoredNumber zero();
  /// Throws std::invalid_argument for negative bases or a finite positive
  /// exponent on base 0.
  static FactoredNumber from_exponents(const std::map<std::int64_t, ExtNat>& exps);

  /// Multiplies in base^e.
  void multiply_power(std::int64_t base, const ExtNat& e);
  FactoredNumber& operator*=(const FactoredNumber& rhs);
  friend FactoredNumber operator*(FactoredNumber a, const FactoredNumber& b) { return a *= b; }

  const std::map<std::int64_t, ExtNat>& exponents() const { return exps_; }
  ExtNat exponent(std::int64_t base) const;
  bool is_zero() const;
  bool is_one() const { return exps_.empty(); }

  friend bool operator==(const FactoredNumber& a, const FactoredNumber& b) { return a.exps_ == b.exps_; }

 private:
  void normalize();
  std::map<std::int64_t, ExtNat> exps_;
};

BigInt to_decimal(const FactoredNumber& f);

/// Rewrites composite bases over their prime factors; value preserving.
FactoredNumber refine_to_primes(const FactoredNumber& f);

/// Per-base comparison e1_b <= e2_b over the union of bases. Zero is
/// divisible by everything; zero divides only zero.
bool exponentwise_divides(const FactoredNumber& f1, const FactoredNumber& f2);
/// Divisibility of the integer values (0 | 0, x | 0, 0 ∤ x for x != 0).
bool integer_divides(const FactoredNumber& f1, const FactoredNumber& f2);

/// "2^24 * 3^10 * 5^3 * 7 * 11", bases ascending, exponent 1 elided;
/// "0" for zero and "1" for the empty product.
std::string format_factored(const FactoredNumber& f);
/// Inverse of format_factored; also accepts "inf" exponents.
FactoredNumber parse_factored(const std::string& text);

/// Decimal digits, optionally grouped with commas ("9,535,274,090,496,000").
std::string format_decimal(const BigInt& v, bool thousands_separators);

/// Base set T ⊆ ℕ. Resolution always yields a finite ascending list.
class BaseSet {
 public:
  enum class Kind { ExplicitList, Range, AllPrimesUpTo, AllBasesUpTo };

  static BaseSet explicit_list(std::vector<std::int64_t> bases);
  static BaseSet range(std::int64_t lo, std::int64_t hi);
  /// cutoff == nullopt means "auto"; legal only for S = ℤ or S = ℙ.
  static BaseSet all_primes_up_to(std::optional<std::int64_t> cutoff);
  static BaseSet all_bases_up_to(std::optional<std::int64_t> cutoff);

  Kind kind() const { return kind_; }
  bool is_auto() const { return (kind_ == Kind::AllPrimesUpTo || kind_ == Kind::AllBasesUpTo) && !cutoff_; }

  /// `k` is the largest index whose exponent will be needed. Auto cutoffs:
  /// k for S = ℤ, the largest b with φ(b) + ω(b) <= k for S = ℙ. Other sets
  /// with an auto cutoff throw std::invalid_argument.
  std::vector<std::int64_t> resolve(const SetDescriptor& s, std::uint64_t k) const;
  /// The cutoff that resolve() would use (explicit or auto).
  std::optional<std::int64_t> resolved_cutoff(const SetDescriptor& s, std::uint64_t k) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::ExplicitList;
  std::vector<std::int64_t> list_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = -1;
  std::optional<std::int64_t> cutoff_;
};

/// Grammar: auto | primes:auto | primes:<c> | upto:<c> | <lo>..<hi> | <b1>,<b2>,...
BaseSet parse_base_spec(const std::string& spec);

/// Largest b with φ(b) + ω(b) <= k, or nullopt when there is none.
std::optional<std::int64_t> primes_auto_cutoff(std::uint64_t k);

}  // namespace genfact
