#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genfact/ordering.hpp"

namespace genfact {

using Rational = boost::multiprecision::cpp_rational;

/// c_0 + c_1 t + … + c_{D−1} t^{D−1}: an element of ℚ[[t]] known modulo t^D.
/// Binary operations work modulo the smaller of the two caps.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t cap);
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t cap);

  static TruncatedSeries constant(const Rational& c, std::size_t cap);
  static TruncatedSeries monomial(const Rational& c, std::size_t degree, std::size_t cap);

  std::size_t cap() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;

  /// Coefficientwise equality up to the smaller cap.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  void truncate(std::size_t cap) { coeffs_.resize(cap); }
  std::vector<Rational> coeffs_;
};

/// ord_t of a truncated series: Exact(v) for v < cap, or AtLeastCap when every
/// known coefficient vanishes (the true order may be any value >= cap, or ∞).
struct TOrderValue {
  enum class Kind { Exact, AtLeastCap };
  Kind kind = Kind::Exact;
  std::uint64_t value = 0;  // the order, or the cap for AtLeastCap

  static TOrderValue exact(std::uint64_t v) { return {Kind::Exact, v}; }
  static TOrderValue at_least(std::uint64_t cap) { return {Kind::AtLeastCap, cap}; }
  bool is_exact() const { return kind == Kind::Exact; }
  std::string to_string() const;

  friend bool operator==(const TOrderValue&, const TOrderValue&) = default;
};

/// Strict order with AtLeastCap above every Exact value. Throws
/// std::domain_error when both are AtLeastCap: truncation cannot decide it.
std::strong_ordering compare_strict(const TOrderValue& a, const TOrderValue& b);

TOrderValue ord_t(const TruncatedSeries& f);

/// A sum of ord_t values: exact, or saturated once any term hit the cap.
struct TExponent {
  bool saturated = false;
  std::uint64_t value = 0;  // exact value, or the exact part accumulated before saturation

  static TExponent exact(std::uint64_t v) { return {false, v}; }
  static TExponent saturation() { return {true, 0}; }
  TExponent& operator+=(const TOrderValue& v);
  std::string to_string() const;  // "inf" when saturated
  /// ExtNat view: saturated maps to ∞.
  ExtNat to_extnat() const;

  friend bool operator==(const TExponent&, const TExponent&) = default;
};

/// Σ_k d_k t^k with the base-b digits of a (b-adic for negative a).
TruncatedSeries phi_b(std::int64_t a, std::int64_t b, std::size_t cap);

/// ord_t(φ_b(a1) − φ_b(a2)) agrees with ord_b(a1 − a2), both read through the cap.
bool congruence_check(std::int64_t b, std::int64_t a1, std::int64_t a2, std::size_t cap);

struct TOrdering {
  std::vector<TruncatedSeries> set;     // U with duplicates removed, first occurrences kept
  std::vector<std::size_t> indices;     // positions into `set`
  std::vector<TExponent> exponents;
};

/// Greedy ordering of a finite U ⊂ ℚ[[t]] of length k + 1. Canonical ties go
/// to the lowest index in the deduplicated U. Once U is used up the remaining
/// exponents are saturated and the index repeats the first element.
TOrdering t_ordering(const std::vector<TruncatedSeries>& u, std::size_t k, const TieBreakPolicy& policy = {},
                     std::optional<std::size_t> start = std::nullopt);

/// Σ_i c_i(t) x^i.
class SeriesPolynomial {
 public:
  explicit SeriesPolynomial(std::vector<TruncatedSeries> coeffs);

  const std::vector<TruncatedSeries>& coeffs() const { return coeffs_; }
  std::size_t cap() const;
  /// Largest i whose coefficient is nonzero up to the cap; nullopt for 0.
  std::optional<std::size_t> degree() const;

  friend SeriesPolynomial operator*(const SeriesPolynomial& a, const SeriesPolynomial& b);

 private:
  std::vector<TruncatedSeries> coeffs_;
};

/// q_k(x) = Π_j (x − f_j); the constant 1 for an empty prefix.
SeriesPolynomial build_qk(const std::vector<TruncatedSeries>& prefix, std::size_t cap);
TruncatedSeries eval_poly(const SeriesPolynomial& p, const TruncatedSeries& f);
bool is_t_primitive(const SeriesPolynomial& p);

/// Degree-`degree` primitive polynomial with integer coefficients in [−3, 3]
/// on x^i t^j, j <= 3, drawn by rejection sampling.
SeriesPolynomial random_primitive_polynomial(std::size_t degree, std::size_t cap, std::mt19937_64& rng);

struct MaxMinReport {
  TExponent alpha;                     // α_k(U) from the t-ordering
  TOrderValue witness_min;             // min_f ord_t(q_k(f))
  bool witness_equal = false;
  std::vector<TOrderValue> sample_mins;  // min_f ord_t(p(f)) per sampled p
  bool bound_holds = true;             // every sample_min <= α_k
  bool decidable = true;               // false if truncation left a comparison open
};

/// Checks min_f ord_t(q_k(f)) = α_k(U) and, for `samples` random primitive
/// polynomials of degree k, min_f ord_t(p(f)) <= α_k(U).
MaxMinReport maxmin_check(const std::vector<TruncatedSeries>& u, std::size_t k, std::size_t samples,
                          std::uint64_t seed);

}  // namespace genfact
