#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genfact/extnat.hpp"

namespace genfact {

/// Canonical order on ℤ: by |a|, then nonnegative first (0, 1, -1, 2, -2, ...).
/// Every tie-break downstream uses this order.
constexpr bool canonical_less(std::int64_t a, std::int64_t b) {
  const std::uint64_t ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  const std::uint64_t ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  if (ua != ub) return ua < ub;
  return a > b;
}

enum class SetKind { ExplicitFinite, AllIntegers, NonnegativeIntegers, Primes, ArithmeticProgression, CustomPredicate };

struct ResidueStatus {
  enum class Kind { Empty, FiniteOnly, Infinite, Unknown };
  Kind kind = Kind::Empty;
  std::vector<std::int64_t> members;  // exact listing, FiniteOnly only; canonical order

  bool may_have_members() const { return kind != Kind::Empty && !(kind == Kind::FiniteOnly && members.empty()); }
};

/// User-supplied set: membership test plus a declared enumeration cap. The
/// engine can only scan |a| <= cap, so results over such sets are never
/// certified.
struct CustomSet {
  std::string name;
  std::function<bool(std::int64_t)> contains;
  std::int64_t cap = 0;
  ExtNat cardinality = ExtNat::infinity();
};

/// Immutable description of a nonempty subset S ⊆ ℤ.
class SetDescriptor {
 public:
  static SetDescriptor explicit_finite(std::vector<std::int64_t> elements);
  static SetDescriptor all_integers();
  static SetDescriptor nonnegative_integers();
  static SetDescriptor primes();
  /// {first + n·step : n >= 0}, step > 0.
  static SetDescriptor arithmetic_progression(std::int64_t first, std::int64_t step);
  static SetDescriptor custom(CustomSet spec);

  SetKind kind() const { return kind_; }
  bool is_finite() const { return cardinality().is_finite(); }
  ExtNat cardinality() const;

  /// Sorted ascending; ExplicitFinite only.
  const std::vector<std::int64_t>& elements() const;
  std::int64_t ap_first() const { return first_; }
  std::int64_t ap_step() const { return step_; }
  /// Largest |a| the engine may scan; only meaningful for CustomPredicate.
  std::int64_t enumeration_cap() const;

  bool contains(std::int64_t a) const;

  /// All elements with |a| <= bound in canonical order. CustomPredicate
  /// throws std::out_of_range when bound exceeds its cap.
  std::vector<std::int64_t> enumerate(std::int64_t bound) const;

  /// Canonical first element of S.
  std::int64_t first_element() const;

  /// Knowledge about S ∩ (r mod m), 0 <= r < m, m >= 2.
  ResidueStatus residue_status(std::int64_t r, std::int64_t m) const;

  /// Up to `count` elements of S ∩ (r mod m) not in `exclude`, in canonical
  /// order. Infinite classes always yield `count` elements.
  std::vector<std::int64_t> first_in_class(std::int64_t r, std::int64_t m, const std::vector<std::int64_t>& exclude,
                                           std::size_t count) const;
  std::optional<std::int64_t> pick_in_class(std::int64_t r, std::int64_t m,
                                            const std::vector<std::int64_t>& exclude) const;

  /// Round-trippable spec string (Z, N, P, ap:f,s, list:...), or the custom name.
  std::string describe() const;

 private:
  SetKind kind_ = SetKind::AllIntegers;
  std::vector<std::int64_t> elements_;
  std::int64_t first_ = 0;
  std::int64_t step_ = 1;
  std::shared_ptr<const CustomSet> custom_;
};

/// Grammar: Z | N | P | ap:<first>,<step> | list:<c1>,<c2>,... |
/// file:<path> (one integer per line, '#' comments) | range:<lo>..<hi>.
/// Throws std::invalid_argument on malformed input or an empty set.
SetDescriptor parse_set_spec(const std::string& spec);

/// Strict integer parsing shared by the spec parsers.
std::int64_t parse_int64(const std::string& text);

}  // namespace genfact
