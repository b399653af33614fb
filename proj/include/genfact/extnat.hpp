#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace genfact {

using BigInt = boost::multiprecision::cpp_int;

/// An element of N ∪ {+∞}. Finite values have unbounded precision.
///
/// Addition saturates at infinity. Subtraction is partial: `m - n` requires
/// `m` finite and `n <= m`, otherwise std::domain_error is thrown.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit ExtNat(BigInt v);

  static ExtNat infinity() {
    ExtNat r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_.is_zero(); }

  /// Throws std::domain_error when infinite.
  const BigInt& value() const;

  /// Narrowing accessor; throws std::overflow_error if the value does not
  /// fit and std::domain_error if infinite.
  std::uint64_t to_u64() const;

  ExtNat& operator+=(const ExtNat& rhs);
  ExtNat& operator-=(const ExtNat& rhs);
  /// Scaling by a natural factor; 0·∞ = 0.
  ExtNat& operator*=(std::uint64_t factor);

  friend ExtNat operator+(ExtNat lhs, const ExtNat& rhs) { return lhs += rhs; }
  friend ExtNat operator-(ExtNat lhs, const ExtNat& rhs) { return lhs -= rhs; }
  friend ExtNat operator*(ExtNat lhs, std::uint64_t f) { return lhs *= f; }

  friend bool operator==(const ExtNat& a, const ExtNat& b);
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

  /// "inf" or the decimal digits.
  std::string to_string() const;
  /// Like to_string but renders infinity as "∞".
  std::string to_text() const;
  /// Accepts decimal digits, "inf" or "∞".
  static ExtNat parse(const std::string& s);

 private:
  BigInt value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtNat& v);

}  // namespace genfact
