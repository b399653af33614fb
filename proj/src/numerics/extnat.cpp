#include "genfact/extnat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace genfact {

ExtNat::ExtNat(BigInt v) : value_(std::move(v)) {
  if (value_.sign() < 0) throw std::domain_error("ExtNat: negative value");
}

const BigInt& ExtNat::value() const {
  if (infinite_) throw std::domain_error("ExtNat: value of infinity");
  return value_;
}

std::uint64_t ExtNat::to_u64() const {
  if (infinite_) throw std::domain_error("ExtNat: value of infinity");
  if (value_ > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("ExtNat: exceeds 64 bits");
  return value_.convert_to<std::uint64_t>();
}

ExtNat& ExtNat::operator+=(const ExtNat& rhs) {
  if (infinite_) return *this;
  if (rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += rhs.value_;
  return *this;
}

ExtNat& ExtNat::operator-=(const ExtNat& rhs) {
  if (infinite_) throw std::domain_error("ExtNat: infinity minus a value is undefined");
  if (rhs.infinite_ || rhs.value_ > value_) throw std::domain_error("ExtNat: subtraction would go negative");
  value_ -= rhs.value_;
  return *this;
}

ExtNat& ExtNat::operator*=(std::uint64_t factor) {
  if (factor == 0) {
    infinite_ = false;
    value_ = 0;
  } else if (!infinite_) {
    value_ *= factor;
  }
  return *this;
}

bool operator==(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtNat::to_string() const { return infinite_ ? "inf" : value_.str(); }

std::string ExtNat::to_text() const { return infinite_ ? "∞" : value_.str(); }

ExtNat ExtNat::parse(const std::string& s) {
  if (s == "inf" || s == "∞") return infinity();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("ExtNat: cannot parse '" + s + "'");
  return ExtNat(BigInt(s));
}

std::ostream& operator<<(std::ostream& os, const ExtNat& v) { return os << v.to_string(); }

}  // namespace genfact
