#include "genfact/factored.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "genfact/intsets.hpp"
#include "genfact/numerics.hpp"

namespace genfact {

FactoredNumber FactoredNumber::zero() {
  FactoredNumber f;
  f.exps_[0] = ExtNat::infinity();
  return f;
}

FactoredNumber FactoredNumber::from_exponents(const std::map<std::int64_t, ExtNat>& exps) {
  FactoredNumber f;
  for (const auto& [b, e] : exps) f.multiply_power(b, e);
  return f;
}

void FactoredNumber::multiply_power(std::int64_t base, const ExtNat& e) {
  if (base < 0) throw std::invalid_argument("factored number: negative base " + std::to_string(base));
  if (base == 0 && e.is_finite() && !e.is_zero())
    throw std::invalid_argument("factored number: base 0 needs exponent 0 or inf");
  if (is_zero() || e.is_zero() || base == 1) return;
  exps_[base] += e;
  normalize();
}

FactoredNumber& FactoredNumber::operator*=(const FactoredNumber& rhs) {
  for (const auto& [b, e] : rhs.exps_) multiply_power(b, e);
  return *this;
}

void FactoredNumber::normalize() {
  for (const auto& [b, e] : exps_)
    if (e.is_infinite() && b != 1) {
      exps_.clear();
      exps_[0] = ExtNat::infinity();
      return;
    }
}

ExtNat FactoredNumber::exponent(std::int64_t base) const {
  const auto it = exps_.find(base);
  return it == exps_.end() ? ExtNat(0) : it->second;
}

bool FactoredNumber::is_zero() const { return exps_.count(0) != 0; }

BigInt to_decimal(const FactoredNumber& f) {
  if (f.is_zero()) return 0;
  BigInt v = 1;
  for (const auto& [b, e] : f.exponents()) {
    const BigInt& n = e.value();
    if (n > 1'000'000) throw std::overflow_error("to_decimal: exponent too large to expand");
    v *= boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(n));
  }
  return v;
}

FactoredNumber refine_to_primes(const FactoredNumber& f) {
  if (f.is_zero()) return f;
  FactoredNumber out;
  for (const auto& [b, e] : f.exponents())
    for (const auto& [p, mult] : factorize(static_cast<std::uint64_t>(b)))
      out.multiply_power(static_cast<std::int64_t>(p), e * mult);
  return out;
}

bool exponentwise_divides(const FactoredNumber& f1, const FactoredNumber& f2) {
  if (f2.is_zero()) return true;
  if (f1.is_zero()) return false;
  for (const auto& [b, e] : f1.exponents())
    if (e > f2.exponent(b)) return false;
  return true;
}

bool integer_divides(const FactoredNumber& f1, const FactoredNumber& f2) {
  if (f2.is_zero()) return true;
  if (f1.is_zero()) return false;
  return exponentwise_divides(refine_to_primes(f1), refine_to_primes(f2));
}

std::string format_factored(const FactoredNumber& f) {
  if (f.is_zero()) return "0";
  if (f.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, e] : f.exponents()) {
    if (!first) os << " * ";
    first = false;
    os << b;
    if (!(e == ExtNat(1))) os << '^' << e.to_string();
  }
  return os.str();
}

FactoredNumber parse_factored(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t == "0") return FactoredNumber::zero();
  if (t == "1") return FactoredNumber{};
  if (t.empty()) throw std::invalid_argument("empty factored form");
  FactoredNumber f;
  std::int64_t prev = -1;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    const std::size_t star = std::min(t.find('*', pos), t.size());
    const std::string term = t.substr(pos, star - pos);
    const std::size_t caret = term.find('^');
    const std::int64_t base = parse_int64(term.substr(0, caret));
    const ExtNat e = caret == std::string::npos ? ExtNat(1) : ExtNat::parse(term.substr(caret + 1));
    if (base < 2 || base <= prev) throw std::invalid_argument("factored form needs ascending bases >= 2: '" + text + "'");
    prev = base;
    f.multiply_power(base, e);
    pos = star + 1;
  }
  return f;
}

std::string format_decimal(const BigInt& v, bool thousands_separators) {
  std::string s = v.str();
  if (!thousands_separators) return s;
  const bool neg = !s.empty() && s[0] == '-';
  std::string digits = neg ? s.substr(1) : s;
  std::string out;
  const std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i != 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return neg ? "-" + out : out;
}

std::optional<std::int64_t> primes_auto_cutoff(std::uint64_t k) {
  // φ(b) >= √(b/2), so φ(b) <= k forces b <= 2k².
  const std::uint64_t limit = std::max<std::uint64_t>(6, 2 * k * k);
  std::optional<std::int64_t> best;
  for (std::uint64_t b = 2; b <= limit; ++b)
    if (totient(b) + omega(b) <= k) best = static_cast<std::int64_t>(b);
  return best;
}

BaseSet BaseSet::explicit_list(std::vector<std::int64_t> bases) {
  for (std::int64_t b : bases)
    if (b < 0) throw std::invalid_argument("base set: negative base " + std::to_string(b));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  BaseSet t;
  t.kind_ = Kind::ExplicitList;
  t.list_ = std::move(bases);
  return t;
}

BaseSet BaseSet::range(std::int64_t lo, std::int64_t hi) {
  if (lo < 0) throw std::invalid_argument("base range must start at a nonnegative base");
  BaseSet t;
  t.kind_ = Kind::Range;
  t.lo_ = lo;
  t.hi_ = hi;
  return t;
}

BaseSet BaseSet::all_primes_up_to(std::optional<std::int64_t> cutoff) {
  BaseSet t;
  t.kind_ = Kind::AllPrimesUpTo;
  t.cutoff_ = cutoff;
  return t;
}

BaseSet BaseSet::all_bases_up_to(std::optional<std::int64_t> cutoff) {
  BaseSet t;
  t.kind_ = Kind::AllBasesUpTo;
  t.cutoff_ = cutoff;
  return t;
}

std::optional<std::int64_t> BaseSet::resolved_cutoff(const SetDescriptor& s, std::uint64_t k) const {
  if (kind_ == Kind::ExplicitList || kind_ == Kind::Range) return std::nullopt;
  if (cutoff_) return cutoff_;
  switch (s.kind()) {
    case SetKind::AllIntegers:
      return static_cast<std::int64_t>(k);
    case SetKind::Primes:
      return primes_auto_cutoff(k).value_or(1);
    default:
      throw std::invalid_argument("automatic base cutoff is only available for S = Z and S = P; give an explicit cutoff");
  }
}

std::vector<std::int64_t> BaseSet::resolve(const SetDescriptor& s, std::uint64_t k) const {
  switch (kind_) {
    case Kind::ExplicitList:
      return list_;
    case Kind::Range: {
      std::vector<std::int64_t> out;
      for (std::int64_t b = lo_; b <= hi_; ++b) out.push_back(b);
      return out;
    }
    case Kind::AllPrimesUpTo:
      return primes_up_to(*resolved_cutoff(s, k));
    case Kind::AllBasesUpTo: {
      std::vector<std::int64_t> out;
      const std::int64_t c = *resolved_cutoff(s, k);
      for (std::int64_t b = 2; b <= c; ++b) out.push_back(b);
      return out;
    }
  }
  return {};
}

std::string BaseSet::describe() const {
  switch (kind_) {
    case Kind::ExplicitList: {
      std::ostringstream os;
      for (std::size_t i = 0; i < list_.size(); ++i) os << (i ? "," : "") << list_[i];
      return list_.empty() ? std::string("{}") : os.str();
    }
    case Kind::Range:
      return std::to_string(lo_) + ".." + std::to_string(hi_);
    case Kind::AllPrimesUpTo:
      return "primes:" + (cutoff_ ? std::to_string(*cutoff_) : std::string("auto"));
    case Kind::AllBasesUpTo:
      return cutoff_ ? "upto:" + std::to_string(*cutoff_) : std::string("auto");
  }
  return "";
}

BaseSet parse_base_spec(const std::string& spec) {
  if (spec == "auto") return BaseSet::all_bases_up_to(std::nullopt);
  if (spec == "primes:auto") return BaseSet::all_primes_up_to(std::nullopt);
  if (spec.rfind("primes:", 0) == 0) {
    const std::int64_t c = parse_int64(spec.substr(7));
    if (c < 0) throw std::invalid_argument("prime cutoff must be nonnegative");
    return BaseSet::all_primes_up_to(c);
  }
  if (spec.rfind("upto:", 0) == 0) {
    const std::int64_t c = parse_int64(spec.substr(5));
    if (c < 0) throw std::invalid_argument("base cutoff must be nonnegative");
    return BaseSet::all_bases_up_to(c);
  }
  if (const auto dots = spec.find(".."); dots != std::string::npos)
    return BaseSet::range(parse_int64(spec.substr(0, dots)), parse_int64(spec.substr(dots + 2)));
  if (spec.empty()) throw std::invalid_argument("empty base spec");
  std::vector<std::int64_t> bases;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    bases.push_back(parse_int64(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return BaseSet::explicit_list(std::move(bases));
}

}  // namespace genfact
