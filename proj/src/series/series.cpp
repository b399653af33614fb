#include "genfact/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "genfact/numerics.hpp"

namespace genfact {

TruncatedSeries::TruncatedSeries(std::size_t cap) : coeffs_(cap) {
  if (cap == 0) throw std::invalid_argument("series cap must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t cap) : coeffs_(std::move(coeffs)) {
  if (cap == 0) throw std::invalid_argument("series cap must be positive");
  coeffs_.resize(cap);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t cap) { return monomial(c, 0, cap); }

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t degree, std::size_t cap) {
  TruncatedSeries s(cap);
  if (degree < cap) s.coeffs_[degree] = c;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  truncate(std::min(cap(), rhs.cap()));
  for (std::size_t i = 0; i < cap(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  truncate(std::min(cap(), rhs.cap()));
  for (std::size_t i = 0; i < cap(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t cap = std::min(a.cap(), b.cap());
  TruncatedSeries out(cap);
  for (std::size_t i = 0; i < cap; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < cap; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t cap = std::min(a.cap(), b.cap());
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + static_cast<std::ptrdiff_t>(cap), b.coeffs_.begin());
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < cap(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (any) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const Rational mag = c < 0 ? Rational(-c) : c;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
    any = true;
  }
  if (!any) os << '0';
  os << " + O(t^" << cap() << ')';
  return os.str();
}

std::string TOrderValue::to_string() const {
  return is_exact() ? std::to_string(value) : ">=" + std::to_string(value);
}

std::strong_ordering compare_strict(const TOrderValue& a, const TOrderValue& b) {
  if (!a.is_exact() && !b.is_exact()) throw std::domain_error("cannot order two values beyond the series cap");
  if (!a.is_exact()) return std::strong_ordering::greater;
  if (!b.is_exact()) return std::strong_ordering::less;
  return a.value <=> b.value;
}

TOrderValue ord_t(const TruncatedSeries& f) {
  for (std::size_t i = 0; i < f.cap(); ++i)
    if (!f.coeff(i).is_zero()) return TOrderValue::exact(i);
  return TOrderValue::at_least(f.cap());
}

TExponent& TExponent::operator+=(const TOrderValue& v) {
  if (saturated) return *this;
  if (v.is_exact()) value += v.value;
  else saturated = true;
  return *this;
}

std::string TExponent::to_string() const { return saturated ? "inf" : std::to_string(value); }

ExtNat TExponent::to_extnat() const { return saturated ? ExtNat::infinity() : ExtNat(value); }

TruncatedSeries phi_b(std::int64_t a, std::int64_t b, std::size_t cap) {
  const DigitExpansion d = digits(a, b, cap);
  std::vector<Rational> coeffs(d.digits.begin(), d.digits.end());
  return TruncatedSeries(std::move(coeffs), cap);
}

bool congruence_check(std::int64_t b, std::int64_t a1, std::int64_t a2, std::size_t cap) {
  const TOrderValue lhs = ord_t(phi_b(a1, b, cap) - phi_b(a2, b, cap));
  const ExtNat rhs = ord_b(b, a1 - a2);
  if (rhs >= ExtNat(cap)) return !lhs.is_exact();
  return lhs.is_exact() && ExtNat(lhs.value) == rhs;
}

namespace {

bool texp_less(const TExponent& a, const TExponent& b) {
  if (a.saturated) return false;
  if (b.saturated) return true;
  return a.value < b.value;
}

}  // namespace

TOrdering t_ordering(const std::vector<TruncatedSeries>& u, std::size_t k, const TieBreakPolicy& policy,
                     std::optional<std::size_t> start) {
  if (u.empty()) throw std::invalid_argument("t_ordering: U must be nonempty");
  TOrdering out;
  for (const auto& f : u)
    if (std::find(out.set.begin(), out.set.end(), f) == out.set.end()) out.set.push_back(f);
  const std::size_t n = out.set.size();
  std::mt19937_64 rng(policy.seed);
  std::vector<bool> used(n, false);

  auto value_of = [&](std::size_t i) {
    if (used[i]) return TExponent::saturation();
    TExponent v = TExponent::exact(0);
    for (std::size_t j : out.indices) v += ord_t(out.set[i] - out.set[j]);
    return v;
  };

  for (std::size_t step = 0; step <= k; ++step) {
    std::size_t pick = 0;
    TExponent best = TExponent::saturation();
    if (step == 0 && start) {
      if (*start >= n) throw std::out_of_range("t_ordering: start index outside deduplicated U");
      pick = *start;
      best = TExponent::exact(0);
    } else {
      std::vector<std::size_t> ties;
      for (std::size_t i = 0; i < n; ++i) {
        const TExponent v = value_of(i);
        if (texp_less(v, best)) {
          best = v;
          ties.clear();
        }
        if (v == best) ties.push_back(i);
      }
      if (best.saturated) ties = {0};
      pick = ties.front();
      if (policy.kind == TieBreakPolicy::Kind::SeededRandom && ties.size() > 1)
        pick = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
    }
    used[pick] = true;
    out.indices.push_back(pick);
    out.exponents.push_back(best);
  }
  return out;
}

SeriesPolynomial::SeriesPolynomial(std::vector<TruncatedSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  const std::size_t c = cap();
  for (auto& s : coeffs_)
    if (s.cap() != c) s = s + TruncatedSeries(c);  // bring every coefficient to the common cap
}

std::size_t SeriesPolynomial::cap() const {
  std::size_t c = coeffs_.front().cap();
  for (const auto& s : coeffs_) c = std::min(c, s.cap());
  return c;
}

std::optional<std::size_t> SeriesPolynomial::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (!coeffs_[i].is_zero()) return i;
  return std::nullopt;
}

SeriesPolynomial operator*(const SeriesPolynomial& a, const SeriesPolynomial& b) {
  const std::size_t cap = std::min(a.cap(), b.cap());
  std::vector<TruncatedSeries> out(a.coeffs_.size() + b.coeffs_.size() - 1, TruncatedSeries(cap));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return SeriesPolynomial(std::move(out));
}

SeriesPolynomial build_qk(const std::vector<TruncatedSeries>& prefix, std::size_t cap) {
  SeriesPolynomial q({TruncatedSeries::constant(1, cap)});
  for (const auto& f : prefix) q = q * SeriesPolynomial({-f, TruncatedSeries::constant(1, cap)});
  return q;
}

TruncatedSeries eval_poly(const SeriesPolynomial& p, const TruncatedSeries& f) {
  const auto& c = p.coeffs();
  TruncatedSeries acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * f + c[i];
  return acc;
}

bool is_t_primitive(const SeriesPolynomial& p) {
  return std::any_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const TruncatedSeries& s) { return !s.coeff(0).is_zero(); });
}

SeriesPolynomial random_primitive_polynomial(std::size_t degree, std::size_t cap, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  const std::size_t tdeg = std::min<std::size_t>(3, cap - 1);
  for (;;) {
    std::vector<TruncatedSeries> cs;
    for (std::size_t i = 0; i <= degree; ++i) {
      std::vector<Rational> c(tdeg + 1);
      for (auto& x : c) x = coeff(rng);
      cs.emplace_back(std::move(c), cap);
    }
    SeriesPolynomial p(std::move(cs));
    if (is_t_primitive(p) && p.degree() == degree) return p;
  }
}

MaxMinReport maxmin_check(const std::vector<TruncatedSeries>& u, std::size_t k, std::size_t samples,
                          std::uint64_t seed) {
  MaxMinReport rep;
  const TOrdering ord = t_ordering(u, k);
  rep.alpha = ord.exponents[k];
  std::size_t cap = ord.set.front().cap();
  for (const auto& f : ord.set) cap = std::min(cap, f.cap());

  auto min_over_u = [&](const SeriesPolynomial& p) {
    TOrderValue best = TOrderValue::at_least(cap);
    for (const auto& f : ord.set) {
      const TOrderValue v = ord_t(eval_poly(p, f));
      if (v.is_exact() && (!best.is_exact() || v.value < best.value)) best = v;
    }
    return best;
  };

  std::vector<TruncatedSeries> prefix;
  for (std::size_t j = 0; j < k; ++j) prefix.push_back(ord.set[ord.indices[j]]);
  rep.witness_min = min_over_u(build_qk(prefix, cap));
  if (rep.alpha.saturated) {
    rep.witness_equal = !rep.witness_min.is_exact();
  } else if (rep.witness_min.is_exact()) {
    rep.witness_equal = rep.witness_min.value == rep.alpha.value;
  } else {
    rep.witness_equal = false;
    if (rep.alpha.value >= cap) rep.decidable = false;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const TOrderValue m = min_over_u(random_primitive_polynomial(k, cap, rng));
    rep.sample_mins.push_back(m);
    if (rep.alpha.saturated) continue;
    if (m.is_exact()) {
      if (m.value > rep.alpha.value) rep.bound_holds = false;
    } else if (rep.alpha.value < cap) {
      rep.bound_holds = false;
    } else {
      rep.decidable = false;
    }
  }
  return rep;
}

}  // namespace genfact
