#include "genfact/intsets.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "genfact/numerics.hpp"

namespace genfact {

namespace {

using i128 = __int128;

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  // extended Euclid; gcd(a, m) == 1 assumed
  i128 old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  i128 inv = old_s % m;
  if (inv < 0) inv += m;
  return static_cast<std::int64_t>(inv);
}

bool in_exclude(const std::vector<std::int64_t>& exclude, std::int64_t a) {
  return std::find(exclude.begin(), exclude.end(), a) != exclude.end();
}

/// Walks {c + j·step} in canonical order: j ranges over ℤ when two_sided,
/// otherwise over j >= 0 (c is then the least element).
class ProgressionWalker {
 public:
  ProgressionWalker(std::int64_t c, std::int64_t step, bool two_sided) : step_(step) {
    if (two_sided) {
      right_ = mod_floor(c, step);
      left_ = right_ - step;
      lo_ = INT64_MIN;
    } else {
      lo_ = c;
      if (c >= 0) {
        right_ = c;
        left_ = c - 1;  // below lo_, left side exhausted
        left_done_ = true;
      } else {
        const std::int64_t t = (-(c + 1)) / step + 1;  // ceil(-c/step) for c < 0
        right_ = c + t * step;
        left_ = right_ - step;
      }
    }
    if (!left_done_ && left_ < lo_) left_done_ = true;
  }

  std::optional<std::int64_t> next() {
    if (right_done_ && left_done_) return std::nullopt;
    const bool take_right = left_done_ || (!right_done_ && canonical_less(right_, left_));
    if (take_right) {
      const std::int64_t v = right_;
      if (__builtin_add_overflow(right_, step_, &right_)) right_done_ = true;
      return v;
    }
    const std::int64_t v = left_;
    if (__builtin_sub_overflow(left_, step_, &left_) || left_ < lo_) left_done_ = true;
    return v;
  }

 private:
  std::int64_t step_;
  std::int64_t right_ = 0;
  std::int64_t left_ = 0;
  std::int64_t lo_ = 0;
  bool left_done_ = false;
  bool right_done_ = false;
};

void sort_canonical(std::vector<std::int64_t>& xs) { std::sort(xs.begin(), xs.end(), canonical_less); }

}  // namespace

std::int64_t parse_int64(const std::string& text) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t\r"));
  t.erase(t.find_last_not_of(" \t\r") + 1);
  std::int64_t v = 0;
  const char* begin = t.data();
  if (!t.empty() && t[0] == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw std::invalid_argument("not an integer: '" + text + "'");
  return v;
}

SetDescriptor SetDescriptor::explicit_finite(std::vector<std::int64_t> elements) {
  if (elements.empty()) throw std::invalid_argument("set must be nonempty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SetDescriptor s;
  s.kind_ = SetKind::ExplicitFinite;
  s.elements_ = std::move(elements);
  return s;
}

SetDescriptor SetDescriptor::all_integers() {
  SetDescriptor s;
  s.kind_ = SetKind::AllIntegers;
  return s;
}

SetDescriptor SetDescriptor::nonnegative_integers() {
  SetDescriptor s;
  s.kind_ = SetKind::NonnegativeIntegers;
  s.first_ = 0;
  s.step_ = 1;
  return s;
}

SetDescriptor SetDescriptor::primes() {
  SetDescriptor s;
  s.kind_ = SetKind::Primes;
  return s;
}

SetDescriptor SetDescriptor::arithmetic_progression(std::int64_t first, std::int64_t step) {
  if (step <= 0) throw std::invalid_argument("arithmetic progression step must be positive");
  SetDescriptor s;
  s.kind_ = SetKind::ArithmeticProgression;
  s.first_ = first;
  s.step_ = step;
  return s;
}

SetDescriptor SetDescriptor::custom(CustomSet spec) {
  if (!spec.contains) throw std::invalid_argument("custom set needs a membership test");
  if (spec.cap < 0) throw std::invalid_argument("custom set cap must be nonnegative");
  SetDescriptor s;
  s.kind_ = SetKind::CustomPredicate;
  s.custom_ = std::make_shared<const CustomSet>(std::move(spec));
  if (s.enumerate(s.custom_->cap).empty()) throw std::invalid_argument("custom set has no elements within its cap");
  return s;
}

ExtNat SetDescriptor::cardinality() const {
  switch (kind_) {
    case SetKind::ExplicitFinite:
      return ExtNat(static_cast<std::uint64_t>(elements_.size()));
    case SetKind::CustomPredicate:
      return custom_->cardinality;
    default:
      return ExtNat::infinity();
  }
}

const std::vector<std::int64_t>& SetDescriptor::elements() const {
  if (kind_ != SetKind::ExplicitFinite) throw std::logic_error("elements(): not an explicit finite set");
  return elements_;
}

std::int64_t SetDescriptor::enumeration_cap() const {
  return kind_ == SetKind::CustomPredicate ? custom_->cap : INT64_MAX;
}

bool SetDescriptor::contains(std::int64_t a) const {
  switch (kind_) {
    case SetKind::ExplicitFinite:
      return std::binary_search(elements_.begin(), elements_.end(), a);
    case SetKind::AllIntegers:
      return true;
    case SetKind::NonnegativeIntegers:
      return a >= 0;
    case SetKind::Primes:
      return is_prime(a);
    case SetKind::ArithmeticProgression:
      return a >= first_ && mod_floor(a - first_, step_) == 0;
    case SetKind::CustomPredicate:
      return custom_->contains(a);
  }
  return false;
}

std::vector<std::int64_t> SetDescriptor::enumerate(std::int64_t bound) const {
  if (bound < 0) return {};
  std::vector<std::int64_t> out;
  switch (kind_) {
    case SetKind::ExplicitFinite:
      for (std::int64_t a : elements_)
        if (a >= -bound && a <= bound) out.push_back(a);
      break;
    case SetKind::AllIntegers:
      out.push_back(0);
      for (std::int64_t a = 1; a <= bound; ++a) {
        out.push_back(a);
        out.push_back(-a);
      }
      return out;
    case SetKind::NonnegativeIntegers:
      for (std::int64_t a = 0; a <= bound; ++a) out.push_back(a);
      return out;
    case SetKind::Primes:
      return primes_up_to(bound);
    case SetKind::ArithmeticProgression: {
      std::int64_t a = first_;
      if (a < -bound) a += ((-bound - a) + step_ - 1) / step_ * step_;
      for (; a <= bound; a += step_) out.push_back(a);
      break;
    }
    case SetKind::CustomPredicate:
      if (bound > custom_->cap)
        throw std::out_of_range("custom set '" + custom_->name + "' cannot be enumerated beyond |a| <= " +
                                std::to_string(custom_->cap));
      for (std::int64_t a = 0; a <= bound; ++a) {
        if (custom_->contains(a)) out.push_back(a);
        if (a != 0 && custom_->contains(-a)) out.push_back(-a);
      }
      return out;
  }
  sort_canonical(out);
  return out;
}

std::int64_t SetDescriptor::first_element() const {
  switch (kind_) {
    case SetKind::ExplicitFinite: {
      return *std::min_element(elements_.begin(), elements_.end(), canonical_less);
    }
    case SetKind::AllIntegers:
    case SetKind::NonnegativeIntegers:
      return 0;
    case SetKind::Primes:
      return 2;
    case SetKind::ArithmeticProgression:
      return *ProgressionWalker(first_, step_, false).next();
    case SetKind::CustomPredicate:
      return enumerate(custom_->cap).front();
  }
  return 0;
}

ResidueStatus SetDescriptor::residue_status(std::int64_t r, std::int64_t m) const {
  if (m < 2 || r < 0 || r >= m) throw std::invalid_argument("residue_status: need 0 <= r < m, m >= 2");
  ResidueStatus st;
  switch (kind_) {
    case SetKind::ExplicitFinite:
      for (std::int64_t a : elements_)
        if (mod_floor(a, m) == r) st.members.push_back(a);
      st.kind = st.members.empty() ? ResidueStatus::Kind::Empty : ResidueStatus::Kind::FiniteOnly;
      sort_canonical(st.members);
      return st;
    case SetKind::AllIntegers:
      st.kind = ResidueStatus::Kind::Infinite;
      return st;
    case SetKind::Primes: {
      if (std::gcd(r, m) == 1) {
        st.kind = ResidueStatus::Kind::Infinite;  // Dirichlet
        return st;
      }
      // A prime sharing a factor with m divides m.
      for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(m)))
        if (mod_floor(static_cast<std::int64_t>(p), m) == r) st.members.push_back(static_cast<std::int64_t>(p));
      st.kind = st.members.empty() ? ResidueStatus::Kind::Empty : ResidueStatus::Kind::FiniteOnly;
      return st;
    }
    case SetKind::NonnegativeIntegers:
    case SetKind::ArithmeticProgression: {
      const std::int64_t g = std::gcd(step_, m);
      st.kind = mod_floor(r - first_, g) == 0 ? ResidueStatus::Kind::Infinite : ResidueStatus::Kind::Empty;
      return st;
    }
    case SetKind::CustomPredicate:
      st.kind = ResidueStatus::Kind::Unknown;
      return st;
  }
  return st;
}

std::vector<std::int64_t> SetDescriptor::first_in_class(std::int64_t r, std::int64_t m,
                                                        const std::vector<std::int64_t>& exclude,
                                                        std::size_t count) const {
  std::vector<std::int64_t> out;
  if (count == 0) return out;
  auto take_from = [&](ProgressionWalker walker, bool prime_filter) {
    while (out.size() < count) {
      const auto v = walker.next();
      if (!v) break;
      if (prime_filter && !is_prime(*v)) continue;
      if (!in_exclude(exclude, *v)) out.push_back(*v);
    }
  };
  switch (kind_) {
    case SetKind::AllIntegers:
      take_from(ProgressionWalker(r, m, true), false);
      return out;
    case SetKind::NonnegativeIntegers:
    case SetKind::ArithmeticProgression: {
      const ResidueStatus st = residue_status(r, m);
      if (st.kind == ResidueStatus::Kind::Empty) return out;
      const std::int64_t g = std::gcd(step_, m);
      const std::int64_t mg = m / g;
      const i128 n0 = mg == 1 ? 0
                              : static_cast<i128>((r - first_) / g % mg + mg) % mg * inverse_mod(step_ / g, mg) % mg;
      const std::int64_t c0 = static_cast<std::int64_t>(first_ + n0 * step_);
      take_from(ProgressionWalker(c0, step_ * mg, false), false);
      return out;
    }
    case SetKind::Primes: {
      const ResidueStatus st = residue_status(r, m);
      if (st.kind == ResidueStatus::Kind::Infinite) {
        take_from(ProgressionWalker(r, m, false), true);
        return out;
      }
      for (std::int64_t a : st.members)
        if (out.size() < count && !in_exclude(exclude, a)) out.push_back(a);
      return out;
    }
    case SetKind::ExplicitFinite:
      for (std::int64_t a : residue_status(r, m).members)
        if (out.size() < count && !in_exclude(exclude, a)) out.push_back(a);
      return out;
    case SetKind::CustomPredicate:
      for (std::int64_t a : enumerate(custom_->cap))
        if (out.size() < count && mod_floor(a, m) == r && !in_exclude(exclude, a)) out.push_back(a);
      return out;
  }
  return out;
}

std::optional<std::int64_t> SetDescriptor::pick_in_class(std::int64_t r, std::int64_t m,
                                                         const std::vector<std::int64_t>& exclude) const {
  auto found = first_in_class(r, m, exclude, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::string SetDescriptor::describe() const {
  switch (kind_) {
    case SetKind::ExplicitFinite: {
      std::ostringstream os;
      os << "list:";
      for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
      return os.str();
    }
    case SetKind::AllIntegers:
      return "Z";
    case SetKind::NonnegativeIntegers:
      return "N";
    case SetKind::Primes:
      return "P";
    case SetKind::ArithmeticProgression:
      return "ap:" + std::to_string(first_) + "," + std::to_string(step_);
    case SetKind::CustomPredicate:
      return "custom:" + custom_->name;
  }
  return "";
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

SetDescriptor parse_set_spec(const std::string& spec) {
  if (spec == "Z") return SetDescriptor::all_integers();
  if (spec == "N") return SetDescriptor::nonnegative_integers();
  if (spec == "P") return SetDescriptor::primes();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown set spec '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (head == "ap") {
    const auto parts = split(body, ',');
    if (parts.size() != 2) throw std::invalid_argument("ap spec needs ap:<first>,<step>");
    return SetDescriptor::arithmetic_progression(parse_int64(parts[0]), parse_int64(parts[1]));
  }
  if (head == "list") {
    std::vector<std::int64_t> xs;
    for (const auto& p : split(body, ',')) xs.push_back(parse_int64(p));
    return SetDescriptor::explicit_finite(std::move(xs));
  }
  if (head == "range") {
    const auto dots = body.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("range spec needs range:<lo>..<hi>");
    const std::int64_t lo = parse_int64(body.substr(0, dots));
    const std::int64_t hi = parse_int64(body.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("range spec is empty");
    if (hi - lo > 10'000'000) throw std::invalid_argument("range spec too large");
    std::vector<std::int64_t> xs;
    for (std::int64_t a = lo; a <= hi; ++a) xs.push_back(a);
    return SetDescriptor::explicit_finite(std::move(xs));
  }
  if (head == "file") {
    std::ifstream in(body);
    if (!in) throw std::invalid_argument("cannot open set file '" + body + "'");
    std::vector<std::int64_t> xs;
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      xs.push_back(parse_int64(line));
    }
    return SetDescriptor::explicit_finite(std::move(xs));
  }
  throw std::invalid_argument("unknown set spec '" + spec + "'");
}

}  // namespace genfact
