#include "genfact/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "genfact/closedforms.hpp"
#include "genfact/factorials.hpp"
#include "genfact/numerics.hpp"
#include "genfact/series.hpp"
#include "genfact/tables.hpp"

namespace genfact {

namespace {

using Vec = std::vector<std::int64_t>;

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : report_(r) {}
  void check(bool ok, std::string description, std::string detail = {}) {
    report_.instances.push_back({report_.instances.size(), std::move(description), ok, std::move(detail)});
  }

 private:
  SuiteReport& report_;
};

std::size_t scaled(double scale, std::size_t base) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(static_cast<double>(base) * scale)));
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Vec random_set(std::mt19937_64& rng, std::size_t max_size, std::int64_t lo, std::int64_t hi) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_size)));
  std::set<std::int64_t> s;
  while (s.size() < n) s.insert(uniform(rng, lo, hi));
  return Vec(s.begin(), s.end());
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    if constexpr (std::is_same_v<T, ExtNat>) os << xs[i].to_string();
    else if constexpr (std::is_same_v<T, TExponent>) os << xs[i].to_string();
    else os << xs[i];
  }
  os << ']';
  return os.str();
}

/// Built-in infinite sets exercised alongside random finite ones.
std::vector<SetDescriptor> infinite_sets() {
  return {SetDescriptor::all_integers(), SetDescriptor::primes(), SetDescriptor::nonnegative_integers(),
          SetDescriptor::arithmetic_progression(1, 4), SetDescriptor::arithmetic_progression(-5, 6)};
}

ExponentOptions greedy_options(const VerifyOptions& o) {
  ExponentOptions e;
  e.force_greedy = true;
  e.limits = o.limits;
  return e;
}

std::vector<TruncatedSeries> phi_image(const Vec& s, std::int64_t b, std::size_t cap) {
  std::vector<TruncatedSeries> u;
  for (std::int64_t a : s) u.push_back(phi_b(a, b, cap));
  return u;
}

/// Smallest cap above every pairwise valuation, so no difference saturates.
std::size_t transport_cap(const Vec& s, std::int64_t b) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) m = std::max(m, ord_b(b, s[i] - s[j]).to_u64());
  return static_cast<std::size_t>(m) + 2;
}

std::vector<TruncatedSeries> random_series_set(std::mt19937_64& rng, std::size_t max_size, std::size_t cap) {
  std::vector<TruncatedSeries> u;
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_size)));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c(cap);
    for (std::size_t d = 0; d < cap; ++d)
      c[d] = d < 4 ? Rational(uniform(rng, -2, 2)) : Rational(uniform(rng, 0, 1));
    u.emplace_back(std::move(c), cap);
  }
  return u;
}

// ---------------------------------------------------------------------------

void suite_well_definedness(const VerifyOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed);
  const std::size_t sets = scaled(o.scale, 120);
  for (std::size_t i = 0; i < sets; ++i) {
    const Vec s = random_set(rng, 12, -50, 50);
    const auto S = SetDescriptor::explicit_finite(s);
    const std::int64_t b = uniform(rng, 2, 12);
    const std::size_t k = s.size() - 1;
    const auto ref = b_ordering(S, b, k, TieBreakPolicy::canonical(), std::nullopt, o.limits);
    bool ok = ref.all_certified();
    std::string detail = "canonical " + join(ref.exponents);
    for (int v = 0; v < 5; ++v) {
      const auto policy = TieBreakPolicy::seeded(rng());
      const std::int64_t start = s[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(k)))];
      const auto ord = b_ordering(S, b, k, policy, start, o.limits);
      const bool same = ord.exponents == ref.exponents && evaluate_test_sequence(ord.elements, b) == ord.exponents;
      if (!same) detail += "; " + ord.strategy + " gave " + join(ord.exponents);
      ok = ok && same;
    }
    rec.check(ok, S.describe() + " b=" + std::to_string(b) + " (6 orderings)", detail);
  }
  // infinite sets: random tie-breaks against the canonical ordering
  for (const auto& S : infinite_sets())
    for (std::int64_t b : {2, 3, 4, 6, 10}) {
      const auto ref = b_ordering(S, b, 15, TieBreakPolicy::canonical(), std::nullopt, o.limits);
      bool ok = ref.all_certified();
      for (int v = 0; v < 3; ++v) {
        const auto ord = b_ordering(S, b, 15, TieBreakPolicy::seeded(rng()), std::nullopt, o.limits);
        ok = ok && ord.exponents == ref.exponents && ord.all_certified();
      }
      rec.check(ok, S.describe() + " b=" + std::to_string(b) + " k=15 (4 orderings)", join(ref.exponents));
    }
}

void suite_majorization(const VerifyOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed ^ 0x6d616a6fULL);
  const std::size_t count = scaled(o.scale, 240);
  auto sets = infinite_sets();
  for (std::size_t i = 0; i < count; ++i) {
    const bool finite = i % 2 == 0;
    const SetDescriptor S =
        finite ? SetDescriptor::explicit_finite(random_set(rng, 12, -40, 40)) : sets[i / 2 % sets.size()];
    const Vec pool = S.enumerate(finite ? 40 : 200);
    const std::int64_t b = uniform(rng, 2, 12);
    Vec seq(static_cast<std::size_t>(uniform(rng, 1, 10)));
    for (auto& a : seq) a = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
    const auto rep = check_majorization(S, b, seq, greedy_options(o));
    rec.check(rep.holds() && rep.invariants_certified,
              S.describe() + " b=" + std::to_string(b) + " seq=" + join(seq),
              "sums " + join(rep.sequence_partial_sums) + " vs " + join(rep.invariant_partial_sums));
  }
  // equality for initial b-orderings
  for (std::size_t i = 0; i < scaled(o.scale, 20); ++i) {
    const auto S = i % 2 ? SetDescriptor::explicit_finite(random_set(rng, 12, -40, 40)) : sets[i / 2 % sets.size()];
    const std::int64_t b = uniform(rng, 2, 12);
    const auto ord = b_ordering(S, b, 8, TieBreakPolicy::seeded(rng()), std::nullopt, o.limits);
    const auto rep = check_majorization(S, b, ord.elements, greedy_options(o));
    const bool all_equal = std::all_of(rep.equal_at.begin(), rep.equal_at.end(), [](bool e) { return e; });
    rec.check(rep.holds() && all_equal, "b-ordering equality " + S.describe() + " b=" + std::to_string(b),
              join(rep.sequence_partial_sums));
  }
  // P-test sequences obey the residue-class lower bound
  const Vec primes = primes_up_to(300);
  for (std::size_t i = 0; i < scaled(o.scale, 40); ++i) {
    const std::int64_t b = uniform(rng, 2, 12);
    Vec seq(static_cast<std::size_t>(uniform(rng, 4, 14)));
    for (auto& a : seq) a = primes[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(primes.size()) - 1))];
    const auto vals = evaluate_test_sequence(seq, b);
    const std::uint64_t w = omega(static_cast<std::uint64_t>(b));
    bool ok = true;
    ExtNat running(0);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      running += vals[k];
      if (k >= w && running < ExtNat(p_test_lower_bound(k, b))) ok = false;
    }
    rec.check(ok, "P-test lower bound b=" + std::to_string(b) + " seq=" + join(seq), join(vals));
  }
  // U-test sequences in Q[[t]]
  for (std::size_t i = 0; i < scaled(o.scale, 30); ++i) {
    const auto u = random_series_set(rng, 7, o.series_cap);
    const auto ord = t_ordering(u, u.size() - 1);
    const std::size_t n = ord.set.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(n))));
    for (auto& x : idx) x = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    TExponent seq_sum = TExponent::exact(0), inv_sum = TExponent::exact(0);
    bool ok = true;
    for (std::size_t m = 0; m < idx.size(); ++m) {
      TExponent v = TExponent::exact(0);
      for (std::size_t j = 0; j < m; ++j) v += ord_t(ord.set[idx[m]] - ord.set[idx[j]]);
      seq_sum = v.saturated ? TExponent::saturation() : (seq_sum.saturated ? seq_sum : TExponent::exact(seq_sum.value + v.value));
      const TExponent& a = ord.exponents[m];
      inv_sum = a.saturated ? TExponent::saturation() : (inv_sum.saturated ? inv_sum : TExponent::exact(inv_sum.value + a.value));
      if (!seq_sum.saturated && (inv_sum.saturated || seq_sum.value < inv_sum.value)) ok = false;
    }
    rec.check(ok, "U-test sequence |U|=" + std::to_string(n), join(ord.exponents));
  }
}

void suite_superadditivity(const VerifyOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed ^ 0x73757065ULL);
  const auto opts = greedy_options(o);
  for (std::size_t i = 0; i < scaled(o.scale, 100); ++i) {
    const Vec s2 = random_set(rng, 12, -40, 40);
    Vec s1;
    for (std::int64_t a : s2)
      if (rng() % 3 != 0) s1.push_back(a);
    if (s1.empty()) s1.push_back(s2.front());
    const auto S1 = SetDescriptor::explicit_finite(s1);
    const auto S2 = SetDescriptor::explicit_finite(s2);
    const std::int64_t b = uniform(rng, 2, 12);
    const std::size_t k = s2.size() + 1;
    const auto a1 = exponent_sequence(S1, b, k, opts).values;
    const auto a2 = exponent_sequence(S2, b, k, opts).values;
    const auto z = exponent_sequence(S2, 0, k, opts).values;
    const auto one = exponent_sequence(S2, 1, k, opts).values;
    bool ok = true;
    for (std::size_t x = 0; x <= k; ++x) {
      for (std::size_t y = 0; x + y <= k; ++y)
        if (a2[x + y] < a2[x] + a2[y]) ok = false;
      if (a1[x] < a2[x]) ok = false;                   // S1 ⊆ S2
      if (z[x] > a2[x] || a2[x] > one[x]) ok = false;  // extreme bases
    }
    rec.check(ok, S1.describe() + " ⊆ " + S2.describe() + " b=" + std::to_string(b), join(a1) + " vs " + join(a2));
  }
  for (const auto& S : infinite_sets())
    for (std::int64_t b = 2; b <= 12; ++b) {
      const auto a = exponent_sequence(S, b, 24, opts);
      bool ok = a.certified;
      for (std::size_t x = 0; x <= 24; ++x)
        for (std::size_t y = 0; x + y <= 24; ++y)
          if (a.values[x + y] < a.values[x] + a.values[y]) ok = false;
      rec.check(ok, "superadditive " + S.describe() + " b=" + std::to_string(b), join(a.values));
    }
  // nested infinite sets: P ⊆ N ⊆ Z and 1+4N ⊆ N
  const std::vector<std::pair<SetDescriptor, SetDescriptor>> nests{
      {SetDescriptor::primes(), SetDescriptor::nonnegative_integers()},
      {SetDescriptor::nonnegative_integers(), SetDescriptor::all_integers()},
      {SetDescriptor::arithmetic_progression(1, 4), SetDescriptor::nonnegative_integers()}};
  for (const auto& [small, big] : nests)
    for (std::int64_t b = 2; b <= 12; ++b) {
      const auto as = exponent_sequence(small, b, 20, opts).values;
      const auto ab = exponent_sequence(big, b, 20, opts).values;
      bool ok = true;
      for (std::size_t k = 0; k <= 20; ++k) ok = ok && as[k] >= ab[k];
      rec.check(ok, "antitone " + small.describe() + " ⊆ " + big.describe() + " b=" + std::to_string(b),
                join(as) + " vs " + join(ab));
    }
  // Q[[t]]: superadditivity and subset antitonicity
  for (std::size_t i = 0; i < scaled(o.scale, 40); ++i) {
    auto u2 = random_series_set(rng, 8, o.series_cap);
    std::vector<TruncatedSeries> u1(u2.begin(), u2.begin() + static_cast<std::ptrdiff_t>(1 + rng() % u2.size()));
    const auto o2 = t_ordering(u2, u2.size() - 1);
    const auto o1 = t_ordering(u1, u2.size() - 1);
    const std::size_t n = o2.set.size();
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; x + y < n; ++y) {
        const auto& lhs = o2.exponents[x + y];
        if (!lhs.saturated && lhs.value < o2.exponents[x].value + o2.exponents[y].value) ok = false;
      }
      const auto& e1 = o1.exponents[x];
      const auto& e2 = o2.exponents[x];
      if (!e1.saturated && (e2.saturated || e1.value < e2.value)) ok = false;
    }
    rec.check(ok, "series |U1|=" + std::to_string(o1.set.size()) + " |U2|=" + std::to_string(n),
              join(o1.exponents) + " vs " + join(o2.exponents));
  }
}

void suite_monotonicity(const VerifyOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed ^ 0x6d6f6e6fULL);
  for (std::size_t i = 0; i < scaled(o.scale, 100); ++i) {
    const auto S = i % 3 == 0 ? infinite_sets()[i / 3 % 5] : SetDescriptor::explicit_finite(random_set(rng, 12, -50, 50));
    const std::int64_t b = uniform(rng, 2, 12);
    const auto ord = b_ordering(S, b, 14, TieBreakPolicy::seeded(rng()), std::nullopt, o.limits);
    bool ok = ord.exponents.front() == ExtNat(0);
    for (std::size_t k = 1; k < ord.exponents.size(); ++k) ok = ok && ord.exponents[k] >= ord.exponents[k - 1];
    const auto mult = evaluate_multiplicative(ord.elements, b);
    for (std::size_t k = 0; k < mult.size(); ++k) {
      ok = ok && ord.exponents[k] <= mult[k];
      if (is_prime(b)) ok = ok && ord.exponents[k] == mult[k];
    }
    rec.check(ok, S.describe() + " b=" + std::to_string(b), join(ord.exponents) + " mult " + join(mult));
  }
  // the natural order 0,1,2,... attains α_k(Z, b) for all b at once
  Vec nat;
  for (std::int64_t a = 0; a <= 100; ++a) nat.push_back(a);
  for (std::int64_t b = 2; b <= 30; ++b) {
    const auto vals = evaluate_test_sequence(nat, b);
    bool ok = true;
    for (std::size_t k = 0; k < nat.size(); ++k) ok = ok && vals[k] == ExtNat(alpha_Z(k, b));
    rec.check(ok, "natural order on Z, b=" + std::to_string(b), join(vals));
  }
  for (std::size_t i = 0; i < scaled(o.scale, 30); ++i) {
    const auto u = random_series_set(rng, 9, o.series_cap);
    const auto ord = t_ordering(u, u.size() - 1, TieBreakPolicy::seeded(rng()));
    bool ok = true;
    for (std::size_t k = 1; k < ord.exponents.size(); ++k) {
      const auto& a = ord.exponents[k - 1];
      const auto& c = ord.exponents[k];
      if (a.saturated ? !c.saturated : (!c.saturated && c.value < a.value)) ok = false;
    }
    rec.check(ok, "t-ordering nondecreasing |U|=" + std::to_string(ord.set.size()), join(ord.exponents));
  }
}

void suite_divisibility(const VerifyOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed ^ 0x64697669ULL);
  const auto opts = greedy_options(o);
  for (std::size_t i = 0; i < scaled(o.scale, 100); ++i) {
    const Vec s2 = random_set(rng, 10, -30, 30);
    Vec s1;
    for (std::int64_t a : s2)
      if (rng() % 2) s1.push_back(a);
    if (s1.empty()) s1.push_back(s2.back());
    const auto S1 = SetDescriptor::explicit_finite(s1);
    const auto S2 = SetDescriptor::explicit_finite(s2);
    Vec t1, t2;
    for (std::int64_t b = 0; b <= 12; ++b) {
      const auto r = rng() % 3;
      if (r == 0) t1.push_back(b);
      if (r <= 1) t2.push_back(b);
    }
    const std::uint64_t k = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<std::int64_t>(s1.size()) - 1));
    bool ok = true;
    std::string detail;
    // monotone in T, antitone in S
    const auto f_s2_t1 = factorial(S2, t1, k, opts).value;
    const auto f_s2_t2 = factorial(S2, t2, k, opts).value;
    const auto f_s1_t2 = factorial(S1, t2, k, opts).value;
    ok = ok && exponentwise_divides(f_s2_t1, f_s2_t2) && exponentwise_divides(f_s2_t2, f_s1_t2) &&
         integer_divides(f_s2_t2, f_s1_t2);
    // integrality of [n] and binomials, telescoping
    FactoredNumber tele;
    for (std::uint64_t n = 1; n <= k; ++n) {
      const auto g = gen_integer(S2, t2, n, opts).value;
      tele *= g;
      ok = ok && !g.is_zero();
      for (std::uint64_t l = 0; l <= n; ++l) {
        const auto c = gen_binomial(S2, t2, n, l, opts).value;
        ok = ok && !c.is_zero();
      }
    }
    ok = ok && tele == f_s2_t2;
    // pairwise valuation products on a random sequence from S2
    Vec seq(static_cast<std::size_t>(uniform(rng, 1, 6)));
    for (auto& a : seq) a = s2[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(s2.size()) - 1))];
    const auto pm = pairwise_multiple_check(S2, t2, seq, opts);
    ok = ok && pm.holds;
    detail = "k!=" + format_factored(f_s2_t2) + " pairwise " + format_factored(pm.pairwise) + " vs " +
             format_factored(pm.factorial_product);
    rec.check(ok, S1.describe() + " ⊆ " + S2.describe() + " k=" + std::to_string(k), detail);
  }
  // infinite sets with explicit base cutoffs
  for (const auto& S : infinite_sets()) {
    Vec T;
    for (std::int64_t b = 2; b <= 16; ++b) T.push_back(b);
    bool ok = true;
    for (std::uint64_t n = 1; n <= 16; ++n)
      for (std::uint64_t l = 0; l <= n; ++l) {
        const auto c = gen_binomial(S, T, n, l);
        ok = ok && !c.value.is_zero() && c.certified;
      }
    rec.check(ok, "binomial integrality " + S.describe() + " T=2..16, k<=16");
  }
  // arithmetic progressions with step > 1 have 1! > 1
  for (std::int64_t d = 2; d <= 6; ++d) {
    const auto S = SetDescriptor::arithmetic_progression(1, d);
    const auto f1 = factorial(S, {d}, 1).value;
    rec.check(to_decimal(f1) > 1, "1! > 1 for " + S.describe(), format_factored(f1));
  }
  // Knuth-Wilf: [n]_{Z,N} is not a regular divisibility sequence
  const auto Z = SetDescriptor::all_integers();
  auto integer_Z = [&](std::uint64_t n) {
    Vec T;
    for (std::int64_t b = 2; b <= static_cast<std::int64_t>(n); ++b) T.push_back(b);
    return to_decimal(gen_integer(Z, T, n).value);
  };
  const BigInt i2 = integer_Z(2), i4 = integer_Z(4), i6 = integer_Z(6);
  const BigInt g = boost::multiprecision::gcd(i4, i6);
  rec.check(i4 == 16 && i6 == 36 && g == 4 && i2 == 2 && g != i2, "gcd([4],[6]) != [2] over (Z, N)",
            "gcd(" + i4.str() + "," + i6.str() + ")=" + g.str() + " vs [2]=" + i2.str());
}

void suite_transport(const VerifyOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed ^ 0x7472616eULL);
  for (std::size_t i = 0; i < scaled(o.scale, 100); ++i) {
    const Vec s = random_set(rng, 10, -200, 200);
    const std::int64_t b = uniform(rng, 2, 10);
    const std::size_t cap = std::max(transport_cap(s, b), o.series_cap);
    const auto t = t_ordering(phi_image(s, b, cap), s.size() - 1, TieBreakPolicy::seeded(rng()));
    const auto ref = b_ordering(SetDescriptor::explicit_finite(s), b, s.size() - 1);
    bool ok = t.set.size() == s.size();
    for (std::size_t k = 0; ok && k < s.size(); ++k) ok = t.exponents[k].to_extnat() == ref.exponents[k];
    rec.check(ok, "phi_" + std::to_string(b) + " of " + SetDescriptor::explicit_finite(s).describe() + " cap=" + std::to_string(cap),
              join(t.exponents) + " vs " + join(ref.exponents));
  }
  for (std::size_t i = 0; i < scaled(o.scale, 40); ++i) {
    const std::int64_t b = uniform(rng, 2, 16);
    bool ok = true;
    for (int j = 0; j < 50; ++j) {
      const std::int64_t a1 = uniform(rng, -100000, 100000);
      const std::int64_t a2 = rng() % 2 ? uniform(rng, -100000, 100000) : a1 + checked_pow(b, static_cast<unsigned>(uniform(rng, 0, 4))) * uniform(rng, -3, 3);
      ok = ok && congruence_check(b, a1, a2, static_cast<std::size_t>(uniform(rng, 1, 20)));
    }
    rec.check(ok, "digit-map congruence b=" + std::to_string(b) + " (50 pairs)");
  }
}

void suite_maxmin(const VerifyOptions& o, Recorder& rec) {
  std::mt19937_64 rng(o.seed ^ 0x6d61786dULL);
  for (std::size_t i = 0; i < scaled(o.scale, 60); ++i) {
    std::vector<TruncatedSeries> u;
    std::string what;
    if (i % 2 == 0) {
      const Vec s = random_set(rng, 8, -60, 60);
      const std::int64_t b = uniform(rng, 2, 8);
      u = phi_image(s, b, std::max(transport_cap(s, b) + 8, o.series_cap));
      what = "phi_" + std::to_string(b) + " of " + SetDescriptor::explicit_finite(s).describe();
    } else {
      u = random_series_set(rng, 8, o.series_cap + 2);
      what = "random series set";
    }
    const auto ref = t_ordering(u, u.size() - 1);
    const std::size_t n = ref.set.size();
    bool ok = true;
    for (int v = 0; v < 5; ++v) {
      const auto ord = t_ordering(u, u.size() - 1, TieBreakPolicy::seeded(rng()),
                                  static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1)));
      ok = ok && ord.exponents == ref.exponents;
    }
    std::string detail = "alpha " + join(ref.exponents);
    for (std::size_t k = 0; k < n; ++k) {
      const auto rep = maxmin_check(ref.set, k, 8, rng());
      ok = ok && rep.witness_equal && rep.bound_holds && rep.decidable;
      if (!(rep.witness_equal && rep.bound_holds && rep.decidable))
        detail += "; k=" + std::to_string(k) + " witness " + rep.witness_min.to_string();
    }
    rec.check(ok, what + " |U|=" + std::to_string(n), detail);
  }
}

void suite_closed_forms(const VerifyOptions& o, Recorder& rec) {
  const auto opts = greedy_options(o);
  for (std::int64_t b = 2; b <= 12; ++b) {
    const auto g = exponent_sequence(SetDescriptor::all_integers(), b, 100, opts);
    bool ok = g.certified && g.method == "greedy";
    for (std::size_t k = 0; k <= 100; ++k) ok = ok && g.values[k] == ExtNat(alpha_Z(k, b));
    rec.check(ok, "greedy Z vs floor sum, b=" + std::to_string(b) + ", k<=100", join(g.values));
  }
  for (std::int64_t b = 2; b <= 12; ++b) {
    const auto g = exponent_sequence(SetDescriptor::primes(), b, 40, opts);
    bool ok = g.certified && g.method == "greedy";
    for (std::size_t k = 0; k <= 40; ++k) ok = ok && g.values[k] == ExtNat(alpha_P(k, b));
    rec.check(ok, "greedy P vs closed form, b=" + std::to_string(b) + ", k<=40", join(g.values));
  }
  const auto p3 = to_decimal(factorial(SetDescriptor::primes(), primes_up_to(3), 3, opts).value);
  rec.check(p3 == 24 && to_decimal(factorial_P(3, primes_up_to(3))) == 24, "3! over (P, P) is 24", p3.str());
  for (std::int64_t b = 2; b <= 12; ++b) {
    const PrimeWitness w = prime_witness_sequence(b, b <= 4 ? 3 : 2, 10'000'000);
    bool ok = w.complete;
    if (ok) {
      const auto vals = evaluate_test_sequence(w.primes, b);
      for (std::size_t k = 0; k < vals.size(); ++k) ok = ok && vals[k] == ExtNat(alpha_P(k, b));
    }
    rec.check(ok, "residue-class prime witness b=" + std::to_string(b), w.complete ? join(w.primes) : w.failure);
  }
  bool beta_ok = true;
  for (std::uint64_t k = 0; k <= 300; ++k)
    for (std::uint64_t l = 0; l <= k; ++l)
      for (std::int64_t b = 2; b <= 30; ++b) beta_ok = beta_ok && beta_floor(k, l, b) == beta_digit(k, l, b);
  rec.check(beta_ok, "beta floor form equals digit form, k<=300, b<=30");
  bool nu_ok = true;
  for (std::uint64_t n = 1; n <= 200; ++n)
    for (std::int64_t b = 2; b <= static_cast<std::int64_t>(n); ++b) {
      std::uint64_t s = 0;
      for (std::uint64_t k = 0; k <= n; ++k) s += beta(n, k, b);
      nu_ok = nu_ok && s == nu_bar(n, b);
    }
  rec.check(nu_ok, "nu_bar(n,b) equals the beta row sum, n<=200");
  // balanced class sizes minimise the pairs sharing a residue class
  bool balanced = true;
  for (std::uint64_t n = 1; n <= 120; ++n)
    for (std::uint64_t m = 1; m <= 12; ++m) {
      std::uint64_t floors = 0;
      for (std::uint64_t j = 0; j < n; ++j) floors += j / m;
      const auto parts = equality_profile(n, m);
      std::uint64_t total = 0, pairs = 0;
      for (auto q : parts) total += q, pairs += binomial2(q);
      balanced = balanced && min_class_pairs(n, m) == floors && pairs == floors && total == n &&
                 parts.size() == m && parts.front() - parts.back() <= 1;
    }
  rec.check(balanced, "balanced residue-class profile, n<=120, m<=12");
  const auto Z = SetDescriptor::all_integers();
  bool int_ok = true;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    Vec T;
    for (std::int64_t b = 2; b <= static_cast<std::int64_t>(n); ++b) T.push_back(b);
    const auto v = gen_integer(Z, T, n).value;
    for (std::int64_t b : T) int_ok = int_ok && v.exponent(b) == ord_b(b, static_cast<std::int64_t>(n));
  }
  rec.check(int_ok, "[n] over (Z, N) has exponent ord_b(n) at every base, n<=60");
  bool legendre = true;
  BigInt fact = 1;
  for (unsigned k = 0; k <= 20; ++k) {
    if (k > 0) fact *= k;
    legendre = legendre && to_decimal(factorial(Z, primes_up_to(k), k).value) == fact;
  }
  rec.check(legendre, "factorial over (Z, primes) equals k!, k<=20");
}

void suite_tables(const VerifyOptions& o, Recorder& rec) {
  if (o.golden_dir.empty()) throw std::invalid_argument("tables suite needs a golden directory");
  for (int t = 1; t <= 4; ++t) {
    const std::string path = o.golden_dir + "/table" + std::to_string(t) + ".tsv";
    std::ifstream in(path, std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    const std::string got = render_table(t);
    std::string detail = in ? "" : "missing " + path;
    if (in && got != golden.str()) {
      std::istringstream a(got), g(golden.str());
      std::string la, lg;
      for (int line = 1; std::getline(g, lg); ++line) {
        if (!std::getline(a, la) || la != lg) {
          detail = "line " + std::to_string(line) + ": expected '" + lg + "' got '" + la + "'";
          break;
        }
      }
      if (detail.empty()) detail = "trailing content differs";
    }
    rec.check(in && got == golden.str(), "table " + std::to_string(t) + " matches " + path, detail);
  }
}

const std::map<std::string, std::function<void(const VerifyOptions&, Recorder&)>>& registry() {
  static const std::map<std::string, std::function<void(const VerifyOptions&, Recorder&)>> r{
      {"well-definedness", suite_well_definedness}, {"majorization", suite_majorization},
      {"superadditivity", suite_superadditivity},   {"monotonicity", suite_monotonicity},
      {"divisibility", suite_divisibility},         {"transport", suite_transport},
      {"maxmin", suite_maxmin},                     {"closed-forms", suite_closed_forms},
      {"tables", suite_tables}};
  return r;
}

}  // namespace

bool SuiteReport::passed() const { return failures() == 0 && !instances.empty(); }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceRecord& r) { return !r.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"well-definedness", "majorization", "superadditivity",
                                              "monotonicity",     "divisibility", "transport",
                                              "maxmin",           "closed-forms", "tables"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteReport report;
  report.name = name;
  Recorder rec(report);
  const auto t0 = std::chrono::steady_clock::now();
  it->second(options, rec);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& options) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, options));
  } else {
    out.push_back(run_suite(name, options));
  }
  return out;
}

}  // namespace genfact
