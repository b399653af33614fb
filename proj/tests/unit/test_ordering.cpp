#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "genfact/closedforms.hpp"
#include "genfact/numerics.hpp"
#include "genfact/ordering.hpp"

using namespace genfact;
using V = std::vector<std::int64_t>;
using E = std::vector<ExtNat>;

namespace {

const ExtNat inf = ExtNat::infinity();

ExtNat direct_value(const V& prefix, std::int64_t b, std::int64_t a) {
  ExtNat v(0);
  for (std::int64_t x : prefix) v += ord_b(b, a - x);
  return v;
}

/// Every greedy ordering of a finite set, following each tie in turn.
void all_greedy_exponents(const V& set, std::int64_t b, V& prefix, E& values, std::set<std::vector<std::string>>& out) {
  if (prefix.size() == set.size()) {
    std::vector<std::string> key;
    for (const auto& v : values) key.push_back(v.to_string());
    out.insert(key);
    return;
  }
  ExtNat best = inf;
  for (std::int64_t a : set) best = std::min(best, direct_value(prefix, b, a));
  for (std::int64_t a : set) {
    if (direct_value(prefix, b, a) != best) continue;
    if (std::find(prefix.begin(), prefix.end(), a) != prefix.end()) continue;
    prefix.push_back(a);
    values.push_back(best);
    all_greedy_exponents(set, b, prefix, values, out);
    prefix.pop_back();
    values.pop_back();
  }
}

E finite_exps(std::initializer_list<std::uint64_t> xs) {
  E out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("greedy step examples") {
  const auto Z = SetDescriptor::all_integers();
  const V p01{0, 1};
  const GreedyStep s1 = greedy_step(p01, 2, Z);
  CHECK(s1.value == ExtNat(1));
  CHECK(s1.element == -1);  // minimizers are 2 mod 4 and 3 mod 4; -1 precedes 2 canonically
  CHECK(s1.certified);

  const GreedyStep s0 = greedy_step({}, 7, SetDescriptor::primes());
  CHECK(s0.element == 2);
  CHECK(s0.value == ExtNat(0));

  const V pp{2, 3, 5, 7};
  const GreedyStep s2 = greedy_step(pp, 2, SetDescriptor::primes());
  CHECK(s2.value == ExtNat(4));
  CHECK(s2.element == 17);
  CHECK(s2.certified);

  CHECK_THROWS_AS(greedy_step(p01, -3, Z), std::domain_error);
}

TEST_CASE("greedy step over primes agrees with a brute-force window") {
  const auto P = SetDescriptor::primes();
  const V window = primes_up_to(1000);
  const V pp{2, 3, 5, 7};
  ExtNat best = inf;
  std::int64_t arg = 0;
  for (std::int64_t q : window) {
    const ExtNat v = direct_value(pp, 2, q);
    if (v < best) {
      best = v;
      arg = q;
    }
  }
  CHECK(best == ExtNat(4));
  CHECK(arg == 17);
}

TEST_CASE("b-orderings of a finite set") {
  const auto S = SetDescriptor::explicit_finite({0, 1, 2, 3, 4, 5});
  const BOrdering o = b_ordering(S, 6, 5);
  CHECK(o.exponents == finite_exps({0, 0, 0, 0, 0, 0}));
  CHECK(o.all_certified());
  // exhaustion: later steps are ∞ and repeat the canonical first element
  const BOrdering o2 = b_ordering(S, 6, 7);
  CHECK(o2.exponents[6].is_infinite());
  CHECK(o2.exponents[7].is_infinite());
  CHECK(o2.elements[6] == 0);
  CHECK(o2.elements[7] == 0);

  const BOrdering z = b_ordering(S, 0, 7);
  CHECK(z.exponents == E{ExtNat(0), ExtNat(0), ExtNat(0), ExtNat(0), ExtNat(0), ExtNat(0), inf, inf});
  const BOrdering one = b_ordering(S, 1, 3);
  CHECK(one.exponents == E{ExtNat(0), inf, inf, inf});
}

TEST_CASE("all greedy orderings of small sets share exponents with the engine") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<std::int64_t> uniq;
    const std::size_t n = 2 + rng() % 5;
    while (uniq.size() < n) uniq.insert(static_cast<std::int64_t>(rng() % 41) - 20);
    const V set(uniq.begin(), uniq.end());
    const std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 9);
    std::set<std::vector<std::string>> found;
    V prefix;
    E values;
    all_greedy_exponents(set, b, prefix, values, found);
    REQUIRE(found.size() == 1);
    const BOrdering o = b_ordering(SetDescriptor::explicit_finite(set), b, set.size() - 1);
    std::vector<std::string> got;
    for (const auto& v : o.exponents) got.push_back(v.to_string());
    CHECK(got == *found.begin());
  }
}

TEST_CASE("random tie-breaks and start elements give identical exponents") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::set<std::int64_t> uniq;
    const std::size_t n = 1 + rng() % 12;
    while (uniq.size() < n) uniq.insert(static_cast<std::int64_t>(rng() % 101) - 50);
    const V set(uniq.begin(), uniq.end());
    const auto S = SetDescriptor::explicit_finite(set);
    const std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 11);
    const auto ref = b_ordering(S, b, set.size() - 1).exponents;
    for (int v = 0; v < 5; ++v) {
      const auto o = b_ordering(S, b, set.size() - 1, TieBreakPolicy::seeded(rng()), set[rng() % set.size()]);
      CHECK(o.exponents == ref);
    }
  }
}

TEST_CASE("greedy over infinite sets matches closed forms") {
  ExponentOptions greedy;
  greedy.force_greedy = true;
  for (std::int64_t b = 2; b <= 7; ++b) {
    const auto z = exponent_sequence(SetDescriptor::all_integers(), b, 30, greedy);
    CHECK(z.method == "greedy");
    CHECK(z.certified);
    for (std::size_t k = 0; k <= 30; ++k) CHECK(z.values[k] == ExtNat(alpha_Z(k, b)));
    const auto p = exponent_sequence(SetDescriptor::primes(), b, 20, greedy);
    CHECK(p.certified);
    for (std::size_t k = 0; k <= 20; ++k) CHECK(p.values[k] == ExtNat(alpha_P(k, b)));
  }
}

TEST_CASE("random-policy orderings over infinite sets are sound") {
  const std::vector<SetDescriptor> sets{SetDescriptor::all_integers(), SetDescriptor::primes(),
                                        SetDescriptor::arithmetic_progression(3, 5),
                                        SetDescriptor::nonnegative_integers()};
  for (const auto& S : sets)
    for (std::int64_t b : {2, 3, 6}) {
      const auto ref = b_ordering(S, b, 12);
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto o = b_ordering(S, b, 12, TieBreakPolicy::seeded(seed));
        CHECK(o.exponents == ref.exponents);
        CHECK(evaluate_test_sequence(o.elements, b) == o.exponents);
        for (std::int64_t a : o.elements) CHECK(S.contains(a));
      }
    }
}

TEST_CASE("engine value is the window minimum for random prefixes") {
  std::mt19937_64 rng(31337);
  const std::vector<SetDescriptor> sets{SetDescriptor::all_integers(), SetDescriptor::primes(),
                                        SetDescriptor::arithmetic_progression(-9, 4),
                                        SetDescriptor::nonnegative_integers()};
  for (const auto& S : sets) {
    const V window = S.enumerate(3000);
    for (int trial = 0; trial < 40; ++trial) {
      const std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 6);
      V prefix;
      const std::size_t len = rng() % 9;
      for (std::size_t i = 0; i < len; ++i) prefix.push_back(window[rng() % 60]);
      const GreedyStep st = greedy_step(prefix, b, S);
      REQUIRE(st.certified);
      CHECK(S.contains(st.element));
      CHECK(direct_value(prefix, b, st.element) == st.value);
      ExtNat best = inf;
      std::int64_t arg = 0;
      for (std::int64_t a : window) {
        const ExtNat v = direct_value(prefix, b, a);
        if (v < best) {
          best = v;
          arg = a;
        }
      }
      CHECK(st.value <= best);
      if (std::llabs(st.element) <= 3000) {
        CHECK(st.value == best);
        CHECK(st.element == arg);
      }
    }
  }
}

TEST_CASE("depth cap falls back to an uncertified window scan") {
  EngineLimits tight;
  tight.max_level = 1;
  tight.window = 64;
  const V prefix{0, 2, 4, 6};
  // odd classes realise value 0 at level 1, so no fallback is needed
  const GreedyStep st = greedy_step(prefix, 2, SetDescriptor::all_integers(), {}, tight);
  CHECK(st.certified);
  CHECK(st.value == ExtNat(0));
  const V prefix2{0, 1, 2, 3};
  const GreedyStep st2 = greedy_step(prefix2, 2, SetDescriptor::all_integers(), {}, tight);
  CHECK_FALSE(st2.certified);
  CHECK(st2.value == ExtNat(3));
  ExponentOptions opts;
  opts.force_greedy = true;
  opts.limits = tight;
  const auto seq = exponent_sequence(SetDescriptor::all_integers(), 2, 6, opts);
  CHECK_FALSE(seq.certified);
}

TEST_CASE("custom predicate sets are window limited") {
  CustomSet evens{"evens", [](std::int64_t a) { return a % 2 == 0; }, 200, ExtNat::infinity()};
  const auto S = SetDescriptor::custom(evens);
  const auto seq = exponent_sequence(S, 2, 5);
  CHECK(seq.method == "greedy");
  CHECK_FALSE(seq.certified);
  // scaled copy of Z: α_k(2Z, 2) = k + α_k(Z, 2)
  for (std::size_t k = 0; k <= 5; ++k) CHECK(seq.values[k] == ExtNat(k + alpha_Z(k, 2)));

  CustomSet small{"small", [](std::int64_t a) { return a >= 0 && a < 4; }, 10, ExtNat(4)};
  const auto F = SetDescriptor::custom(small);
  const auto fs = exponent_sequence(F, 2, 4);
  CHECK(fs.certified);
  CHECK(fs.values == E{ExtNat(0), ExtNat(0), ExtNat(1), ExtNat(1), inf});
}

TEST_CASE("exponent sequence examples and conventions") {
  CHECK(exponent_sequence(SetDescriptor::all_integers(), 2, 4).values == finite_exps({0, 0, 1, 1, 3}));
  CHECK(exponent_sequence(SetDescriptor::primes(), 2, 3).values == finite_exps({0, 0, 1, 3}));
  const auto p1 = exponent_sequence(SetDescriptor::primes(), 1, 2);
  CHECK(p1.values == E{ExtNat(0), inf, inf});
  CHECK(p1.method == "convention");
  const auto p0 = exponent_sequence(SetDescriptor::explicit_finite({1, 5, 9}), 0, 4);
  CHECK(p0.values == E{ExtNat(0), ExtNat(0), ExtNat(0), inf, inf});
  const auto zg = exponent_sequence(SetDescriptor::all_integers(), 0, 3);
  CHECK(zg.values == finite_exps({0, 0, 0, 0}));
  ExponentOptions g;
  g.force_greedy = true;
  CHECK(exponent_sequence(SetDescriptor::explicit_finite({1, 5, 9}), 0, 4, g).values == p0.values);
  CHECK(exponent_sequence(SetDescriptor::primes(), 1, 2, g).values == p1.values);
  CHECK_THROWS(exponent_sequence(SetDescriptor::primes(), -1, 2));
}

TEST_CASE("test sequence evaluation") {
  const V s0125{0, 1, 2, 5};
  CHECK(evaluate_test_sequence(s0125, 6) == finite_exps({0, 0, 0, 0}));
  const V s77{7, 7};
  CHECK(evaluate_test_sequence(s77, 2) == E{ExtNat(0), inf});
  CHECK(evaluate_test_sequence(s77, 0) == E{ExtNat(0), inf});
  const V nat{0, 1, 2, 3, 4};
  CHECK(evaluate_test_sequence(nat, 2) == finite_exps({0, 0, 1, 1, 3}));
  const V rev{5, 4, 3, 2, 1, 0};
  CHECK(evaluate_test_sequence(rev, 2) == finite_exps({0, 0, 1, 1, 3, 3}));
  CHECK_THROWS(TestSequence::from(SetDescriptor::primes(), {2, 4}));
  CHECK(TestSequence::from(SetDescriptor::primes(), {2, 3}).elements == V{2, 3});
}

TEST_CASE("multiplicative evaluation") {
  const V a{0, 1, 2, 5};
  const V a2{0, 2, 4, 5};
  CHECK(evaluate_multiplicative(a, 6)[3] == ExtNat(1));
  CHECK(evaluate_multiplicative(a2, 6)[3] == ExtNat(0));
  CHECK(evaluate_multiplicative(a, 6) == finite_exps({0, 0, 0, 1}));
  CHECK(evaluate_multiplicative(a2, 6) == finite_exps({0, 0, 0, 0}));
  CHECK_THROWS(evaluate_multiplicative(a, 1));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    V seq;
    for (int i = 0; i < 7; ++i) seq.push_back(static_cast<std::int64_t>(rng() % 61) - 30);
    const std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 11);
    const auto add = evaluate_test_sequence(seq, b);
    const auto mul = evaluate_multiplicative(seq, b);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      CHECK(add[i] <= mul[i]);
      if (is_prime(b)) CHECK(add[i] == mul[i]);
    }
  }
}

TEST_CASE("pairwise valuation sum") {
  const V a{0, 1, 2};
  CHECK(pairwise_valuation_sum(a, 2) == ExtNat(1));
  const V c{0, 6, 12};
  CHECK(pairwise_valuation_sum(c, 6) == ExtNat(3));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    V seq;
    for (int i = 0; i < 6; ++i) seq.push_back(static_cast<std::int64_t>(rng() % 41) - 20);
    const std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 9);
    ExtNat total(0);
    for (const auto& v : evaluate_test_sequence(seq, b)) total += v;
    CHECK(pairwise_valuation_sum(seq, b) == total);
    V perm = seq;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(pairwise_valuation_sum(perm, b) == pairwise_valuation_sum(seq, b));
  }
}

TEST_CASE("majorization") {
  const auto Z = SetDescriptor::all_integers();
  const auto ord = b_ordering(Z, 3, 9);
  const auto rep = check_majorization(Z, 3, ord.elements);
  CHECK(rep.holds());
  for (bool e : rep.equal_at) CHECK(e);

  const V rev{5, 4, 3, 2, 1, 0};
  const auto r2 = check_majorization(Z, 2, rev);
  CHECK(r2.holds());
  for (bool e : r2.equal_at) CHECK(e);

  const V odd{1, 3, 5, 7};
  const auto r3 = check_majorization(Z, 2, odd);
  CHECK(r3.holds());
  CHECK(r3.equal_at[0]);
  CHECK_FALSE(r3.equal_at[1]);

  const V single{4};
  const auto r4 = check_majorization(Z, 5, single);
  CHECK(r4.equal_at == std::vector<bool>{true});
}

TEST_CASE("natural order attains the invariants of Z for every base") {
  V nat;
  for (std::int64_t i = 0; i <= 60; ++i) nat.push_back(i);
  for (std::int64_t b = 2; b <= 20; ++b) {
    const auto vals = evaluate_test_sequence(nat, b);
    for (std::size_t k = 0; k < nat.size(); ++k) CHECK(vals[k] == ExtNat(alpha_Z(k, b)));
  }
}
