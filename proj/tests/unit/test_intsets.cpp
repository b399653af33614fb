#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "genfact/intsets.hpp"
#include "genfact/numerics.hpp"

using namespace genfact;
using V = std::vector<std::int64_t>;

TEST_CASE("canonical order") {
  V xs{-2, 3, 0, -1, 2, 1, -3};
  std::sort(xs.begin(), xs.end(), canonical_less);
  CHECK(xs == V{0, 1, -1, 2, -2, 3, -3});
  CHECK(canonical_less(INT64_MAX, INT64_MIN));
}

TEST_CASE("membership") {
  CHECK(SetDescriptor::primes().contains(97));
  CHECK_FALSE(SetDescriptor::primes().contains(91));
  CHECK(SetDescriptor::arithmetic_progression(1, 4).contains(13));
  CHECK_FALSE(SetDescriptor::arithmetic_progression(1, 4).contains(-3));
  CHECK_FALSE(SetDescriptor::explicit_finite({0, 1, 2, 3, 4, 5}).contains(6));
  CHECK(SetDescriptor::nonnegative_integers().contains(0));
  CHECK_FALSE(SetDescriptor::nonnegative_integers().contains(-1));
}

TEST_CASE("enumeration") {
  CHECK(SetDescriptor::all_integers().enumerate(2) == V{0, 1, -1, 2, -2});
  CHECK(SetDescriptor::primes().enumerate(10) == V{2, 3, 5, 7});
  CHECK(SetDescriptor::explicit_finite({5, 4, 3, 2, 1, 0, 3}).enumerate(100) == V{0, 1, 2, 3, 4, 5});
  CHECK(SetDescriptor::arithmetic_progression(-7, 3).enumerate(5) == V{-1, 2, -4, 5});
  CHECK(SetDescriptor::explicit_finite({-3, 3, 1}).enumerate(3) == V{1, 3, -3});
  CHECK(SetDescriptor::all_integers().enumerate(-1).empty());
}

TEST_CASE("enumeration is prefix closed") {
  const std::vector<SetDescriptor> sets{SetDescriptor::all_integers(), SetDescriptor::primes(),
                                        SetDescriptor::arithmetic_progression(-20, 7),
                                        SetDescriptor::explicit_finite({-9, 4, 17, 0, 3})};
  for (const auto& s : sets)
    for (std::int64_t b1 = 0; b1 <= 30; b1 += 3) {
      const V small = s.enumerate(b1);
      const V big = s.enumerate(b1 + 11);
      REQUIRE(small.size() <= big.size());
      CHECK(std::equal(small.begin(), small.end(), big.begin()));
    }
}

TEST_CASE("residue status examples") {
  const auto P = SetDescriptor::primes();
  CHECK(P.residue_status(3, 4).kind == ResidueStatus::Kind::Infinite);
  CHECK(P.residue_status(0, 4).kind == ResidueStatus::Kind::Empty);
  const auto two = P.residue_status(2, 4);
  CHECK(two.kind == ResidueStatus::Kind::FiniteOnly);
  CHECK(two.members == V{2});
  const auto three = P.residue_status(0, 3);
  CHECK(three.kind == ResidueStatus::Kind::FiniteOnly);
  CHECK(three.members == V{3});
  CHECK_THROWS(P.residue_status(4, 4));
  CHECK_THROWS(P.residue_status(0, 1));
}

TEST_CASE("residue status agrees with a brute-force scan") {
  const std::vector<SetDescriptor> sets{SetDescriptor::all_integers(),
                                        SetDescriptor::nonnegative_integers(),
                                        SetDescriptor::primes(),
                                        SetDescriptor::arithmetic_progression(1, 4),
                                        SetDescriptor::arithmetic_progression(-13, 6),
                                        SetDescriptor::arithmetic_progression(5, 10),
                                        SetDescriptor::explicit_finite({-8, -3, 0, 4, 9, 16, 27})};
  for (const auto& s : sets) {
    const V window = s.enumerate(10000);
    for (std::int64_t m : {2, 3, 4, 6, 8, 9, 12, 16, 25, 27, 30, 64}) {
      for (std::int64_t r = 0; r < m; ++r) {
        V in_class;
        for (std::int64_t a : window)
          if (mod_floor(a, m) == r) in_class.push_back(a);
        const ResidueStatus st = s.residue_status(r, m);
        switch (st.kind) {
          case ResidueStatus::Kind::Empty:
            CHECK(in_class.empty());
            break;
          case ResidueStatus::Kind::FiniteOnly:
            CHECK(st.members == in_class);
            break;
          case ResidueStatus::Kind::Infinite:
            CHECK(in_class.size() >= 10);
            break;
          case ResidueStatus::Kind::Unknown:
            FAIL("built-in set reported Unknown");
        }
      }
    }
  }
}

TEST_CASE("pick_in_class") {
  CHECK(SetDescriptor::primes().pick_in_class(1, 4, {5}) == 13);
  CHECK(SetDescriptor::all_integers().pick_in_class(2, 5, {}) == 2);
  CHECK(SetDescriptor::all_integers().pick_in_class(4, 5, {}) == -1);
  CHECK_FALSE(SetDescriptor::explicit_finite({0, 1, 2, 3, 4, 5}).pick_in_class(1, 6, {1}).has_value());
  CHECK_FALSE(SetDescriptor::primes().pick_in_class(0, 4, {}).has_value());
  CHECK(SetDescriptor::primes().first_in_class(1, 4, {}, 3) == V{5, 13, 17});
  CHECK(SetDescriptor::all_integers().first_in_class(1, 4, {1}, 3) == V{-3, 5, -7});
  CHECK(SetDescriptor::arithmetic_progression(-10, 3).first_in_class(0, 2, {}, 4) == V{2, -4, 8, -10});
}

TEST_CASE("pick_in_class property: member, correct residue, canonical minimum") {
  std::mt19937_64 rng(99);
  const std::vector<SetDescriptor> sets{SetDescriptor::all_integers(), SetDescriptor::nonnegative_integers(),
                                        SetDescriptor::primes(), SetDescriptor::arithmetic_progression(-31, 7)};
  for (const auto& s : sets) {
    const V window = s.enumerate(5000);
    for (int trial = 0; trial < 200; ++trial) {
      const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 40);
      const std::int64_t r = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
      V exclude;
      for (int e = 0; e < 3; ++e) exclude.push_back(window[rng() % 40]);
      const auto got = s.pick_in_class(r, m, exclude);
      std::optional<std::int64_t> expected;
      for (std::int64_t a : window)
        if (mod_floor(a, m) == r && std::find(exclude.begin(), exclude.end(), a) == exclude.end()) {
          expected = a;
          break;
        }
      REQUIRE(got == expected);
      if (got) {
        CHECK(s.contains(*got));
        CHECK(mod_floor(*got, m) == r);
      }
    }
  }
}

TEST_CASE("custom predicate sets") {
  CustomSet squares{"squares", [](std::int64_t a) {
                      if (a < 0) return false;
                      std::int64_t r = 0;
                      while (r * r < a) ++r;
                      return r * r == a;
                    },
                    100, ExtNat::infinity()};
  const auto s = SetDescriptor::custom(squares);
  CHECK(s.enumerate(30) == V{0, 1, 4, 9, 16, 25});
  CHECK_THROWS_AS(s.enumerate(101), std::out_of_range);
  CHECK(s.residue_status(1, 4).kind == ResidueStatus::Kind::Unknown);
  CHECK(s.pick_in_class(1, 3, {1}) == 4);
  CHECK(s.first_element() == 0);
  CHECK(s.cardinality().is_infinite());
  CHECK(s.describe() == "custom:squares");
  CHECK_THROWS(SetDescriptor::custom(CustomSet{"none", [](std::int64_t) { return false; }, 10, ExtNat(0)}));
}

TEST_CASE("set spec grammar") {
  CHECK(parse_set_spec("Z").kind() == SetKind::AllIntegers);
  CHECK(parse_set_spec("N").kind() == SetKind::NonnegativeIntegers);
  CHECK(parse_set_spec("P").kind() == SetKind::Primes);
  const auto ap = parse_set_spec("ap:1,4");
  CHECK(ap.kind() == SetKind::ArithmeticProgression);
  CHECK(ap.ap_first() == 1);
  CHECK(ap.ap_step() == 4);
  CHECK(parse_set_spec("list:3,1,2,1").elements() == V{1, 2, 3});
  CHECK(parse_set_spec("range:-2..2").elements() == V{-2, -1, 0, 1, 2});
  CHECK(parse_set_spec("list:0,1,2,3,4,5").describe() == "list:0,1,2,3,4,5");
  for (const char* bad : {"", "Q", "ap:1", "ap:1,0", "ap:x,2", "list:", "list:1,,2", "range:5..1", "range:1-4",
                          "file:/nonexistent/path", "foo:1"})
    CHECK_THROWS_AS(parse_set_spec(bad), std::invalid_argument);

  const std::string path = "genfact_test_set.txt";
  {
    std::ofstream out(path);
    out << "# a set\n7\n\n-3  \n7\n";
  }
  CHECK(parse_set_spec("file:" + path).elements() == V{-3, 7});
  std::remove(path.c_str());
}

TEST_CASE("first element and cardinality") {
  CHECK(SetDescriptor::arithmetic_progression(-7, 3).first_element() == -1);
  CHECK(SetDescriptor::explicit_finite({-4, 4, 9}).first_element() == 4);
  CHECK(SetDescriptor::primes().first_element() == 2);
  CHECK(SetDescriptor::explicit_finite({1, 2, 2}).cardinality() == ExtNat(2));
  CHECK(SetDescriptor::primes().cardinality().is_infinite());
  CHECK_THROWS(SetDescriptor::explicit_finite({}));
}
