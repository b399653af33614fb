#include "doctest.h"
#include "genfact/factored.hpp"
#include "genfact/intsets.hpp"

using namespace genfact;

TEST_CASE("factored number normalization and conventions") {
  FactoredNumber one;
  CHECK(one.is_one());
  CHECK(to_decimal(one) == 1);
  FactoredNumber f;
  f.multiply_power(2, ExtNat(7));
  f.multiply_power(3, ExtNat(3));
  f.multiply_power(5, ExtNat(0));
  f.multiply_power(1, ExtNat::infinity());  // 1^∞ = 1
  CHECK(to_decimal(f) == 3456);
  CHECK(format_factored(f) == "2^7 * 3^3");
  f.multiply_power(0, ExtNat(0));  // 0^0 = 1
  CHECK(to_decimal(f) == 3456);
  FactoredNumber z = f;
  z.multiply_power(0, ExtNat::infinity());
  CHECK(z.is_zero());
  CHECK(to_decimal(z) == 0);
  FactoredNumber z2;
  z2.multiply_power(7, ExtNat::infinity());
  CHECK(z2 == FactoredNumber::zero());
  CHECK(format_factored(z2) == "0");
  CHECK(format_factored(one) == "1");
  CHECK_THROWS_AS(f.multiply_power(0, ExtNat(2)), std::invalid_argument);
  CHECK_THROWS_AS(f.multiply_power(-2, ExtNat(1)), std::invalid_argument);
  CHECK(FactoredNumber::from_exponents({{2, ExtNat(1)}, {6, ExtNat(2)}}).exponent(6) == ExtNat(2));
}

TEST_CASE("refine to primes") {
  const auto f = FactoredNumber::from_exponents({{6, ExtNat(2)}});
  CHECK(format_factored(refine_to_primes(f)) == "2^2 * 3^2");
  const auto g = FactoredNumber::from_exponents({{2, ExtNat(3)}, {4, ExtNat(2)}, {12, ExtNat(1)}});
  CHECK(format_factored(refine_to_primes(g)) == "2^9 * 3");
  CHECK(to_decimal(refine_to_primes(g)) == to_decimal(g));
  const auto p = FactoredNumber::from_exponents({{5, ExtNat(2)}, {7, ExtNat(1)}});
  CHECK(refine_to_primes(p) == p);
  CHECK(refine_to_primes(FactoredNumber::zero()).is_zero());
}

TEST_CASE("divisibility") {
  const auto a = FactoredNumber::from_exponents({{4, ExtNat(1)}});
  const auto b = FactoredNumber::from_exponents({{2, ExtNat(2)}});
  CHECK_FALSE(exponentwise_divides(a, b));  // different bases
  CHECK(integer_divides(a, b));            // both equal 4
  const auto c = FactoredNumber::from_exponents({{2, ExtNat(3)}, {4, ExtNat(1)}});
  CHECK(exponentwise_divides(a, c));
  CHECK(integer_divides(a, c));
  CHECK(exponentwise_divides(c, FactoredNumber::zero()));
  CHECK_FALSE(exponentwise_divides(FactoredNumber::zero(), c));
  CHECK(integer_divides(FactoredNumber::zero(), FactoredNumber::zero()));
  CHECK_FALSE(integer_divides(FactoredNumber::zero(), c));
}

TEST_CASE("factored text format round-trips") {
  for (const char* text : {"2^24 * 3^10 * 5^3 * 7 * 11", "1", "0", "7", "2^44 * 3^19 * 5^5 * 7^3 * 11 * 13 * 17 * 19"})
    CHECK(format_factored(parse_factored(text)) == text);
  CHECK(parse_factored("2^inf").is_zero());
  CHECK(to_decimal(parse_factored("2^24 * 3^10 * 5^3 * 7 * 11")) == BigInt("9535274090496000"));
  for (const char* bad : {"", "3 * 2", "2^x", "1 * 2", "2 * 2", "x"}) CHECK_THROWS(parse_factored(bad));
}

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(BigInt("9535274090496000"), true) == "9,535,274,090,496,000");
  CHECK(format_decimal(BigInt(999), true) == "999");
  CHECK(format_decimal(BigInt(1000), true) == "1,000");
  CHECK(format_decimal(BigInt(0), true) == "0");
  CHECK(format_decimal(BigInt(-1234), true) == "-1,234");
  CHECK(format_decimal(BigInt(1234567), false) == "1234567");
}

TEST_CASE("base sets") {
  const auto Z = SetDescriptor::all_integers();
  const auto P = SetDescriptor::primes();
  using V = std::vector<std::int64_t>;
  CHECK(BaseSet::all_bases_up_to(std::nullopt).resolve(Z, 5) == V{2, 3, 4, 5});
  CHECK(BaseSet::all_primes_up_to(std::nullopt).resolve(Z, 10) == V{2, 3, 5, 7});
  CHECK(BaseSet::all_bases_up_to(std::nullopt).resolve(Z, 1).empty());
  CHECK(BaseSet::all_bases_up_to(4).resolve(SetDescriptor::arithmetic_progression(1, 3), 99) == V{2, 3, 4});
  CHECK_THROWS_AS(BaseSet::all_bases_up_to(std::nullopt).resolve(SetDescriptor::nonnegative_integers(), 3),
                  std::invalid_argument);
  CHECK(BaseSet::explicit_list({3, 0, 1, 3}).resolve(Z, 0) == V{0, 1, 3});
  CHECK(BaseSet::range(0, 3).resolve(Z, 0) == V{0, 1, 2, 3});
  CHECK_THROWS(BaseSet::explicit_list({-1}));
  CHECK(BaseSet::all_bases_up_to(std::nullopt).is_auto());
}

TEST_CASE("prime-set auto cutoff is the largest b with phi(b)+omega(b) <= k") {
  CHECK_FALSE(primes_auto_cutoff(1).has_value());
  CHECK(primes_auto_cutoff(2) == 2);  // φ(2)+ω(2) = 2
  CHECK(primes_auto_cutoff(3) == 4);
  CHECK(primes_auto_cutoff(4) == 6);
  CHECK(primes_auto_cutoff(6) == 12);
  CHECK(primes_auto_cutoff(7) == 12);
}

TEST_CASE("base spec grammar") {
  CHECK(parse_base_spec("auto").is_auto());
  CHECK(parse_base_spec("primes:auto").kind() == BaseSet::Kind::AllPrimesUpTo);
  CHECK(parse_base_spec("primes:10").describe() == "primes:10");
  CHECK(parse_base_spec("upto:12").describe() == "upto:12");
  CHECK(parse_base_spec("2..6").describe() == "2..6");
  CHECK(parse_base_spec("6,2,0").describe() == "0,2,6");
  for (const char* bad : {"", "x", "primes:", "upto:-1", "1,,2", "-3..4", "2,-1"}) CHECK_THROWS(parse_base_spec(bad));
}
