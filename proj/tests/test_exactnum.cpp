// Copyright 2026 The codlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "codlab/exactnum.hpp"

namespace codlab {
namespace {

// Oracle: a plain sieve of Eratosthenes.
std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  }
  return prime;
}

// Oracle: rebuilds a value from its "2^6·3^2·5" rendering.
Natural unfactor(const std::string& s) {
  Natural acc(1);
  const std::string dot = "·";
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(dot, pos);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(pos, end - pos);
    const std::size_t caret = term.find('^');
    const Natural base = Natural::parse(term.substr(0, caret));
    const unsigned e = caret == std::string::npos ? 1 : std::stoul(term.substr(caret + 1));
    acc *= pow(base, e);
    pos = end == s.size() ? end : end + dot.size();
  }
  return acc;
}

TEST(Natural, ParseAndPrintRoundTrip) {
  for (const char* s : {"0", "1", "60", "18446744073709551616", "4154781481226426191177580544000000"}) {
    EXPECT_EQ(Natural::parse(s).str(), s);
  }
  EXPECT_THROW(Natural::parse(""), std::invalid_argument);
  EXPECT_THROW(Natural::parse("-3"), std::invalid_argument);
  EXPECT_THROW(Natural::parse("1e5"), std::invalid_argument);
}

TEST(Natural, CheckedSubtractionAndModulo) {
  EXPECT_EQ(Natural(10) - Natural(3), Natural(7));
  EXPECT_THROW(Natural(3) - Natural(10), std::domain_error);
  EXPECT_THROW(Natural(3) % Natural(0), std::domain_error);
  EXPECT_THROW(Natural::from_rep(Natural::Rep(-1)), std::domain_error);
}

TEST(Natural, ToU64Narrowing) {
  EXPECT_EQ(Natural(42).to_u64(), 42u);
  EXPECT_THROW(pow(Natural(2), 64).to_u64(), std::overflow_error);
  EXPECT_EQ(pow(Natural(2), 64).bit_length(), 65u);
}

TEST(ExactDiv, RejectsInexactDivision) {
  EXPECT_EQ(exact_div(Natural(1814400), Natural(604800)), Natural(3));
  EXPECT_THROW(exact_div(Natural(7), Natural(2)), std::domain_error);
  EXPECT_THROW(exact_div(Natural(7), Natural(0)), std::domain_error);
}

TEST(Divides, Examples) {
  EXPECT_TRUE(divides(Natural(60), Natural(2520)));
  EXPECT_FALSE(divides(Natural(7), Natural(60)));
  EXPECT_TRUE(divides(Natural(604800), Natural(1814400)));
  EXPECT_THROW(divides(Natural(0), Natural(5)), std::domain_error);
}

TEST(Primes, AgreeWithSieve) {
  const auto prime = sieve(5000);
  for (std::uint64_t n = 0; n <= 5000; ++n) EXPECT_EQ(is_prime(n), prime[n]) << n;
  EXPECT_EQ(next_prime(2), 3u);
  EXPECT_EQ(next_prime(13), 17u);
  EXPECT_EQ(next_prime(0), 2u);
}

TEST(Factorial, MatchesRunningProductAndTable) {
  std::uint64_t running = 1;
  for (unsigned n = 0; n <= 20; ++n) {
    if (n > 0) running *= n;
    EXPECT_EQ(factorial(n), Natural(running)) << n;
  }
  const FactorialTable table(30);
  for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(table(n), factorial(n)) << n;
  EXPECT_EQ(table.max_n(), 30u);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(factorial(8), 2), 7u);
  EXPECT_EQ(factorial_valuation(8, 2), 7u);
  EXPECT_EQ(factorial_valuation(0, 5), 0u);
  EXPECT_EQ(factorial_valuation(36, 2), 34u);
  EXPECT_THROW(valuation(Natural(0), 2), std::domain_error);
  EXPECT_THROW(valuation(Natural(8), 4), std::invalid_argument);
  EXPECT_THROW(factorial_valuation(8, 9), std::invalid_argument);
}

// Legendre's sum must agree with direct p-adic valuation of n!, and never
// exceed n / (p - 1).
TEST(Valuation, LegendreAgreesWithDirectValuation) {
  for (unsigned n = 0; n <= 80; ++n) {
    const Natural f = factorial(n);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 29, 31, 83}) {
      const unsigned v = factorial_valuation(n, p);
      EXPECT_EQ(v, valuation(f, p)) << n << " " << p;
      EXPECT_LE(v * (p - 1), n);
    }
  }
}

TEST(PrimePower, ValidationAndRecovery) {
  EXPECT_EQ(PrimePower::from_value(8), PrimePower(2, 3));
  EXPECT_EQ(PrimePower::from_value(49), PrimePower(7, 2));
  EXPECT_EQ(PrimePower::from_value(5).k(), 1u);
  EXPECT_THROW(PrimePower::from_value(12), std::invalid_argument);
  EXPECT_THROW(PrimePower::from_value(1), std::invalid_argument);
  EXPECT_THROW(PrimePower(4, 1), std::invalid_argument);
  EXPECT_THROW(PrimePower(2, 0), std::invalid_argument);
  EXPECT_EQ(PrimePower(3, 4).value(), Natural(81));
}

TEST(Rational, NormalisedAndOrdered) {
  const Rational r(Natural(25), Natural(2));
  EXPECT_EQ(r.str(), "25/2");
  EXPECT_EQ(Rational(Natural(50), Natural(4)), r);
  EXPECT_EQ(Rational(Natural(42), Natural(2)).str(), "21");
  EXPECT_EQ((Rational(Natural(5), Natural(2)) * Rational(Natural(5))).str(), "25/2");
  EXPECT_EQ((Rational(Natural(1), Natural(2)) + Rational(Natural(1), Natural(3))).str(), "5/6");
  EXPECT_LT(Rational(Natural(12)), r);
  EXPECT_THROW(Rational(Natural(1), Natural(0)), std::domain_error);
}

TEST(LessThanScaled, ExactComparison) {
  // 60 < 60 * 25/2 and 1814400 < 604800 * 21, but not 1814400 < 604800 * 3.
  EXPECT_TRUE(less_than_scaled(Natural(60), Natural(60), Rational(Natural(25), Natural(2))));
  EXPECT_TRUE(less_than_scaled(Natural(1814400), Natural(604800), Rational(Natural(21))));
  EXPECT_FALSE(less_than_scaled(Natural(1814400), Natural(604800), Rational(Natural(3))));
  // Equality is not "less than".
  EXPECT_FALSE(less_than_scaled(Natural(25), Natural(2), Rational(Natural(25), Natural(2)) *
                                                            Rational(Natural(1))));
  EXPECT_FALSE(less_than_scaled(Natural(25), Natural(10), Rational(Natural(5), Natural(2))));
}

TEST(Factored, RendersAndRebuilds) {
  EXPECT_EQ(factored(Natural(288)), "2^5·3^2");
  EXPECT_EQ(factored(Natural(2880)), "2^6·3^2·5");
  EXPECT_EQ(factored(Natural(1)), "1");
  EXPECT_EQ(factored(Natural(0)), "0");
  EXPECT_EQ(factored(Natural(1000003)), "1000003");
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 300; ++i) {
    const Natural x(rng() % 10'000'000 + 1);
    EXPECT_EQ(unfactor(factored(x)), x) << x;
  }
  EXPECT_EQ(unfactor(factored(factorial(30))), factorial(30));
}

TEST(Natural, StreamsAsDecimal) {
  std::ostringstream os;
  os << factorial(25);
  EXPECT_EQ(os.str(), "15511210043330985984000000");
}

}  // namespace
}  // namespace codlab
