#include "support.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

using namespace tautring;
using testing_support::Gen;
using testing_support::Q;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, all other values standard.
std::vector<Rational> akiyama_tanigawa(long n_max) {
  std::vector<Rational> out, a(static_cast<std::size_t>(n_max) + 1);
  for (long m = 0; m <= n_max; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (long j = m; j >= 1; --j) {
      auto J = static_cast<std::size_t>(j);
      a[J - 1] = Rational(j) * (a[J - 1] - a[J]);
    }
    out.push_back(a[0]);
  }
  return out;
}

// Secant numbers from the Seidel boustrophedon triangle.
std::vector<Integer> secant_numbers(long n_max) {
  std::vector<Integer> zigzag;
  std::vector<Integer> row{1};
  zigzag.push_back(1);
  for (long n = 1; n <= 2 * n_max; ++n) {
    std::vector<Integer> next(row.size() + 1);
    next[0] = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      next[i + 1] = next[i] + row[row.size() - 1 - i];
    row = next;
    zigzag.push_back(row.back());
  }
  std::vector<Integer> sec;
  for (long k = 0; k <= n_max; ++k)
    sec.push_back(zigzag[static_cast<std::size_t>(2 * k)]);
  return sec;
}

// Coin-change count of partitions.
std::vector<Integer> partitions_by_dp(long n_max) {
  std::vector<Integer> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (long part = 1; part <= n_max; ++part)
    for (long t = part; t <= n_max; ++t)
      p[static_cast<std::size_t>(t)] += p[static_cast<std::size_t>(t - part)];
  return p;
}

} // namespace

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(1), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
  EXPECT_THROW(factorial(-1), std::invalid_argument);
}

TEST(DoubleFactorial, Conventions) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(1), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
  EXPECT_THROW(double_factorial(-3), std::invalid_argument);
}

TEST(DoubleFactorial, SplitsFactorial) {
  for (long n = 1; n <= 40; ++n)
    EXPECT_EQ(double_factorial(n) * double_factorial(n - 1), factorial(n));
}

TEST(Binomial, RangeAndPascal) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  for (long n = 1; n <= 30; ++n)
    for (long k = 1; k < n; ++k)
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(multinomial(6, {3, 3}), 20);
  EXPECT_EQ(multinomial(7, {3, 3, 1}), 140);
  EXPECT_EQ(multinomial(0, {}), 1);
  EXPECT_THROW(multinomial(7, {3, 3}), std::invalid_argument);
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Q("-1/2"));
  EXPECT_EQ(bernoulli(2), Q("1/6"));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(12), Q("-691/2730"));
  EXPECT_THROW(bernoulli(-1), std::invalid_argument);
}

TEST(Bernoulli, AgreesWithAkiyamaTanigawa) {
  auto at = akiyama_tanigawa(60);
  for (long m = 2; m <= 60; ++m)
    EXPECT_EQ(bernoulli(m), at[static_cast<std::size_t>(m)]) << "m = " << m;
  EXPECT_EQ(bernoulli(1), -at[1]);
}

TEST(Bernoulli, Recurrence) {
  for (long m = 1; m <= 60; ++m) {
    Rational s = 0;
    for (long j = 0; j <= m; ++j)
      s += Rational(binomial(m + 1, j)) * bernoulli(j);
    EXPECT_EQ(s, 0) << "m = " << m;
  }
}

TEST(Euler, KnownValues) {
  EXPECT_EQ(euler_number(0), 1);
  EXPECT_EQ(euler_number(1), 0);
  EXPECT_EQ(euler_number(2), 1);
  EXPECT_EQ(euler_number(4), 5);
  EXPECT_EQ(euler_number(6), 61);
  EXPECT_EQ(euler_number(10), 50521);
}

TEST(Euler, MatchesSeidelTriangle) {
  auto sec = secant_numbers(25);
  for (long k = 0; k <= 25; ++k)
    EXPECT_EQ(euler_number(2 * k), sec[static_cast<std::size_t>(k)]);
}

TEST(Euler, CosineTimesSecantIsOne) {
  // coefficient of t^{2N}/(2N)! in cos(t) sec(t)
  for (long n = 1; n <= 30; ++n) {
    Integer s = 0;
    for (long j = 0; j <= n; ++j) {
      Integer term = binomial(2 * n, 2 * j) * euler_number(2 * j);
      s += ((n - j) % 2 == 0) ? term : Integer(-term);
    }
    EXPECT_EQ(s, 0) << "order " << 2 * n;
  }
}

TEST(PartitionCount, Values) {
  EXPECT_EQ(partition_count(0), 1);
  EXPECT_EQ(partition_count(4), 5);
  EXPECT_EQ(partition_count(13), 101);
  EXPECT_EQ(partition_count(100), Integer("190569292"));
  auto dp = partitions_by_dp(80);
  for (long n = 0; n <= 80; ++n)
    EXPECT_EQ(partition_count(n), dp[static_cast<std::size_t>(n)]);
}

TEST(Rational, CanonicalAfterArithmetic) {
  Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    EXPECT_EQ(Rational((a + b) + c), Rational(a + (b + c)));
    EXPECT_EQ(Rational((a * b) * c), Rational(a * (b * c)));
    EXPECT_EQ(Rational(a * (b + c)), Rational(a * b + a * c));
    EXPECT_TRUE(is_canonical(Rational(a * b - c)));
    EXPECT_EQ(parse_rational(to_string(Rational(a - b))), Rational(a - b));
  }
}

TEST(Rational, MakeRationalReduces) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ParseIsStrict) {
  EXPECT_EQ(parse_rational("-5161/41472"), make_rational(-5161, 41472));
  EXPECT_EQ(parse_rational("0"), 0);
  for (const char *bad : {"", "-", "1/", "/2", "2/4", "1/-2", "-0", "01",
                          "1/0", "1/02", "+1", " 1", "1.5", "32/-3"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, Powers) {
  EXPECT_EQ(pow2(10), 1024);
  EXPECT_EQ(pow_int(Integer(-3), 3), -27);
  EXPECT_EQ(pow_rat(Q("-2/3"), 3), Q("-8/27"));
  EXPECT_EQ(neg_one_pow(7), -1);
  EXPECT_EQ(neg_one_pow(0), 1);
}
