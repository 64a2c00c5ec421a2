#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <vector>

using namespace tautring;
using testing_support::MI;

namespace {

// Multisets of nonzero sub-indices summing to m: choose parts in
// non-increasing position of a fixed list.
Integer brute_force_vpart(const MultiIndex &m) {
  std::vector<MultiIndex> candidates;
  for_each_sub_index(m, [&](const MultiIndex &l) {
    if (!l.empty())
      candidates.push_back(l);
  });
  std::function<Integer(const MultiIndex &, std::size_t)> count =
      [&](const MultiIndex &rest, std::size_t first) -> Integer {
    if (rest.empty())
      return 1;
    Integer c = 0;
    for (std::size_t i = first; i < candidates.size(); ++i)
      if (candidates[i].is_sub_index_of(rest))
        c += count(rest - candidates[i], i);
    return c;
  };
  return count(m, 0);
}

// prod_k (1 - x^k)^{-p(k)} by repeated multiplication with 1/(1 - x^k).
std::vector<Integer> euler_product(long n_max) {
  std::vector<Integer> s(static_cast<std::size_t>(n_max) + 1, 0);
  s[0] = 1;
  for (long k = 1; k <= n_max; ++k) {
    const long copies = partition_count(k).get_si();
    for (long c = 0; c < copies; ++c)
      for (long t = k; t <= n_max; ++t)
        s[static_cast<std::size_t>(t)] += s[static_cast<std::size_t>(t - k)];
  }
  return s;
}

} // namespace

TEST(VectorPartition, Examples) {
  EXPECT_EQ(vector_partition_count(MultiIndex{}), 1);
  EXPECT_EQ(vector_partition_count(MI("1^1")), 1);
  EXPECT_EQ(vector_partition_count(MI("1^2")), 2);
  EXPECT_EQ(vector_partition_count(MI("1^1.2^1")), 2);
  EXPECT_EQ(vector_partition_count(MI("1^2.2^1")), 4);
  // one row: ordinary partitions
  for (long k = 1; k <= 20; ++k)
    EXPECT_EQ(vector_partition_count(MultiIndex::ones(k)), partition_count(k));
}

TEST(VectorPartition, MatchesBruteForceUpToDegreeSix) {
  for (long n = 0; n <= 6; ++n)
    for (const auto &m : indices_of_degree(n))
      EXPECT_EQ(vector_partition_count(m), brute_force_vpart(m)) << m;
}

TEST(VectorPartition, MatchesBruteForceOnWiderIndices) {
  for (const char *s : {"1^2.2^2", "1^3.3^1", "2^4", "1^1.2^1.3^1.4^1", "1^4.2^2"})
    EXPECT_EQ(vector_partition_count(MI(s)), brute_force_vpart(MI(s))) << s;
}

TEST(VectorPartition, SymmetricInCoordinates) {
  // P depends only on the multiset of exponents
  EXPECT_EQ(vector_partition_count(MI("1^3.2^1")), vector_partition_count(MI("1^1.2^3")));
  EXPECT_EQ(vector_partition_count(MI("1^2.5^4")), vector_partition_count(MI("2^4.3^2")));
}

TEST(DoublePartition, Table) {
  const long expected[] = {1, 1, 3, 6, 14, 27};
  for (long n = 0; n <= 5; ++n)
    EXPECT_EQ(double_partition(n), expected[n]);
  EXPECT_EQ(double_partition(10), 817);
  EXPECT_EQ(double_partition(20), 318106);
}

TEST(DoublePartition, BothPathsAgree) {
  auto product = euler_product(25);
  auto series = double_partition_series(25);
  ASSERT_EQ(series.size(), 26u);
  for (long n = 0; n <= 25; ++n) {
    EXPECT_EQ(series[static_cast<std::size_t>(n)], product[static_cast<std::size_t>(n)]);
    EXPECT_EQ(double_partition_by_sum(n), product[static_cast<std::size_t>(n)]) << n;
  }
}

TEST(GuessFunction, Values) {
  EXPECT_EQ(faber_guess_f(1), 1);
  EXPECT_EQ(faber_guess_f(2), 1);
  EXPECT_EQ(faber_guess_f(10), 24);
  EXPECT_EQ(faber_guess_f(11), 34);
  const long table[] = {1, 1, 2, 3, 5, 6, 10, 13, 18, 24};
  for (long s = 1; s <= 10; ++s)
    EXPECT_EQ(faber_guess_f(s), table[s - 1]) << s;
}
