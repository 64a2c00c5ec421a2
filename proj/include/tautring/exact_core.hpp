#ifndef TAUTRING_EXACT_CORE_HPP
#define TAUTRING_EXACT_CORE_HPP

// Integer combinatorics and the classical number sequences (Bernoulli,
// Euler, partition numbers). Sequence tables grow on demand and live for the
// whole process.

#include "tautring/rational.hpp"

#include <cstddef>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautring {

inline Integer factorial(long n) {
  if (n < 0)
    throw std::invalid_argument("factorial of negative integer " +
                                std::to_string(n));
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// n!! with (-1)!! = 0!! = 1.
inline Integer double_factorial(long n) {
  if (n < -1)
    throw std::invalid_argument("double factorial undefined for " +
                                std::to_string(n));
  if (n <= 0)
    return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  if (n < 0)
    throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Integer multinomial(long n, std::span<const long> parts) {
  long total = 0;
  for (long p : parts) {
    if (p < 0)
      throw std::invalid_argument("multinomial with negative part");
    total += p;
  }
  if (total != n)
    throw std::invalid_argument("multinomial parts sum to " +
                                std::to_string(total) + ", expected " +
                                std::to_string(n));
  Integer r = 1;
  long remaining = n;
  for (long p : parts) {
    r *= binomial(remaining, p);
    remaining -= p;
  }
  return r;
}

inline Integer multinomial(long n, std::initializer_list<long> parts) {
  return multinomial(n, std::span<const long>(parts.begin(), parts.size()));
}

namespace detail {

// Append-only table; `extend(values, next_index)` computes entry next_index
// given all earlier entries.
template <typename T, typename Extend> class SequenceTable {
public:
  explicit SequenceTable(std::vector<T> seed, Extend extend)
      : values_(std::move(seed)), extend_(std::move(extend)) {}

  T at(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n)
      values_.push_back(extend_(values_, values_.size()));
    return values_[n];
  }

private:
  std::mutex mutex_;
  std::vector<T> values_;
  Extend extend_;
};

template <typename T, typename Extend>
SequenceTable<T, Extend> make_table(std::vector<T> seed, Extend extend) {
  return SequenceTable<T, Extend>(std::move(seed), std::move(extend));
}

inline auto &bernoulli_table() {
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1
  static auto table = make_table<Rational>(
      {Rational(1)}, [](const std::vector<Rational> &b, std::size_t m) {
        Rational s = 0;
        for (std::size_t j = 0; j < m; ++j)
          s += Rational(binomial(static_cast<long>(m + 1), static_cast<long>(j))) * b[j];
        Rational r = -s / Rational(static_cast<long>(m + 1));
        return r;
      });
  return table;
}

inline auto &euler_even_table() {
  // entry k holds E_{2k}; sec(t) cos(t) = 1 gives
  // sum_{j=0}^{k} (-1)^{k-j} binom(2k, 2j) E_{2j} = 0 for k >= 1
  static auto table = make_table<Integer>(
      {Integer(1)}, [](const std::vector<Integer> &e, std::size_t k) {
        Integer s = 0;
        for (std::size_t j = 0; j < k; ++j) {
          Integer term = binomial(static_cast<long>(2 * k), static_cast<long>(2 * j)) * e[j];
          if ((k - j) % 2 == 0)
            s += term;
          else
            s -= term;
        }
        return Integer(-s);
      });
  return table;
}

inline auto &partition_table() {
  // Euler pentagonal-number recurrence
  static auto table = make_table<Integer>(
      {Integer(1)}, [](const std::vector<Integer> &p, std::size_t n) {
        Integer s = 0;
        const long nn = static_cast<long>(n);
        for (long k = 1;; ++k) {
          long g1 = k * (3 * k - 1) / 2;
          if (g1 > nn)
            break;
          long g2 = k * (3 * k + 1) / 2;
          Integer term = p[static_cast<std::size_t>(nn - g1)];
          if (g2 <= nn)
            term += p[static_cast<std::size_t>(nn - g2)];
          if (k % 2 == 1)
            s += term;
          else
            s -= term;
        }
        return s;
      });
  return table;
}

} // namespace detail

/// B_m, coefficient of t^m/m! in t/(e^t - 1); B_1 = -1/2.
inline Rational bernoulli(long m) {
  if (m < 0)
    throw std::invalid_argument("bernoulli index must be >= 0");
  return detail::bernoulli_table().at(static_cast<std::size_t>(m));
}

/// E_m, coefficient of t^m/m! in sec(t). All even-index values positive.
inline Integer euler_number(long m) {
  if (m < 0)
    throw std::invalid_argument("euler number index must be >= 0");
  if (m % 2 == 1)
    return 0;
  return detail::euler_even_table().at(static_cast<std::size_t>(m / 2));
}

inline Integer partition_count(long n) {
  if (n < 0)
    throw std::invalid_argument("partition count index must be >= 0");
  return detail::partition_table().at(static_cast<std::size_t>(n));
}

} // namespace tautring

#endif // TAUTRING_EXACT_CORE_HPP
