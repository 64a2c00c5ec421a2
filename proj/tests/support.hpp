#ifndef TAUTRING_TESTS_SUPPORT_HPP
#define TAUTRING_TESTS_SUPPORT_HPP

#include "tautring/tautring.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using tautring::Integer;
using tautring::MultiIndex;
using tautring::Rational;

inline Rational Q(const char *s) { return tautring::parse_rational(s); }
inline MultiIndex MI(const char *s) { return MultiIndex::parse(s); }

/// Fixed-seed generator so failures reproduce.
class Gen {
public:
  explicit Gen(std::uint64_t seed = 0x7a17u) : rng_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Rational rational(long span = 1000) {
    long den = uniform(1, span);
    return tautring::make_rational(uniform(-span, span), den);
  }

  /// Random multi-index with degree at most max_degree.
  MultiIndex multi_index(long max_degree) {
    long budget = uniform(0, max_degree);
    std::vector<long> parts;
    while (budget > 0) {
      long p = uniform(1, budget);
      parts.push_back(p);
      budget -= p;
    }
    return MultiIndex::from_parts(parts);
  }

  /// Random partition of exactly n, as a multi-index.
  MultiIndex of_degree(long n) {
    std::vector<long> parts;
    while (n > 0) {
      long p = uniform(1, n);
      parts.push_back(p);
      n -= p;
    }
    return MultiIndex::from_parts(parts);
  }

private:
  std::mt19937_64 rng_;
};

} // namespace testing_support

#endif
