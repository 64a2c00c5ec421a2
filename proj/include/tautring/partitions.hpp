#ifndef TAUTRING_PARTITIONS_HPP
#define TAUTRING_PARTITIONS_HPP

// Vector partition numbers P(m), the double-partition counts D(n) and the
// guess function f(s) for the stable relation dimensions a(s).

#include "tautring/exact_core.hpp"
#include "tautring/memo.hpp"
#include "tautring/multiindex.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tautring {

namespace detail {
struct ExponentVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t> &v) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (auto e : v)
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
} // namespace detail

/// Number of unordered decompositions of a multi-index into nonzero parts,
/// by the Cheema-Motzkin recursion
///   m_1 P(m) = sum_{0 != a <= m} P(m - a) sum_{k | gcd(a)} a_1 / k.
/// P depends only on the multiset of nonzero exponents, so values are
/// memoized on the sorted exponent vector.
class VectorPartitionCounter {
public:
  Integer count(const MultiIndex &m) { return count_vector(m.exponents()); }

  Integer count_vector(std::vector<std::uint32_t> v) {
    v.erase(std::remove(v.begin(), v.end(), 0u), v.end());
    std::sort(v.begin(), v.end(), std::greater<>());
    if (v.empty())
      return 1;
    return memo_.get_or_compute(v, [&] { return evaluate(v); });
  }

private:
  Integer evaluate(const std::vector<std::uint32_t> &v) {
    // differentiate in the first (largest) coordinate; a_1 = 0 terms vanish
    const std::size_t s = v.size();
    std::vector<std::uint32_t> a(s, 0);
    a[0] = 1;
    Integer total = 0;
    std::vector<std::uint32_t> rest(s);
    for (;;) {
      std::uint32_t g = 0;
      for (auto x : a)
        g = std::gcd(g, x);
      Integer weight = 0;
      for (std::uint32_t k = 1; k <= g; ++k)
        if (g % k == 0)
          weight += a[0] / k;
      for (std::size_t i = 0; i < s; ++i)
        rest[i] = v[i] - a[i];
      total += weight * count_vector(rest);

      std::size_t i = 0;
      for (; i < s; ++i) {
        const std::uint32_t lo = (i == 0) ? 1 : 0;
        if (a[i] < v[i]) {
          ++a[i];
          break;
        }
        a[i] = lo;
      }
      if (i == s)
        break;
    }
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), total.get_mpz_t(), v[0]);
    return q;
  }

  MemoMap<std::vector<std::uint32_t>, Integer, detail::ExponentVectorHash>
      memo_;
};

inline VectorPartitionCounter &shared_vector_partition_counter() {
  static VectorPartitionCounter counter;
  return counter;
}

inline Integer vector_partition_count(const MultiIndex &m) {
  return shared_vector_partition_counter().count(m);
}

/// D(n) = sum_{|m| = n} P(m).
inline Integer double_partition_by_sum(long n) {
  Integer total = 0;
  for (const auto &m : indices_of_degree(n))
    total += vector_partition_count(m);
  return total;
}

/// D(n) as the coefficient of x^n in prod_{k >= 1} (1 - x^k)^{-p(k)}, via
/// the Euler transform n D(n) = sum_{k=1}^{n} b_k D(n - k) with
/// b_k = sum_{d | k} d p(d).
inline std::vector<Integer> double_partition_series(long n_max) {
  if (n_max < 0)
    throw std::invalid_argument("degree must be >= 0");
  const auto n = static_cast<std::size_t>(n_max);
  std::vector<Integer> b(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    Integer dp = Integer(static_cast<unsigned long>(d)) *
                 partition_count(static_cast<long>(d));
    for (std::size_t k = d; k <= n; k += d)
      b[k] += dp;
  }
  std::vector<Integer> D(n + 1, 0);
  D[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Integer s = 0;
    for (std::size_t k = 1; k <= m; ++k)
      s += b[k] * D[m - k];
    mpz_divexact_ui(D[m].get_mpz_t(), s.get_mpz_t(), m);
  }
  return D;
}

inline Integer double_partition(long n) {
  return double_partition_series(n).back();
}

/// f(s) = sum_{0 <= r <= [s/3]} p(s + 1 - 3r) - p(s - 3r).
inline Integer faber_guess_f(long s) {
  if (s < 1)
    throw std::invalid_argument("faber_guess_f requires s >= 1");
  Integer f = 0;
  for (long r = 0; r <= s / 3; ++r)
    f += partition_count(s + 1 - 3 * r) - partition_count(s - 3 * r);
  return f;
}

} // namespace tautring

#endif // TAUTRING_PARTITIONS_HPP
