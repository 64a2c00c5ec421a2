#ifndef TAUTRING_MATRIX_HPP
#define TAUTRING_MATRIX_HPP

// The Faber intersection matrix V_g^k with entries Fab_g(L + L'),
// |L| = k, |L'| = g - 2 - k, and its exact rank.

#include "tautring/exact_core.hpp"
#include "tautring/faber.hpp"
#include "tautring/multiindex.hpp"
#include "tautring/parallel.hpp"
#include "tautring/partitions.hpp"
#include "tautring/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautring {

struct FaberMatrix {
  long g = 0;
  long k = 0;
  std::vector<MultiIndex> rows;
  std::vector<MultiIndex> cols;
  std::vector<std::vector<Rational>> entries;
  std::optional<long> rank;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return cols.size(); }
};

/// Rank over Q of a rectangular rational matrix. Each row is scaled by the
/// lcm of its denominators, then fraction-free (Bareiss) elimination runs
/// on the integer matrix.
inline long exact_rank(const std::vector<std::vector<Rational>> &a) {
  const std::size_t nrows = a.size();
  if (nrows == 0)
    return 0;
  const std::size_t ncols = a.front().size();
  std::vector<std::vector<Integer>> m(nrows, std::vector<Integer>(ncols));
  for (std::size_t i = 0; i < nrows; ++i) {
    if (a[i].size() != ncols)
      throw std::invalid_argument("ragged matrix");
    Integer l = 1;
    for (const auto &x : a[i])
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < ncols; ++j) {
      Integer scale = l / a[i][j].get_den();
      m[i][j] = a[i][j].get_num() * scale;
    }
  }
  long rank = 0;
  Integer prev = 1;
  auto r = static_cast<std::size_t>(0);
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t pivot = r;
    while (pivot < nrows && m[pivot][col] == 0)
      ++pivot;
    if (pivot == nrows)
      continue;
    std::swap(m[pivot], m[r]);
    const Integer &p = m[r][col];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Integer t = p * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = p;
    ++r;
    ++rank;
  }
  return rank;
}

inline long exact_rank(const FaberMatrix &fm) { return exact_rank(fm.entries); }

/// Builds V_g^k. Distinct entry indices L + L' are evaluated on `threads`
/// workers sharing the engine's F-cache; the result does not depend on the
/// worker count.
inline FaberMatrix build_matrix(FaberEngine &engine, long g, long k,
                                unsigned threads = 1, bool with_rank = false) {
  if (g < 3)
    throw std::invalid_argument("build_matrix requires g >= 3");
  if (k < 0 || k > g - 2)
    throw std::invalid_argument("build_matrix requires 0 <= k <= g - 2 (got k = " +
                                std::to_string(k) + ", g = " +
                                std::to_string(g) + ")");
  FaberMatrix fm;
  fm.g = g;
  fm.k = k;
  fm.rows = indices_of_degree(k);
  fm.cols = indices_of_degree(g - 2 - k);

  std::map<MultiIndex, std::size_t> slot;
  std::vector<MultiIndex> distinct;
  for (const auto &r : fm.rows)
    for (const auto &c : fm.cols)
      if (slot.emplace(r + c, distinct.size()).second)
        distinct.push_back(r + c);

  std::vector<Rational> values(distinct.size());
  parallel_for(distinct.size(), threads, [&](std::size_t i) {
    values[i] = engine.fab_from_f(g, distinct[i]);
  });

  fm.entries.assign(fm.rows.size(), std::vector<Rational>(fm.cols.size()));
  for (std::size_t i = 0; i < fm.rows.size(); ++i)
    for (std::size_t j = 0; j < fm.cols.size(); ++j)
      fm.entries[i][j] = values[slot.at(fm.rows[i] + fm.cols[j])];
  if (with_rank)
    fm.rank = exact_rank(fm.entries);
  return fm;
}

/// a(s) values for s = 1..15 as tabulated from rank computations up to g = 36.
inline constexpr std::array<long, 15> kPublishedATable = {
    1, 1, 2, 3, 5, 6, 10, 13, 18, 24, 33, 41, 56, 71, 91};

inline std::optional<long> published_a(long s) {
  if (s < 1 || s > static_cast<long>(kPublishedATable.size()))
    return std::nullopt;
  return kPublishedATable[static_cast<std::size_t>(s - 1)];
}

/// a(s) = p(k) - rank V_{3k-s}^k, for k >= s + 2 (default k = s + 2).
inline long a_value(FaberEngine &engine, long s, std::optional<long> k = {},
                    unsigned threads = 1) {
  if (s < 1)
    throw std::invalid_argument("a_value requires s >= 1");
  const long kk = k.value_or(s + 2);
  if (kk < s + 2)
    throw std::invalid_argument("a_value requires k >= s + 2 (got k = " +
                                std::to_string(kk) + ", s = " +
                                std::to_string(s) + ")");
  const long g = 3 * kk - s;
  FaberMatrix fm = build_matrix(engine, g, kk, threads, true);
  return partition_count(kk).get_si() - *fm.rank;
}

struct ATableRow {
  long s;
  long k;
  long g;
  long a;
  std::optional<long> published;
  long guess_f;

  bool matches_published() const { return !published || *published == a; }
  bool matches_guess() const { return guess_f == a; }
};

inline std::vector<ATableRow> a_table(FaberEngine &engine, long s_max,
                                      unsigned threads = 1) {
  if (s_max < 1)
    throw std::invalid_argument("a_table requires s_max >= 1");
  std::vector<ATableRow> rows;
  for (long s = 1; s <= s_max; ++s) {
    const long k = s + 2;
    rows.push_back({s, k, 3 * k - s, a_value(engine, s, k, threads),
                    published_a(s), faber_guess_f(s).get_si()});
  }
  return rows;
}

} // namespace tautring

#endif // TAUTRING_MATRIX_HPP
