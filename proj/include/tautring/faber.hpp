#ifndef TAUTRING_FABER_HPP
#define TAUTRING_FABER_HPP

// Top intersections kappa(m) = Fab_g(m) kappa_{g-2} for |m| = g - 2, and the
// normalized ratios F_{g,n}(m) they are built from.
//
// Production path:  F_{g,n} by the C-convolution recursion
//     2|m| F_{g,n}(m) = (2g+n-2) sum_{L+L'=m, L != 0} C_L F_{g,n}(L'),
//   then Fab_g(m) = (2g-3)!! m! F_g(m) / (2g-2).
// Independent routes kept as oracles:
//   - fab_direct: the ordered-decomposition sum over (2g-3+r)! terms;
//   - f_closed: the recursion expanded into ordered decompositions;
//   - f_top_degree: recursion among |m| = g-2 values only, via D_{g,L};
//   - f_onerow / f_zero_closed: Bernoulli-number formulas for m = 1^k.

#include "tautring/constants.hpp"
#include "tautring/exact_core.hpp"
#include "tautring/fcache.hpp"
#include "tautring/memo.hpp"
#include "tautring/multiindex.hpp"
#include "tautring/rational.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tautring {

/// Whether (g, m) lies in the range where F_g(m) is an intersection number
/// (g >= 2, |m| <= g - 2). Outside it F is only a formal extension.
inline bool is_geometric(long g, const MultiIndex &m) {
  return g >= 2 && m.degree() <= g - 2;
}

inline void require_top_degree(long g, const MultiIndex &m, long min_genus) {
  if (g < min_genus)
    throw std::invalid_argument("genus must be >= " +
                                std::to_string(min_genus) + " (got " +
                                std::to_string(g) + ")");
  if (m.degree() != g - 2)
    throw std::invalid_argument("|m| = " + std::to_string(m.degree()) +
                                " but g - 2 = " + std::to_string(g - 2) +
                                " (degree mismatch for m = " + m.to_string() +
                                ")");
}

/// kappa(m) = coefficient * kappa_{g-2}
struct KappaRelation {
  long g;
  MultiIndex m;
  Rational coefficient;

  std::string to_string() const {
    return "kappa(" + m.to_string() + ") = " + tautring::to_string(coefficient) +
           " * kappa_{" + std::to_string(g - 2) + "}";
  }
};

class FaberEngine {
public:
  FaberEngine() : constants_(std::make_shared<ConstantTable>()) {}
  explicit FaberEngine(std::shared_ptr<ConstantTable> constants)
      : constants_(std::move(constants)) {}

  ConstantTable &constants() { return *constants_; }
  FCache &cache() { return cache_; }
  const FCache &cache() const { return cache_; }

  /// F_g(m) for any integer g (formal for g < 2 or |m| > g - 2).
  Rational f_value(long g, const MultiIndex &m) { return f_n_value(g, 0, m); }

  Rational f_n_value(long g, long n, const MultiIndex &m) {
    if (n < 0)
      throw std::invalid_argument("n must be >= 0");
    if (m.empty())
      return 1;
    FKey key{g, n, m};
    if (auto v = cache_.find(key))
      return *v;
    Rational s = 0;
    for_each_sub_index(m, [&](const MultiIndex &l) {
      if (l.empty())
        return;
      s += constants_->c(l) * f_n_value(g, n, m - l);
    });
    Rational value = make_rational(2 * g + n - 2, 2 * m.degree()) * s;
    cache_.insert(key, value);
    return value;
  }

  /// Fab_g(m) = (2g-3)!! m! F_g(m) / (2g-2), for |m| = g - 2.
  Rational fab_from_f(long g, const MultiIndex &m) {
    require_top_degree(g, m, 2);
    return Rational(double_factorial(2 * g - 3) * m.factorial()) *
           f_value(g, m) / Rational(2 * g - 2);
  }

  KappaRelation relation(long g, const MultiIndex &m) {
    return {g, m, fab_from_f(g, m)};
  }

  /// The recursion unrolled over ordered decompositions:
  ///   F_g(m) = sum_k (g-1)^k sum_{m = m_1+...+m_k} prod C_{m_j}
  ///                                   / prod |m_1 + ... + m_j|
  Rational f_closed(long g, const MultiIndex &m) {
    if (m.empty())
      throw std::invalid_argument("f_closed requires a nonzero multi-index");
    Rational total = 0;
    const Rational gm1(g - 1);
    std::function<void(const MultiIndex &, long, const Rational &)> rec =
        [&](const MultiIndex &rest, long prefix_degree, const Rational &acc) {
          for_each_sub_index(rest, [&](const MultiIndex &part) {
            if (part.empty())
              return;
            long d = prefix_degree + part.degree();
            Rational next = acc * gm1 * constants_->c(part) / Rational(d);
            MultiIndex remaining = rest - part;
            if (remaining.empty())
              total += next;
            else
              rec(remaining, d, next);
          });
        };
    rec(m, 0, Rational(1));
    return total;
  }

  /// F_g(m) for |m| = g - 2 by induction on ||m||:
  ///   (||m||-1) F_g(m) = sum_{L+L'=m, ||L'|| >= 2} D_{g,L'}
  ///                        (L + delta_{|L'|})! / L!  F_g(L + delta_{|L'|}),
  /// from F_g(delta_{g-2}) = (2g-2)/(2g-3)!!. Never touches the F-cache.
  Rational f_top_degree(long g, const MultiIndex &m) {
    require_top_degree(g, m, 3);
    return top_memo_.get_or_compute(GenusIndexKey{g, m}, [&]() -> Rational {
      if (m.length() == 1)
        return Rational(2 * g - 2) / Rational(double_factorial(2 * g - 3));
      Rational s = 0;
      for_each_sub_index(m, [&](const MultiIndex &l) {
        MultiIndex lp = m - l;
        if (lp.length() < 2)
          return;
        long j = lp.degree();
        MultiIndex shifted = l.plus_delta(j);
        // (L + delta_j)! / L! = L(j) + 1
        const long multiplicity = l[static_cast<std::size_t>(j)] + 1L;
        s += constants_->d(g, lp) * Rational(multiplicity) *
             f_top_degree(g, shifted);
      });
      return s / Rational(m.length() - 1);
    });
  }

  MemoStats cache_stats() const { return cache_.stats(); }

private:
  std::shared_ptr<ConstantTable> constants_;
  FCache cache_;
  MemoMap<GenusIndexKey, Rational, GenusIndexKeyHash> top_memo_;
};

/// Fab_g(m) straight from the ordered-decomposition formula
///   sum_{r} (-1)^{||m||-r}/r! sum_{m = m_1+...+m_r, m_i != 0}
///     binom(m; m_1..m_r) (2g-3+r)! / ((2g-2)!! prod (2|m_j|+1)!!).
/// Exponential in ||m||. For g = 2 (m empty) only the r = 0 term survives,
/// giving 1/2 = 1/kappa_0.
inline Rational fab_direct(long g, const MultiIndex &m) {
  require_top_degree(g, m, 2);
  const Integer base = double_factorial(2 * g - 2);
  if (m.empty())
    return Rational(factorial(2 * g - 3)) / Rational(base);
  const long len = m.length();
  Rational total = 0;
  for (long r = 1; r <= len; ++r) {
    Rational inner_q = 0; // sum of multinomial / prod (2|m_j|+1)!!
    for_each_ordered_decomposition(m, r, [&](std::span<const MultiIndex> parts) {
      Integer den = 1;
      for (const auto &p : parts)
        den *= double_factorial(2 * p.degree() + 1);
      inner_q += Rational(mi_multinomial(m, parts)) / Rational(den);
    });
    Rational term = inner_q * Rational(factorial(2 * g - 3 + r)) /
                    Rational(base * factorial(r));
    if ((len - r) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// sum over compositions (a_1, ..., a_n) of k of
///   prod_j x * w(a_j) / (a_1 + ... + a_j),
/// evaluated by dynamic programming on the running total.
template <typename Weight>
Rational composition_series(long k, const Rational &x, Weight w) {
  std::vector<Rational> s(static_cast<std::size_t>(k) + 1, Rational(0));
  s[0] = 1;
  for (long t = 1; t <= k; ++t) {
    Rational acc = 0;
    for (long a = 1; a <= t; ++a)
      acc += s[static_cast<std::size_t>(t - a)] * w(a);
    s[static_cast<std::size_t>(t)] = acc * x / Rational(t);
  }
  return s[static_cast<std::size_t>(k)];
}

/// |B_{2a}| / (a! (2a-1)!!)
inline Rational onerow_bernoulli_weight(long a) {
  return abs(bernoulli(2 * a)) /
         Rational(factorial(a) * double_factorial(2 * a - 1));
}

/// F_g(1^k) = 2^{2k} sum_n (g-1)^n sum_{a_1+...+a_n=k}
///              prod |B_{2a_j}| / (a_j! (2a_j-1)!! |a_1+...+a_j|)
inline Rational f_onerow(long g, long k) {
  if (k < 0)
    throw std::invalid_argument("f_onerow requires k >= 0");
  if (k == 0)
    return 1;
  return Rational(pow2(2 * k)) *
         composition_series(k, Rational(g - 1), onerow_bernoulli_weight);
}

/// F_0(1^k) = (-1)^k 2^{2k} / ((k+1)! (2k+1)!!)
inline Rational f_zero_closed(long k) {
  if (k < 0)
    throw std::invalid_argument("f_zero_closed requires k >= 0");
  return neg_one_pow(k) * Rational(pow2(2 * k)) /
         Rational(factorial(k + 1) * double_factorial(2 * k + 1));
}

/// F_g(1^{g-2}) = 2^{2g-4} (g-2)! / (2g-3)!!
inline Rational f_faber_zagier_closed(long g) {
  return Rational(pow2(2 * g - 4) * factorial(g - 2)) /
         Rational(double_factorial(2 * g - 3));
}

/// Fab_g(1^{g-2}) = 2^{2g-5} ((g-2)!)^2 / (g-1)
inline Rational fab_faber_zagier_closed(long g) {
  if (g < 3)
    throw std::invalid_argument("Faber-Zagier closed form requires g >= 3");
  Integer f = factorial(g - 2);
  return Rational(pow2(2 * g - 5) * f * f) / Rational(g - 1);
}

struct SumCheck {
  Rational lhs;
  Rational rhs;
};

/// Multi-index recording the cycle sums of `perm` acting on `d`.
inline MultiIndex cycle_type_index(std::span<const long> d,
                                   std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<long> sums;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start])
      continue;
    long s = 0;
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      s += d[i];
    }
    sums.push_back(s);
  }
  return MultiIndex::from_parts(sums);
}

/// lhs = sum over sigma in S_n of Fab_g(kappa_sigma),
/// rhs = (2g-3+n)! / ((2g-2)!! prod (2d_j+1)!!).
inline SumCheck faber_sum_check(FaberEngine &engine, long g,
                                std::span<const long> d) {
  const auto n = d.size();
  if (n == 0 || n > 7)
    throw std::invalid_argument("faber_sum_check supports 1 <= n <= 7");
  long total = 0;
  for (long dj : d) {
    if (dj < 1)
      throw std::invalid_argument("faber_sum_check requires d_j >= 1");
    total += dj;
  }
  if (total != g - 2)
    throw std::invalid_argument("sum of d_j must equal g - 2");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational lhs = 0;
  do {
    lhs += engine.fab_from_f(g, cycle_type_index(d, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  Integer den = double_factorial(2 * g - 2);
  for (long dj : d)
    den *= double_factorial(2 * dj + 1);
  Rational rhs = Rational(factorial(2 * g - 3 + static_cast<long>(n))) /
                 Rational(den);
  return {lhs, rhs};
}

} // namespace tautring

#endif // TAUTRING_FABER_HPP
