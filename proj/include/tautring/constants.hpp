#ifndef TAUTRING_CONSTANTS_HPP
#define TAUTRING_CONSTANTS_HPP

// Convolution-defined constant families indexed by multi-indices:
//
//   beta^{-1}_L  = (-1)^{||L||} / (L! (2|L|+1)!!)
//   gamma^{-1}_L = (-1)^{||L||} / (L! (2|L|-1)!!)
//   beta, gamma  = convolution inverses of the above (beta_0 = gamma_0 = 1)
//   C_L          = sum_{e+f=L} 2|e| beta_e beta^{-1}_f
//                = -sum_{e+f=L} gamma^{-1}_e beta_f,       C_0 = -1
//   D_{g,L}      = -1/L! + (2g-1)/(2(g-2)) sum_{L1+L2=L, L1 != 0}
//                         C_{L1} (2|L1|+1)!! / L2!
//
// Every convolution runs over componentwise sub-indices, each split once,
// without multinomial weights. The one-row closed forms (index 1^k) are
// kept separate so they can serve as independent checks.

#include "tautring/errors.hpp"
#include "tautring/exact_core.hpp"
#include "tautring/memo.hpp"
#include "tautring/multiindex.hpp"
#include "tautring/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tautring {

struct GenusIndexKey {
  long g;
  MultiIndex m;
  friend bool operator==(const GenusIndexKey &, const GenusIndexKey &) = default;
};

struct GenusIndexKeyHash {
  std::size_t operator()(const GenusIndexKey &k) const noexcept {
    return MultiIndexHash{}(k.m) * 1000003u ^ std::hash<long>{}(k.g);
  }
};

inline Rational beta_inv(const MultiIndex &l) {
  Integer den = l.factorial() * double_factorial(2 * l.degree() + 1);
  return Rational(neg_one_pow(l.length())) / Rational(den);
}

inline Rational gamma_inv(const MultiIndex &l) {
  Integer den = l.factorial() * double_factorial(2 * l.degree() - 1);
  return Rational(neg_one_pow(l.length())) / Rational(den);
}

inline void require_genus_for_d(long g) {
  if (g < 3)
    throw std::invalid_argument("D_{g,L} requires g >= 3 (got g = " +
                                std::to_string(g) + ")");
}

/// Memoized beta, gamma, C and D. Safe for concurrent use.
class ConstantTable {
public:
  Rational beta(const MultiIndex &l) {
    if (l.empty())
      return 1;
    return beta_.get_or_compute(l, [&]() -> Rational {
      return invert_step(l, [this](const MultiIndex &x) -> Rational { return beta(x); },
                         beta_inv);
    });
  }

  Rational gamma(const MultiIndex &l) {
    if (l.empty())
      return 1;
    return gamma_.get_or_compute(l, [&]() -> Rational {
      return invert_step(l, [this](const MultiIndex &x) -> Rational { return gamma(x); },
                         gamma_inv);
    });
  }

  /// sum_{e+f=L} 2|e| beta_e beta^{-1}_f
  Rational c_from_beta(const MultiIndex &l) {
    Rational s = 0;
    for_each_sub_index(l, [&](const MultiIndex &e) {
      if (e.empty())
        return;
      s += Rational(2 * e.degree()) * beta(e) * beta_inv(l - e);
    });
    return s;
  }

  /// -sum_{e+f=L} gamma^{-1}_e beta_f
  Rational c_from_gamma_inv(const MultiIndex &l) {
    Rational s = 0;
    for_each_sub_index(l, [&](const MultiIndex &e) {
      s -= gamma_inv(e) * beta(l - e);
    });
    return s;
  }

  /// C_L; both defining sums are evaluated and must agree.
  Rational c(const MultiIndex &l) {
    if (l.empty())
      return -1;
    return c_.get_or_compute(l, [&]() -> Rational {
      Rational a = c_from_beta(l);
      Rational b = c_from_gamma_inv(l);
      if (a != b)
        throw InconsistencyError("C_" + l.to_string() +
                                 ": beta route gives " + to_string(a) +
                                 ", gamma route gives " + to_string(b));
      return a;
    });
  }

  Rational d(long g, const MultiIndex &l) {
    require_genus_for_d(g);
    if (l.empty())
      return -1;
    return d_.get_or_compute(GenusIndexKey{g, l}, [&]() -> Rational {
      Rational s = 0;
      for_each_sub_index(l, [&](const MultiIndex &l1) {
        if (l1.empty())
          return;
        MultiIndex l2 = l - l1;
        s += c(l1) * Rational(double_factorial(1 + 2 * l1.degree())) /
             Rational(l2.factorial());
      });
      Rational scale = make_rational(2 * g - 1, 2 * (g - 2));
      return Rational(-1) / Rational(l.factorial()) + scale * s;
    });
  }

  /// A_{g,L} = L! D_{g,L}
  Rational a(long g, const MultiIndex &l) {
    return Rational(l.factorial()) * d(g, l);
  }

  std::size_t size() const {
    return beta_.size() + gamma_.size() + c_.size() + d_.size();
  }

private:
  // x_b = -sum_{L < b} x_L y_{b-L}, with y_0 = 1
  template <typename Self, typename Inverse>
  static Rational invert_step(const MultiIndex &b, Self self, Inverse inv) {
    Rational s = 0;
    for_each_sub_index(b, [&](const MultiIndex &l) {
      if (l == b)
        return;
      s += self(l) * inv(b - l);
    });
    return -s;
  }

  MemoMap<MultiIndex, Rational, MultiIndexHash> beta_;
  MemoMap<MultiIndex, Rational, MultiIndexHash> gamma_;
  MemoMap<MultiIndex, Rational, MultiIndexHash> c_;
  MemoMap<GenusIndexKey, Rational, GenusIndexKeyHash> d_;
};

// One-row closed forms for the index 1^k.
namespace onerow {

inline Rational beta_inv(long k) {
  return neg_one_pow(k) /
         Rational(factorial(k) * double_factorial(2 * k + 1));
}

inline Rational gamma_inv(long k) {
  return neg_one_pow(k) /
         Rational(factorial(k) * double_factorial(2 * k - 1));
}

/// (-1)^k (2 - 2^{2k}) B_{2k} / (k! (2k-1)!!)
inline Rational beta(long k) {
  Rational num = neg_one_pow(k) * Rational(2 - pow2(2 * k)) * bernoulli(2 * k);
  return num / Rational(factorial(k) * double_factorial(2 * k - 1));
}

/// E_{2k} / (k! (2k-1)!!). The k! makes this agree with the convolution
/// definition of gamma; without it the value at k = 2 would be 5/3
/// instead of 5/6.
inline Rational gamma(long k) {
  return Rational(euler_number(2 * k)) /
         Rational(factorial(k) * double_factorial(2 * k - 1));
}

/// E_{2k} / (2k-1)!!, as the formula is sometimes quoted (without k!).
inline Rational gamma_without_factorial(long k) {
  return Rational(euler_number(2 * k)) / Rational(double_factorial(2 * k - 1));
}

/// (-1)^{k+1} 2^{2k} B_{2k} / (k! (2k-1)!!); equals -1 at k = 0.
inline Rational c(long k) {
  if (k < 0)
    throw std::invalid_argument("c_onerow_closed requires k >= 0");
  Rational num = neg_one_pow(k + 1) * Rational(pow2(2 * k)) * bernoulli(2 * k);
  return num / Rational(factorial(k) * double_factorial(2 * k - 1));
}

/// D_{g,k} = 3/(2(g-2)) / k!
///         + (2g-1)/(2(g-2)) sum_{j=0}^{k} (2j+1)(-1)^{j+1} 2^{2j} B_{2j}
///                                        / (j! (k-j)!)
inline Rational d(long g, long k) {
  require_genus_for_d(g);
  if (k < 0)
    throw std::invalid_argument("d_onerow_closed requires k >= 0");
  Rational s = 0;
  for (long j = 0; j <= k; ++j) {
    s += Rational(2 * j + 1) * neg_one_pow(j + 1) * Rational(pow2(2 * j)) *
         bernoulli(2 * j) / Rational(factorial(j) * factorial(k - j));
  }
  return make_rational(3, 2 * (g - 2)) / Rational(factorial(k)) +
         make_rational(2 * g - 1, 2 * (g - 2)) * s;
}

} // namespace onerow

inline Rational beta_onerow_closed(long k) { return onerow::beta(k); }
inline Rational c_onerow_closed(long k) { return onerow::c(k); }
inline Rational d_onerow_closed(long g, long k) { return onerow::d(g, k); }

} // namespace tautring

#endif // TAUTRING_CONSTANTS_HPP
