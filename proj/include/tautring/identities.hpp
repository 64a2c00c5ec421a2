#ifndef TAUTRING_IDENTITIES_HPP
#define TAUTRING_IDENTITIES_HPP

// Exact checks of the combinatorial identities satisfied by the top
// intersections, the constants, and the Bernoulli/Euler numbers. Each check
// reports both sides; pass means exact equality.

#include "tautring/constants.hpp"
#include "tautring/exact_core.hpp"
#include "tautring/faber.hpp"
#include "tautring/multiindex.hpp"
#include "tautring/parallel.hpp"
#include "tautring/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tautring {

using CheckParam = std::variant<long, std::string>;

struct CheckResult {
  std::string id;
  std::vector<CheckParam> params;
  Rational lhs;
  Rational rhs;
  bool pass = false;

  CheckResult() = default;
  CheckResult(std::string id_, std::vector<CheckParam> params_, Rational lhs_,
              Rational rhs_)
      : id(std::move(id_)), params(std::move(params_)), lhs(std::move(lhs_)),
        rhs(std::move(rhs_)), pass(lhs == rhs) {}
};

/// Fab_g(1^{g-2}) against 2^{2g-5}((g-2)!)^2/(g-1).
inline CheckResult verify_faber_zagier(FaberEngine &engine, long g) {
  if (g < 3)
    throw std::invalid_argument("verify_faber_zagier requires g >= 3");
  return {"faber_zagier", {g}, engine.fab_from_f(g, MultiIndex::ones(g - 2)),
          fab_faber_zagier_closed(g)};
}

/// F_g(1^{g-2}) against 2^{2g-4}(g-2)!/(2g-3)!!.
inline CheckResult verify_faber_zagier_f(FaberEngine &engine, long g) {
  if (g < 3)
    throw std::invalid_argument("verify_faber_zagier_f requires g >= 3");
  return {"faber_zagier_f", {g}, engine.f_value(g, MultiIndex::ones(g - 2)),
          f_faber_zagier_closed(g)};
}

/// sum_{i=0}^{g-2} D_{g,g-2-i} kappa_1^i kappa_{g-2-i} / i! evaluated in
/// R^{g-2} with kappa_0 = 2g - 2; must vanish.
inline CheckResult verify_tautological(FaberEngine &engine, long g) {
  if (g < 3)
    throw std::invalid_argument("verify_tautological requires g >= 3");
  auto &c = engine.constants();
  const MultiIndex top_ones = MultiIndex::ones(g - 2);
  Rational sum = 0;
  for (long i = 0; i <= g - 4; ++i) {
    MultiIndex m = MultiIndex::ones(i).plus_delta(g - 2 - i);
    sum += c.d(g, MultiIndex::ones(g - 2 - i)) / Rational(factorial(i)) *
           engine.fab_from_f(g, m);
  }
  const Rational fab_ones = engine.fab_from_f(g, top_ones);
  sum += c.d(g, MultiIndex::ones(1)) / Rational(factorial(g - 3)) * fab_ones;
  const Rational kappa0(2 * g - 2);
  sum += c.d(g, MultiIndex{}) / Rational(factorial(g - 2)) * kappa0 * fab_ones;
  return {"tautological", {g}, sum, Rational(0)};
}

/// The g = 6 instance of the codimension-one relation: rebuilds the
/// coefficients of kappa_1^3, kappa_1 kappa_2, kappa_3 from D_{6,k} and
/// substitutes kappa_3 = 5/2304 kappa_1^3, kappa_1 kappa_2 = 127/2304
/// kappa_1^3 (relations in R^3(M_6), taken as input data).
inline std::vector<CheckResult> verify_example_g6(FaberEngine &engine) {
  auto &c = engine.constants();
  constexpr long g = 6;
  auto D = [&](long k) { return c.d(g, MultiIndex::ones(k)); };
  const Rational kappa0(2 * g - 2);
  Rational c111 = D(4) * Rational(g - 1) /
                      Rational(pow2(2 * g - 5) * factorial(g - 2) * factorial(g - 2)) +
                  D(0) * kappa0 / Rational(factorial(4)) +
                  D(1) / Rational(factorial(3));
  Rational c12 = D(2) / Rational(factorial(2));
  Rational c3 = D(3);
  const Rational rel3 = make_rational(5, 2304);
  const Rational rel12 = make_rational(127, 2304);
  std::vector<CheckResult> out;
  out.emplace_back("g6_coeff_kappa1_cubed", std::vector<CheckParam>{g}, c111,
                   make_rational(-5161, 41472));
  out.emplace_back("g6_coeff_kappa1_kappa2", std::vector<CheckParam>{g}, c12,
                   make_rational(49, 24));
  out.emplace_back("g6_coeff_kappa3", std::vector<CheckParam>{g}, c3,
                   make_rational(395, 72));
  out.emplace_back("g6_relation", std::vector<CheckParam>{g},
                   Rational(c111 + c12 * rel12 + c3 * rel3), Rational(0));
  return out;
}

/// sum_n (g+1)^n sum_{a_1+...+a_n=g} prod |B_{2a_j}| / (a_j!(2a_j-1)!! |a_1+...+a_j|)
///   = g! / (2g+1)!!
inline CheckResult verify_bernoulli_sum(long g) {
  if (g < 1)
    throw std::invalid_argument("verify_bernoulli_sum requires g >= 1");
  return {"bernoulli_sum", {g},
          composition_series(g, Rational(g + 1), onerow_bernoulli_weight),
          Rational(factorial(g)) / Rational(double_factorial(2 * g + 1))};
}

/// Same sum with signed B_{2a_j} and no (g+1)^n factor: 1/((k+1)!(2k+1)!!).
inline CheckResult verify_bernoulli_signed(long k) {
  if (k < 1)
    throw std::invalid_argument("verify_bernoulli_signed requires k >= 1");
  auto weight = [](long a) {
    return Rational(bernoulli(2 * a) /
                    Rational(factorial(a) * double_factorial(2 * a - 1)));
  };
  return {"bernoulli_signed", {k}, composition_series(k, Rational(1), weight),
          Rational(1) /
              Rational(factorial(k + 1) * double_factorial(2 * k + 1))};
}

/// 2(2^n-1)(n+1)B_n = sum_{j<n} binom(n+1,j)(2-2^j)(n-j+1)B_j
inline CheckResult verify_bernoulli_power(long n) {
  if (n < 2)
    throw std::invalid_argument("verify_bernoulli_power requires n >= 2");
  Rational lhs = Rational(2 * (pow2(n) - 1) * (n + 1)) * bernoulli(n);
  Rational rhs = 0;
  for (long j = 0; j < n; ++j)
    rhs += Rational(binomial(n + 1, j) * (2 - pow2(j)) * (n - j + 1)) *
           bernoulli(j);
  return {"bernoulli_power", {n}, lhs, rhs};
}

/// sum_{k=1}^{g} (-1)^k/k! (2g+1+k) sum_{m_1+...+m_k=g, m_i>0}
///   binom(2g+k; 2m_1+1, ..., 2m_k+1) = (-1)^g 2^{2g} (g!)^2
inline CheckResult verify_zhou(long g) {
  if (g < 1)
    throw std::invalid_argument("verify_zhou requires g >= 1");
  std::vector<Integer> by_parts(static_cast<std::size_t>(g) + 1, 0);
  std::vector<long> parts;
  std::function<void(long)> rec = [&](long rest) {
    if (rest == 0) {
      const long k = static_cast<long>(parts.size());
      std::vector<long> odd;
      for (long m : parts)
        odd.push_back(2 * m + 1);
      by_parts[static_cast<std::size_t>(k)] += multinomial(2 * g + k, odd);
      return;
    }
    for (long m = 1; m <= rest; ++m) {
      parts.push_back(m);
      rec(rest - m);
      parts.pop_back();
    }
  };
  rec(g);
  Rational lhs = 0;
  for (long k = 1; k <= g; ++k)
    lhs += neg_one_pow(k) * Rational(2 * g + 1 + k) *
           Rational(by_parts[static_cast<std::size_t>(k)]) /
           Rational(factorial(k));
  Integer f = factorial(g);
  Rational rhs = neg_one_pow(g) * Rational(pow2(2 * g) * f * f);
  return {"zhou", {g}, lhs, rhs};
}

// F-family identities, one multi-index at a time.

/// (2g+n-1) F_{g,n+2}(m) = sum_{L+L'=m} (2g+n-1-2|L'|) gamma_L F_{g,n+1}(L')
inline CheckResult check_psi_gamma(FaberEngine &e, long g, long n,
                                 const MultiIndex &m) {
  Rational lhs = Rational(2 * g + n - 1) * e.f_n_value(g, n + 2, m);
  Rational rhs = 0;
  for_each_sub_index(m, [&](const MultiIndex &l) {
    MultiIndex lp = m - l;
    rhs += Rational(2 * g + n - 1 - 2 * lp.degree()) * e.constants().gamma(l) *
           e.f_n_value(g, n + 1, lp);
  });
  return {"psi_gamma", {g, n, m.to_string()}, lhs, rhs};
}

/// F_{g,n}(m) = sum_{L+L'=m} beta^{-1}_L F_{g,n+1}(L')
inline CheckResult check_psi_beta_inv(FaberEngine &e, long g, long n,
                                 const MultiIndex &m) {
  Rational rhs = 0;
  for_each_sub_index(m, [&](const MultiIndex &l) {
    rhs += beta_inv(l) * e.f_n_value(g, n + 1, m - l);
  });
  return {"psi_beta_inv", {g, n, m.to_string()}, e.f_n_value(g, n, m), rhs};
}

/// 2|m| F_{g,n+1}(m) = sum_{e+f+L=m, L != m} beta^{-1}_e gamma_f
///                       (2g+n-1-2|L|) F_{g,n+1}(L)
inline CheckResult check_psi_shift(FaberEngine &e, long g, long n,
                                 const MultiIndex &m) {
  Rational lhs = Rational(2 * m.degree()) * e.f_n_value(g, n + 1, m);
  Rational rhs = 0;
  for_each_sub_index(m, [&](const MultiIndex &l) {
    if (l == m)
      return;
    const MultiIndex rest = m - l;
    Rational conv = 0; // sum_{e+f=rest} beta^{-1}_e gamma_f
    for_each_sub_index(rest, [&](const MultiIndex &ei) {
      conv += beta_inv(ei) * e.constants().gamma(rest - ei);
    });
    rhs += conv * Rational(2 * g + n - 1 - 2 * l.degree()) *
           e.f_n_value(g, n + 1, l);
  });
  return {"psi_shift", {g, n, m.to_string()}, lhs, rhs};
}

/// For |m| = g - 2:
///   F_{g,1}(m) = (1 + ||m||/(2g-2)) F_g(m)
///              + 1/(2g-2) sum_{L+L'=m, ||L'|| >= 2}
///                  (L+delta_{|L'|})! / (L! L'!) F_g(L+delta_{|L'|})
inline CheckResult check_f1_bridge(FaberEngine &e, long g,
                                   const MultiIndex &m) {
  require_top_degree(g, m, 3);
  const Rational inv = make_rational(1, 2 * g - 2);
  Rational rhs = (Rational(1) + Rational(m.length()) * inv) * e.f_value(g, m);
  for_each_sub_index(m, [&](const MultiIndex &l) {
    MultiIndex lp = m - l;
    if (lp.length() < 2)
      return;
    MultiIndex shifted = l.plus_delta(lp.degree());
    rhs += inv * Rational(shifted.factorial()) /
           Rational(l.factorial() * lp.factorial()) * e.f_value(g, shifted);
  });
  return {"f1_bridge", {g, m.to_string()}, e.f_n_value(g, 1, m), rhs};
}

/// All four F-family identities for n = 0..n_max and every m with
/// |m| <= deg_max (the bridge only where |m| = g - 2).
inline std::vector<CheckResult>
verify_f_family_lemmas(FaberEngine &e, long g, long n_max, long deg_max) {
  if (g < 3)
    throw std::invalid_argument("verify_f_family_lemmas requires g >= 3");
  std::vector<CheckResult> out;
  for (long d = 0; d <= deg_max; ++d) {
    for (const auto &m : indices_of_degree(d)) {
      for (long n = 0; n <= n_max; ++n) {
        out.push_back(check_psi_gamma(e, g, n, m));
        out.push_back(check_psi_beta_inv(e, g, n, m));
        out.push_back(check_psi_shift(e, g, n, m));
      }
      if (d == g - 2)
        out.push_back(check_f1_bridge(e, g, m));
    }
  }
  return out;
}

struct PositivityReport {
  long deg_max = 0;
  long g_max = 0;
  std::size_t checked = 0;
  std::vector<std::string> violations;
};

/// Sign scan: beta_L, gamma_L > 0 for all L; C_L > 0 and D_{g,L} > 0 for
/// L != 0 and 3 <= g <= g_max. Findings are reported, not enforced.
inline PositivityReport positivity_scan(ConstantTable &c, long deg_max,
                                        long g_max) {
  if (deg_max < 1 || g_max < 1)
    throw std::invalid_argument("positivity_scan bounds must be >= 1");
  PositivityReport report{deg_max, g_max, 0, {}};
  auto check = [&](const std::string &name, const Rational &v) {
    ++report.checked;
    if (sgn(v) <= 0)
      report.violations.push_back(name + " = " + to_string(v));
  };
  for (long d = 0; d <= deg_max; ++d) {
    for (const auto &l : indices_of_degree(d)) {
      const std::string s = l.to_string();
      check("beta_" + s, c.beta(l));
      check("gamma_" + s, c.gamma(l));
      if (l.empty())
        continue;
      check("C_" + s, c.c(l));
      for (long g = 3; g <= g_max; ++g)
        check("D_" + std::to_string(g) + "," + s, c.d(g, l));
    }
  }
  return report;
}

enum class Suite { all, fz, taut, bern, zhou, flemmas, g6, positivity };

inline std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "fz") return Suite::fz;
  if (name == "taut") return Suite::taut;
  if (name == "bern") return Suite::bern;
  if (name == "zhou") return Suite::zhou;
  if (name == "flemmas") return Suite::flemmas;
  if (name == "g6") return Suite::g6;
  if (name == "positivity") return Suite::positivity;
  return std::nullopt;
}

/// Upper bounds for each family. A single `gmax` override caps all of
/// them; without it the documented ranges apply.
struct SuiteBounds {
  long faber_zagier = 12;
  long tautological = 12;
  long bernoulli_sum = 20;
  long bernoulli_signed = 20;
  long bernoulli_power = 40;
  long zhou = 10;
  long flemmas_g = 6;
  long flemmas_n = 2;
  long flemmas_deg = 4;
  long positivity_deg = 6;
  long positivity_g = 8;

  static SuiteBounds with_gmax(std::optional<long> gmax) {
    SuiteBounds b;
    if (gmax) {
      const long v = *gmax;
      b.faber_zagier = b.tautological = b.bernoulli_sum = b.bernoulli_signed =
          b.bernoulli_power = b.zhou = v;
      b.flemmas_g = std::min(b.flemmas_g, v);
      b.positivity_g = v;
    }
    return b;
  }
};

/// Runs the requested checks. Tasks execute on `threads` workers but the
/// returned order is fixed by (suite, parameter).
inline std::vector<CheckResult> run_checks(FaberEngine &engine, Suite suite,
                                           const SuiteBounds &b,
                                           unsigned threads = 1) {
  using Task = std::function<std::vector<CheckResult>()>;
  std::vector<Task> tasks;
  auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
  auto single = [](auto fn) {
    return [fn]() { return std::vector<CheckResult>{fn()}; };
  };
  if (want(Suite::fz))
    for (long g = 3; g <= b.faber_zagier; ++g) {
      tasks.push_back(single([&engine, g] { return verify_faber_zagier(engine, g); }));
      tasks.push_back(single([&engine, g] { return verify_faber_zagier_f(engine, g); }));
    }
  if (want(Suite::taut))
    for (long g = 3; g <= b.tautological; ++g)
      tasks.push_back(single([&engine, g] { return verify_tautological(engine, g); }));
  if (want(Suite::bern)) {
    for (long n = 2; n <= b.bernoulli_power; ++n)
      tasks.push_back(single([n] { return verify_bernoulli_power(n); }));
    for (long g = 1; g <= b.bernoulli_sum; ++g)
      tasks.push_back(single([g] { return verify_bernoulli_sum(g); }));
    for (long k = 1; k <= b.bernoulli_signed; ++k)
      tasks.push_back(single([k] { return verify_bernoulli_signed(k); }));
  }
  if (want(Suite::zhou))
    for (long g = 1; g <= b.zhou; ++g)
      tasks.push_back(single([g] { return verify_zhou(g); }));
  if (want(Suite::flemmas))
    for (long g = 3; g <= b.flemmas_g; ++g)
      tasks.push_back([&engine, g, &b] {
        return verify_f_family_lemmas(engine, g, b.flemmas_n, b.flemmas_deg);
      });
  if (want(Suite::g6))
    tasks.push_back([&engine] { return verify_example_g6(engine); });

  std::vector<std::vector<CheckResult>> results(tasks.size());
  parallel_for(tasks.size(), threads,
               [&](std::size_t i) { results[i] = tasks[i](); });
  std::vector<CheckResult> out;
  for (auto &r : results)
    for (auto &c : r)
      out.push_back(std::move(c));
  return out;
}

} // namespace tautring

#endif // TAUTRING_IDENTITIES_HPP
