#ifndef TAUTRING_RATIONAL_HPP
#define TAUTRING_RATIONAL_HPP

// Exact integer / rational types. Both are GMP-backed; every mpq_class
// produced by arithmetic is already in lowest terms with positive
// denominator, and make_rational() canonicalizes explicit fractions.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tautring {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer &num, const Integer &den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_canonical(const Rational &q) {
  if (sgn(q.get_den()) <= 0)
    return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

/// "p/q" in lowest terms, or bare "p" when q = 1.
inline std::string to_string(const Rational &q) { return q.get_str(10); }
inline std::string to_string(const Integer &z) { return z.get_str(10); }

namespace detail {
inline bool is_digit_run(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  // no leading zeros except the literal "0"
  return s.size() == 1 || s.front() != '0';
}
} // namespace detail

/// Strict inverse of to_string(): rejects signs on the denominator,
/// leading zeros, "-0", zero or non-reduced denominators.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char *why) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\": " + why);
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!detail::is_digit_run(den))
      fail("denominator must be a positive decimal integer");
  }
  bool negative = !num.empty() && num.front() == '-';
  std::string_view digits = negative ? num.substr(1) : num;
  if (!detail::is_digit_run(digits))
    fail("numerator must be a decimal integer");
  if (negative && digits == "0")
    fail("negative zero");
  Integer p(std::string(num), 10);
  Integer q = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (q == 0)
    fail("zero denominator");
  Rational r(p, q);
  if (!is_canonical(r))
    fail("not in lowest terms");
  return r;
}

inline Integer pow_int(const Integer &base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer pow2(unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
  return r;
}

inline Rational pow_rat(const Rational &base, unsigned long exp) {
  Rational r(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
  return r; // already reduced: gcd(p^e, q^e) = 1
}

inline Rational neg_one_pow(long long e) {
  return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

} // namespace tautring

#endif // TAUTRING_RATIONAL_HPP
