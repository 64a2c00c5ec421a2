#ifndef TAUTRING_MULTIINDEX_HPP
#define TAUTRING_MULTIINDEX_HPP

// Finitely supported exponent vectors m = (m(1), m(2), ...) indexing the
// kappa monomials kappa(m) = prod kappa_i^{m(i)}.

#include "tautring/exact_core.hpp"
#include "tautring/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tautring {

class MultiIndex {
public:
  using Exponent = std::uint32_t;

  MultiIndex() = default;

  /// exps[0] is m(1), exps[1] is m(2), ...; trailing zeros are dropped.
  static MultiIndex from_exponents(std::vector<Exponent> exps) {
    MultiIndex m;
    m.exps_ = std::move(exps);
    m.trim();
    return m;
  }

  /// The unit vector with a single 1 at index k.
  static MultiIndex delta(long k) {
    if (k < 1)
      throw std::invalid_argument("delta index must be >= 1");
    MultiIndex m;
    m.exps_.assign(static_cast<std::size_t>(k), 0);
    m.exps_.back() = 1;
    return m;
  }

  /// 1^k, i.e. kappa_1^k.
  static MultiIndex ones(long k) {
    if (k < 0)
      throw std::invalid_argument("negative exponent");
    if (k == 0)
      return {};
    return from_exponents({static_cast<Exponent>(k)});
  }

  /// From an integer partition (any order); part i contributes to m(i).
  static MultiIndex from_parts(std::span<const long> parts) {
    MultiIndex m;
    for (long p : parts) {
      if (p < 1)
        throw std::invalid_argument("partition parts must be >= 1");
      m.bump(static_cast<std::size_t>(p));
    }
    return m;
  }

  static MultiIndex from_parts(std::initializer_list<long> parts) {
    return from_parts(std::span<const long>(parts.begin(), parts.size()));
  }

  /// Canonical form: "0", or "i^e" terms joined by '.', with strictly
  /// increasing i >= 1 and e >= 1, no leading zeros.
  static MultiIndex parse(std::string_view text);

  std::string to_string() const {
    if (exps_.empty())
      return "0";
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0)
        continue;
      if (!s.empty())
        s += '.';
      s += std::to_string(i + 1);
      s += '^';
      s += std::to_string(exps_[i]);
    }
    return s;
  }

  /// m(i) for i >= 1; zero beyond the support.
  Exponent operator[](std::size_t i) const {
    return (i >= 1 && i <= exps_.size()) ? exps_[i - 1] : 0;
  }

  std::size_t max_index() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }
  const std::vector<Exponent> &exponents() const { return exps_; }

  /// |m| = sum i m(i)
  long degree() const {
    long d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      d += static_cast<long>(i + 1) * exps_[i];
    return d;
  }

  /// ||m|| = sum m(i)
  long length() const {
    long l = 0;
    for (Exponent e : exps_)
      l += e;
    return l;
  }

  /// m! = prod m(i)!
  Integer factorial() const {
    Integer f = 1;
    for (Exponent e : exps_)
      if (e > 1)
        f *= tautring::factorial(e);
    return f;
  }

  bool is_sub_index_of(const MultiIndex &other) const {
    if (exps_.size() > other.exps_.size())
      return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i])
        return false;
    return true;
  }

  MultiIndex &operator+=(const MultiIndex &other) {
    if (exps_.size() < other.exps_.size())
      exps_.resize(other.exps_.size(), 0);
    for (std::size_t i = 0; i < other.exps_.size(); ++i)
      exps_[i] += other.exps_[i];
    return *this;
  }

  MultiIndex &operator-=(const MultiIndex &other) {
    if (!other.is_sub_index_of(*this))
      throw std::invalid_argument("cannot subtract " + other.to_string() +
                                  " from " + to_string());
    for (std::size_t i = 0; i < other.exps_.size(); ++i)
      exps_[i] -= other.exps_[i];
    trim();
    return *this;
  }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex &b) {
    return a += b;
  }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex &b) {
    return a -= b;
  }

  /// m + delta_k
  MultiIndex plus_delta(long k) const {
    MultiIndex m = *this;
    m.bump(static_cast<std::size_t>(k));
    return m;
  }

  /// Parts of the underlying integer partition, weakly decreasing.
  std::vector<long> parts() const {
    std::vector<long> p;
    for (std::size_t i = exps_.size(); i-- > 0;)
      p.insert(p.end(), exps_[i], static_cast<long>(i + 1));
    return p;
  }

  friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
  friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;

private:
  void trim() {
    while (!exps_.empty() && exps_.back() == 0)
      exps_.pop_back();
  }

  void bump(std::size_t i) {
    if (i < 1)
      throw std::invalid_argument("multi-index positions start at 1");
    if (exps_.size() < i)
      exps_.resize(i, 0);
    ++exps_[i - 1];
  }

  std::vector<Exponent> exps_;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex &m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) {
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::ostream &operator<<(std::ostream &os, const MultiIndex &m) {
  return os << m.to_string();
}

inline MultiIndex MultiIndex::parse(std::string_view text) {
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("malformed multi-index \"" +
                                std::string(text) + "\": " + why);
  };
  auto number = [&](std::string_view s) -> unsigned long {
    if (!detail::is_digit_run(s))
      fail("expected a decimal integer without leading zeros");
    if (s.size() > 9)
      fail("number too large");
    return std::stoul(std::string(s));
  };
  if (text == "0")
    return {};
  if (text.empty())
    fail("empty string");
  MultiIndex m;
  std::size_t last_index = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view term =
        text.substr(pos, dot == std::string_view::npos ? text.size() - pos
                                                       : dot - pos);
    std::size_t caret = term.find('^');
    if (caret == std::string_view::npos)
      fail("term \"" + std::string(term) + "\" is not of the form i^e");
    unsigned long i = number(term.substr(0, caret));
    unsigned long e = number(term.substr(caret + 1));
    if (i < 1)
      fail("index must be >= 1");
    if (e < 1)
      fail("exponent must be >= 1");
    if (i <= last_index)
      fail("indices must be strictly increasing");
    last_index = i;
    m.exps_.resize(i, 0);
    m.exps_[i - 1] = static_cast<Exponent>(e);
    if (dot == std::string_view::npos)
      break;
    pos = dot + 1;
  }
  return m;
}

inline long degree(const MultiIndex &m) { return m.degree(); }
inline long length(const MultiIndex &m) { return m.length(); }
inline Integer mi_factorial(const MultiIndex &m) { return m.factorial(); }

/// prod_i binom(m(i); parts_1(i), ..., parts_r(i)).
inline Integer mi_multinomial(const MultiIndex &m,
                              std::span<const MultiIndex> parts) {
  MultiIndex total;
  for (const auto &p : parts)
    total += p;
  if (total != m)
    throw std::invalid_argument("parts sum to " + total.to_string() +
                                ", expected " + m.to_string());
  Integer r = 1;
  std::vector<long> column(parts.size());
  for (std::size_t i = 1; i <= m.max_index(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j)
      column[j] = parts[j][i];
    r *= multinomial(m[i], column);
  }
  return r;
}

/// Visits every L with 0 <= L <= m componentwise exactly once, starting at
/// the empty index and ending at m.
template <typename F> void for_each_sub_index(const MultiIndex &m, F &&visit) {
  const auto &top = m.exponents();
  std::vector<MultiIndex::Exponent> cur(top.size(), 0);
  for (;;) {
    visit(MultiIndex::from_exponents(cur));
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == top[i]) {
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size())
      return;
    ++cur[i];
  }
}

inline std::vector<MultiIndex> sub_indices(const MultiIndex &m) {
  std::vector<MultiIndex> out;
  for_each_sub_index(m, [&](MultiIndex l) { out.push_back(std::move(l)); });
  return out;
}

inline std::size_t sub_index_count(const MultiIndex &m) {
  std::size_t c = 1;
  for (auto e : m.exponents())
    c *= e + 1;
  return c;
}

namespace detail {
template <typename F>
void ordered_decomp_rec(const MultiIndex &rest, long r,
                        std::vector<MultiIndex> &prefix, F &visit) {
  if (r == 0) {
    if (rest.empty())
      visit(std::span<const MultiIndex>(prefix));
    return;
  }
  if (rest.length() < r)
    return;
  for_each_sub_index(rest, [&](MultiIndex part) {
    if (part.empty())
      return;
    MultiIndex remaining = rest - part;
    prefix.push_back(std::move(part));
    ordered_decomp_rec(remaining, r - 1, prefix, visit);
    prefix.pop_back();
  });
}
} // namespace detail

/// Every ordered r-tuple (m_1, ..., m_r) of nonzero multi-indices with
/// m_1 + ... + m_r = m.
template <typename F>
void for_each_ordered_decomposition(const MultiIndex &m, long r, F &&visit) {
  if (r < 1)
    throw std::invalid_argument("decomposition length must be >= 1");
  std::vector<MultiIndex> prefix;
  prefix.reserve(static_cast<std::size_t>(r));
  detail::ordered_decomp_rec(m, r, prefix, visit);
}

inline std::vector<std::vector<MultiIndex>>
ordered_decompositions(const MultiIndex &m, long r) {
  std::vector<std::vector<MultiIndex>> out;
  for_each_ordered_decomposition(m, r, [&](std::span<const MultiIndex> parts) {
    out.emplace_back(parts.begin(), parts.end());
  });
  return out;
}

/// All m with |m| = n, as partitions in reverse-lexicographic order:
/// [n] first, [1, ..., 1] last.
inline std::vector<MultiIndex> indices_of_degree(long n) {
  if (n < 0)
    throw std::invalid_argument("degree must be >= 0");
  std::vector<MultiIndex> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<long> a{n};
  for (;;) {
    out.push_back(MultiIndex::from_parts(a));
    // rightmost part > 1
    long rem = 0;
    while (!a.empty() && a.back() == 1) {
      ++rem;
      a.pop_back();
    }
    if (a.empty())
      break;
    long x = --a.back();
    ++rem;
    while (rem > x) {
      a.push_back(x);
      rem -= x;
    }
    a.push_back(rem);
  }
  return out;
}

} // namespace tautring

template <> struct std::hash<tautring::MultiIndex> : tautring::MultiIndexHash {};

#endif // TAUTRING_MULTIINDEX_HPP
