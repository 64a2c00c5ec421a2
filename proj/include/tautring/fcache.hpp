#ifndef TAUTRING_FCACHE_HPP
#define TAUTRING_FCACHE_HPP

// Memo table for F_{g,n}(m) and its on-disk form.
//
// File format (UTF-8, LF line endings):
//   TAUTCACHE v1
//   F <g> <multi-index> <rational>
//   ...
// Only n = 0 values are written, sorted by (g, degree, canonical string).

#include "tautring/errors.hpp"
#include "tautring/memo.hpp"
#include "tautring/multiindex.hpp"
#include "tautring/rational.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace tautring {

struct FKey {
  long g;
  long n;
  MultiIndex m;
  friend bool operator==(const FKey &, const FKey &) = default;
};

struct FKeyHash {
  std::size_t operator()(const FKey &k) const noexcept {
    std::size_t h = MultiIndexHash{}(k.m);
    h ^= std::hash<long>{}(k.g) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<long>{}(k.n) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class FCache {
public:
  static constexpr std::string_view kHeader = "TAUTCACHE v1";

  std::optional<Rational> find(const FKey &key) const { return table_.find(key); }
  void insert(const FKey &key, const Rational &value) {
    table_.insert(key, value);
    dirty_.store(true, std::memory_order_relaxed);
  }
  std::size_t size() const { return table_.size(); }
  MemoStats stats() const { return table_.stats(); }
  void reset_stats() { table_.reset_stats(); }
  bool dirty() const { return dirty_.load(std::memory_order_relaxed); }
  void clear() { table_.clear(); }

  /// Persisted (g, m, value) triples in file order.
  std::vector<std::tuple<long, MultiIndex, Rational>> persisted_entries() const {
    std::vector<std::tuple<long, MultiIndex, Rational>> out;
    for (auto &[key, value] : table_.snapshot())
      if (key.n == 0)
        out.emplace_back(key.g, key.m, value);
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
      const auto &[ga, ma, va] = a;
      const auto &[gb, mb, vb] = b;
      if (ga != gb)
        return ga < gb;
      if (ma.degree() != mb.degree())
        return ma.degree() < mb.degree();
      return ma.to_string() < mb.to_string();
    });
    return out;
  }

  void write(std::ostream &os) const {
    os << kHeader << '\n';
    for (const auto &[g, m, value] : persisted_entries())
      os << "F " << g << ' ' << m.to_string() << ' ' << to_string(value)
         << '\n';
  }

  /// Requires exclusive access.
  void save(const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot open cache file for writing: " + path);
    write(out);
    out.flush();
    if (!out)
      throw std::runtime_error("failed writing cache file: " + path);
    dirty_.store(false, std::memory_order_relaxed);
  }

  /// Parses a whole stream before touching the table, so a rejected file
  /// leaves the cache unchanged.
  void read(std::istream &is) {
    std::string line;
    if (!std::getline(is, line))
      throw CacheFormatError(1, "empty file, expected header \"" +
                                    std::string(kHeader) + "\"");
    if (line != kHeader) {
      if (line.rfind("TAUTCACHE ", 0) == 0)
        throw CacheFormatError(1, "unsupported cache version \"" +
                                      line.substr(10) + "\", expected v1");
      throw CacheFormatError(1, "missing header \"" + std::string(kHeader) +
                                    "\"");
    }
    std::vector<std::pair<FKey, Rational>> parsed;
    std::set<std::pair<long, std::string>> seen;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
      ++lineno;
      auto fail = [&](const std::string &why) {
        throw CacheFormatError(lineno, why);
      };
      std::vector<std::string_view> fields;
      const std::string_view sv(line);
      for (std::size_t start = 0;;) {
        auto sp = sv.find(' ', start);
        fields.push_back(sv.substr(start, sp == std::string_view::npos
                                              ? std::string_view::npos
                                              : sp - start));
        if (sp == std::string_view::npos)
          break;
        start = sp + 1;
      }
      if (fields.size() != 4 || fields[0] != "F")
        fail("expected \"F <g> <multi-index> <rational>\"");
      for (auto f : fields)
        if (f.empty())
          fail("empty field");
      long g = 0;
      {
        std::string_view gs = fields[1];
        bool neg = gs.front() == '-';
        if (!detail::is_digit_run(neg ? gs.substr(1) : gs) || gs.size() > 9 ||
            (neg && gs == "-0"))
          fail("bad genus \"" + std::string(gs) + "\"");
        g = std::stol(std::string(gs));
      }
      MultiIndex m;
      Rational value;
      try {
        m = MultiIndex::parse(fields[2]);
        value = parse_rational(fields[3]);
      } catch (const std::invalid_argument &e) {
        fail(e.what());
      }
      if (!seen.emplace(g, m.to_string()).second)
        fail("duplicate key");
      parsed.emplace_back(FKey{g, 0, std::move(m)}, std::move(value));
    }
    for (auto &[key, value] : parsed)
      table_.insert(key, value);
  }

  void load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw std::runtime_error("cannot open cache file: " + path);
    read(in);
  }

private:
  MemoMap<FKey, Rational, FKeyHash> table_;
  std::atomic<bool> dirty_{false};
};

} // namespace tautring

#endif // TAUTRING_FCACHE_HPP
