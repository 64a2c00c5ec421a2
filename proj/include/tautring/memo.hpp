#ifndef TAUTRING_MEMO_HPP
#define TAUTRING_MEMO_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tautring {

struct MemoStats {
  std::size_t hits = 0;
  std::size_t misses = 0;
};

// Grow-only memo table. Readers share the lock; a writer that loses a race
// against another writer for the same key keeps the first value (values are
// deterministic, so both are equal).
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class MemoMap {
public:
  std::optional<Value> find(const Key &key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) {
      misses_.fetch_add(1, std::memory_order_relaxed);
      return std::nullopt;
    }
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }

  bool contains(const Key &key) const {
    std::shared_lock lock(mutex_);
    return map_.count(key) != 0;
  }

  void insert(const Key &key, const Value &value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
  }

  /// Memoized evaluation. `compute` runs without the lock held so that it
  /// may recurse into this same table.
  template <typename F> Value get_or_compute(const Key &key, F &&compute) {
    if (auto v = find(key))
      return *std::move(v);
    Value v = compute();
    insert(key, v);
    return v;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

  std::vector<std::pair<Key, Value>> snapshot() const {
    std::shared_lock lock(mutex_);
    return {map_.begin(), map_.end()};
  }

  MemoStats stats() const {
    return {hits_.load(std::memory_order_relaxed),
            misses_.load(std::memory_order_relaxed)};
  }

  void reset_stats() {
    hits_.store(0);
    misses_.store(0);
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

} // namespace tautring

#endif // TAUTRING_MEMO_HPP
