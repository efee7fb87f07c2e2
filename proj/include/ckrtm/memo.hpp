#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace ckrtm {

namespace detail {
void register_cache_clearer(std::function<void()> clear);
}

/// Drops every memoized value (Δ, S, ⋄, tree maps, F/G polynomials).
void clear_all_caches();

/// Process-wide memo table. Readers share the lock; a writer that lost a race
/// keeps the first inserted value, which equals its own by purity.
template <class Key, class Value>
class MemoTable {
 public:
  MemoTable() {
    detail::register_cache_clearer([this] { clear(); });
  }
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return *std::move(hit);
    return insert(key, compute());
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace ckrtm
