#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace eqschubert {

/// Append-only memo table safe for concurrent readers and writers. Two
/// threads may compute the same value; the first insertion wins.
template <class Key, class Value, class Compare = std::less<Key>>
class Memo {
 public:
  std::optional<Value> find(const Key& k) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& k, Value v) {
    std::unique_lock lock(mu_);
    return map_.emplace(k, std::move(v)).first->second;
  }

  template <class F>
  Value get_or_compute(const Key& k, F&& compute) {
    if (auto hit = find(k)) return *std::move(hit);
    Value v = compute();
    return insert(k, std::move(v));
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value, Compare> map_;
};

}  // namespace eqschubert
