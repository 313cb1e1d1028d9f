#ifndef HVECTOR_SRC_MEMO_HPP
#define HVECTOR_SRC_MEMO_HPP

#include <mutex>
#include <string>
#include <unordered_map>

namespace hvector::detail {

// Process-wide memo keyed by string.  The lock is not held while a value
// is computed, so computations may recurse into the same table; a value
// computed twice by racing threads is identical and the first one wins.
template <typename Value>
class MemoTable {
 public:
  template <typename Compute>
  Value get(const std::string& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, Value> table_;
};

}  // namespace hvector::detail

#endif  // HVECTOR_SRC_MEMO_HPP
