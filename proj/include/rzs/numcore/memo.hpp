#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace rzs::numcore {

/// Process-wide memo table. Two threads racing on a missing key both compute
/// it; the first insert wins, so readers always observe one immutable value.
template <class Key, class Value>
class Memo {
public:
    template <class Fn>
    Value get_or_compute(const Key& key, Fn&& compute) {
        {
            std::shared_lock lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mu_);
        return table_.emplace(key, std::move(v)).first->second;
    }

    void clear() {
        std::unique_lock lock(mu_);
        table_.clear();
    }

private:
    std::shared_mutex mu_;
    std::map<Key, Value> table_;
};

}  // namespace rzs::numcore
