#ifndef POLYCAUCHY_MEMO_HPP
#define POLYCAUCHY_MEMO_HPP

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace polycauchy {

/// Process-lifetime memo table. Readers share the lock; the value is
/// computed outside any lock so recursive lookups cannot deadlock, and the
/// first insertion wins. References stay valid because std::map nodes never move.
template <typename Key, typename Value>
class Memo {
public:
    template <typename Fn>
    const Value& get(const Key& key, Fn&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace polycauchy

#endif
