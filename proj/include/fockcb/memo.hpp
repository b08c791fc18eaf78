#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace fockcb {

// Sharded insert-once cache. Values are immutable after insertion, so readers
// can hold the returned pointer without a lock. A racing second insert of the
// same key keeps the first value; callers must only store results that are a
// pure function of the key.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
public:
    using Ptr = std::shared_ptr<const Value>;

    Ptr find(const Key& k) const {
        const Shard& s = shard(k);
        std::shared_lock lock(s.mu);
        auto it = s.map.find(k);
        return it == s.map.end() ? nullptr : it->second;
    }

    Ptr insert(const Key& k, Value v) {
        Shard& s = shard(k);
        auto p = std::make_shared<const Value>(std::move(v));
        std::unique_lock lock(s.mu);
        auto [it, fresh] = s.map.emplace(k, std::move(p));
        return it->second;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& s : shards_) {
            std::shared_lock lock(s.mu);
            n += s.map.size();
        }
        return n;
    }

    void clear() {
        for (auto& s : shards_) {
            std::unique_lock lock(s.mu);
            s.map.clear();
        }
    }

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::shared_mutex mu;
        std::unordered_map<Key, Ptr, Hash> map;
    };
    Shard& shard(const Key& k) { return shards_[Hash{}(k) % kShards]; }
    const Shard& shard(const Key& k) const { return shards_[Hash{}(k) % kShards]; }

    std::array<Shard, kShards> shards_;
};

struct IntVectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace fockcb
