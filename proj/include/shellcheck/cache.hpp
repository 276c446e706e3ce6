#pragma once

#include <array>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "canonical.hpp"

namespace shellcheck {

/// Entry budget for each memo table; SHELLCHECK_CACHE_SIZE overrides it.
inline std::size_t default_cache_capacity() {
    if (const char* env = std::getenv("SHELLCHECK_CACHE_SIZE")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
}

/// Bounded memo table keyed by canonical form, safe for concurrent use.
/// A shard that reaches its budget is emptied before the next insert.
template <typename Value>
class CanonicalCache {
  public:
    explicit CanonicalCache(std::size_t capacity = default_cache_capacity())
        : per_shard_(capacity / shard_count) {}

    std::optional<Value> find(const CanonicalForm& key) const {
        const Shard& s = shard(key);
        std::lock_guard lock(s.mutex);
        auto it = s.map.find(key);
        if (it == s.map.end()) return std::nullopt;
        return it->second;
    }

    void insert(const CanonicalForm& key, Value value) {
        if (per_shard_ == 0) return;
        Shard& s = shard(key);
        std::lock_guard lock(s.mutex);
        if (s.map.size() >= per_shard_) s.map.clear();
        s.map.insert_or_assign(key, std::move(value));
    }

    void clear() {
        for (auto& s : shards_) {
            std::lock_guard lock(s.mutex);
            s.map.clear();
        }
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& s : shards_) {
            std::lock_guard lock(s.mutex);
            n += s.map.size();
        }
        return n;
    }

  private:
    static constexpr std::size_t shard_count = 16;
    struct Shard {
        mutable std::mutex mutex;
        std::unordered_map<CanonicalForm, Value, CanonicalFormHash> map;
    };

    Shard& shard(const CanonicalForm& key) { return shards_[CanonicalFormHash{}(key) % shard_count]; }
    const Shard& shard(const CanonicalForm& key) const {
        return shards_[CanonicalFormHash{}(key) % shard_count];
    }

    std::size_t per_shard_;
    std::array<Shard, shard_count> shards_;
};

/// Looks the complex up by canonical form, computing and storing on a miss.
/// Complexes too large to canonicalize bypass the table.
template <typename Value, typename Compute>
Value memoized(CanonicalCache<Value>& cache, const SimplicialComplex& c, Compute&& compute) {
    if (c.n_vertices() > max_canonical_vertices) return compute(c);
    CanonicalForm key = canonical_form(c);
    if (auto hit = cache.find(key)) return *hit;
    Value v = compute(c);
    cache.insert(key, v);
    return v;
}

} // namespace shellcheck
