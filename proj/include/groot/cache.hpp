#pragma once

#include <filesystem>
#include <optional>

#include "groot/graded_root.hpp"

namespace groot {

inline constexpr int kCacheVersion = 1;

struct CachedRoot {
    Int sigma = 0;
    std::vector<Int> minima;
    std::vector<Int> maxima;
};

// File cache of tau extrema keyed by (triple, cache version). Reads tolerate
// missing or corrupt files (treated as misses); writes go through a temporary
// file and an atomic rename.
class RootCache {
public:
    RootCache() = default;  // disabled
    explicit RootCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<CachedRoot> load(const BrieskornTriple& t) const;
    void store(const BrieskornTriple& t, const CachedRoot& value) const;

private:
    std::filesystem::path entry_path(const BrieskornTriple& t) const;
    std::filesystem::path dir_;
};

// graded_root_of with a read-through cache.
GradedRoot graded_root_cached(const BrieskornTriple& t, const RootCache& cache);

}  // namespace groot
