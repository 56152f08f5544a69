#pragma once

#include <filesystem>
#include <optional>

#include "cmm/series/qseries.hpp"

namespace cmm::series {

// On-disk coefficient cache:
//   "CMMQ" | u32 version | u64 order            (little endian)
//   per coefficient: u32 byte length | u8 sign (1 = negative) | big-endian magnitude
//   32-byte SHA-256 of everything above.
inline constexpr std::uint32_t kCacheVersion = 1;

void write_cache(const std::filesystem::path& path, const QSeries& s);

enum class CacheStatus { Loaded, Missing, Corrupt };

struct CacheRead {
    CacheStatus status = CacheStatus::Missing;
    std::optional<QSeries> series;
};

// Never throws on a bad file; a failed checksum or framing error is Corrupt.
CacheRead read_cache(const std::filesystem::path& path);

// $CMM_CACHE_DIR, else $XDG_CACHE_HOME/cmm, else $HOME/.cache/cmm.
std::filesystem::path cache_dir();
std::filesystem::path g_cache_path(std::size_t order);

struct CachedExpansion {
    QSeries series;
    CacheStatus found = CacheStatus::Missing;
    bool written = false;
};

// G(q) to the given order, reading a cache of at least that order when a
// valid one exists and otherwise recomputing and rewriting it.
CachedExpansion expand_G_cached(std::size_t order);

} // namespace cmm::series
