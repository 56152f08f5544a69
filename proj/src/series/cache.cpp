#include "cmm/series/cache.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include <openssl/evp.h>

namespace cmm::series {

namespace {

constexpr std::array<char, 4> kMagic = {'C', 'M', 'M', 'Q'};
constexpr std::size_t kHashBytes = 32;

using Bytes = std::vector<unsigned char>;

template <typename T>
void put_le(Bytes& out, T v)
{
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        out.push_back(static_cast<unsigned char>(v >> (8 * i)));
    }
}

template <typename T>
bool get_le(const Bytes& in, std::size_t& pos, std::size_t end, T& v)
{
    if (end - pos < sizeof(T)) {
        return false;
    }
    v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        v |= static_cast<T>(in[pos + i]) << (8 * i);
    }
    pos += sizeof(T);
    return true;
}

std::array<unsigned char, kHashBytes> sha256(const unsigned char* data, std::size_t len)
{
    std::array<unsigned char, kHashBytes> out{};
    unsigned int out_len = 0;
    if (EVP_Digest(data, len, out.data(), &out_len, EVP_sha256(), nullptr) != 1 || out_len != kHashBytes) {
        throw IoError("SHA-256 digest failed");
    }
    return out;
}

Bytes encode(const QSeries& s)
{
    Bytes out(kMagic.begin(), kMagic.end());
    put_le<std::uint32_t>(out, kCacheVersion);
    put_le<std::uint64_t>(out, s.order());
    for (const auto& c : s.coeffs()) {
        std::size_t count = 0;
        Bytes mag((mpz_sizeinbase(c.get_mpz_t(), 2) + 7) / 8 + 1);
        mpz_export(mag.data(), &count, 1, 1, 1, 0, c.get_mpz_t());
        put_le<std::uint32_t>(out, static_cast<std::uint32_t>(count));
        out.push_back(sgn(c) < 0 ? 1 : 0);
        out.insert(out.end(), mag.begin(), mag.begin() + static_cast<long>(count));
    }
    const auto h = sha256(out.data(), out.size());
    out.insert(out.end(), h.begin(), h.end());
    return out;
}

std::optional<QSeries> decode(const Bytes& in)
{
    if (in.size() < kMagic.size() + 12 + kHashBytes) {
        return std::nullopt;
    }
    const std::size_t body = in.size() - kHashBytes;
    const auto h = sha256(in.data(), body);
    if (!std::equal(h.begin(), h.end(), in.begin() + static_cast<long>(body))) {
        return std::nullopt;
    }
    if (!std::equal(kMagic.begin(), kMagic.end(), in.begin())) {
        return std::nullopt;
    }
    std::size_t pos = kMagic.size();
    std::uint32_t version = 0;
    std::uint64_t order = 0;
    if (!get_le(in, pos, body, version) || version != kCacheVersion || !get_le(in, pos, body, order)) {
        return std::nullopt;
    }
    if (order > body) {
        return std::nullopt;
    }
    std::vector<mpz_class> coeffs(order + 1);
    for (auto& c : coeffs) {
        std::uint32_t len = 0;
        if (!get_le(in, pos, body, len) || pos >= body) {
            return std::nullopt;
        }
        const bool negative = in[pos++] != 0;
        if (body - pos < len) {
            return std::nullopt;
        }
        mpz_import(c.get_mpz_t(), len, 1, 1, 1, 0, in.data() + pos);
        if (negative) {
            c = -c;
        }
        pos += len;
    }
    if (pos != body) {
        return std::nullopt;
    }
    return QSeries(std::move(coeffs));
}

} // namespace

void write_cache(const std::filesystem::path& path, const QSeries& s)
{
    const Bytes bytes = encode(s);
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    // Write to a sibling then rename so readers never see a partial file.
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open cache for writing: " + tmp.string());
        }
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw IoError("short write to cache: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("cannot move cache into place: " + path.string());
    }
}

CacheRead read_cache(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return {CacheStatus::Missing, std::nullopt};
    }
    const Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto s = decode(bytes);
    if (!s) {
        return {CacheStatus::Corrupt, std::nullopt};
    }
    return {CacheStatus::Loaded, std::move(s)};
}

std::filesystem::path cache_dir()
{
    if (const char* d = std::getenv("CMM_CACHE_DIR"); d && *d) {
        return d;
    }
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) {
        return std::filesystem::path(x) / "cmm";
    }
    if (const char* h = std::getenv("HOME"); h && *h) {
        return std::filesystem::path(h) / ".cache" / "cmm";
    }
    return ".cmm-cache";
}

std::filesystem::path g_cache_path(std::size_t order)
{
    return cache_dir() / ("G_" + std::to_string(order) + ".cmmq");
}

CachedExpansion expand_G_cached(std::size_t order)
{
    const auto path = g_cache_path(order);
    CacheRead r = read_cache(path);
    if (r.status == CacheStatus::Loaded && r.series->order() == order) {
        return {std::move(*r.series), CacheStatus::Loaded, false};
    }
    const auto found = r.status == CacheStatus::Loaded ? CacheStatus::Corrupt : r.status;
    CachedExpansion out{expand_G(order), found, false};
    try {
        write_cache(path, out.series);
        out.written = true;
    } catch (const IoError&) {
        // A read-only cache location only costs recomputation next time.
    }
    return out;
}

} // namespace cmm::series
