#include "czkit/cache.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <vector>

namespace czkit {

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fnv1a_str(const std::string& s, std::uint64_t seed) {
    return fnv1a(s.data(), s.size(), seed);
}

std::uint64_t assembly_spec_hash(const CZKernel& K, const WaveletBasis& basis,
                                 const LagomWindow& window) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "czk-fmt1|%s|delta=%.17g|win=%d,%.17g,%d,%d|basis=%d,%d|gl=6",
                  K.name.c_str(), K.delta, window.M, window.R, window.j_min, window.j_max,
                  basis.spline_order, basis.trunc_K);
    return fnv1a_str(buf);
}

std::string matrix_cache_path(const std::string& dir, std::uint64_t spec_hash) {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.czk", static_cast<unsigned long long>(spec_hash));
    return dir + "/" + name;
}

namespace {

struct Record {
    std::int32_t j_i, j_j;
    std::int64_t k_i, k_j;
    double value;
};

void append(std::vector<unsigned char>& out, const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    out.insert(out.end(), b, b + n);
}

} // namespace

bool write_matrix_cache(const std::string& path, const CoefficientMatrix& A) {
    std::vector<unsigned char> payload;
    const std::uint32_t version = 1;
    const std::uint64_t n = A.size();
    append(payload, "CZK1", 4);
    append(payload, &version, 4);
    append(payload, &A.spec_hash, 8);
    append(payload, &n, 8);
    for (std::size_t jdx = 0; jdx < n; ++jdx) {
        for (std::size_t idx = 0; idx < n; ++idx) {
            const auto& I = A.intervals[idx];
            const auto& J = A.intervals[jdx];
            const std::int32_t ji = I.j, jj = J.j;
            const std::int64_t ki = I.k, kj = J.k;
            const double v = A.at(idx, jdx);
            append(payload, &ji, 4);
            append(payload, &ki, 8);
            append(payload, &jj, 4);
            append(payload, &kj, 8);
            append(payload, &v, 8);
        }
    }
    const std::uint64_t checksum = fnv1a(payload.data(), payload.size());
    append(payload, &checksum, 8);

    const std::string tmp = path + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) return false;
    const bool ok = std::fwrite(payload.data(), 1, payload.size(), f) == payload.size();
    std::fclose(f);
    if (!ok) {
        std::remove(tmp.c_str());
        return false;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    return !ec;
}

std::optional<CoefficientMatrix> read_matrix_cache(const std::string& path,
                                                   std::uint64_t expected_hash) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;
    std::fseek(f, 0, SEEK_END);
    const long sz = std::ftell(f);
    std::fseek(f, 0, SEEK_SET);
    if (sz < 32) {
        std::fclose(f);
        return std::nullopt;
    }
    std::vector<unsigned char> buf(static_cast<std::size_t>(sz));
    const bool ok = std::fread(buf.data(), 1, buf.size(), f) == buf.size();
    std::fclose(f);
    if (!ok) return std::nullopt;

    const std::size_t body = buf.size() - 8;
    std::uint64_t checksum;
    std::memcpy(&checksum, buf.data() + body, 8);
    if (checksum != fnv1a(buf.data(), body)) return std::nullopt;
    if (std::memcmp(buf.data(), "CZK1", 4) != 0) return std::nullopt;
    std::uint32_t version;
    std::memcpy(&version, buf.data() + 4, 4);
    if (version != 1) return std::nullopt;
    std::uint64_t hash, n;
    std::memcpy(&hash, buf.data() + 8, 8);
    std::memcpy(&n, buf.data() + 16, 8);
    if (hash != expected_hash) return std::nullopt;
    const std::size_t rec = 4 + 8 + 4 + 8 + 8;
    if (body != 24 + n * n * rec) return std::nullopt;

    CoefficientMatrix A;
    A.spec_hash = hash;
    A.data.assign(n * n, 0.0);
    A.intervals.clear();
    std::size_t off = 24;
    // First row carries the full column interval list.
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::int32_t ji;
        std::int64_t ki;
        std::memcpy(&ji, buf.data() + off + idx * rec, 4);
        std::memcpy(&ki, buf.data() + off + idx * rec + 4, 8);
        A.intervals.emplace_back(ji, ki);
    }
    for (std::size_t jdx = 0; jdx < n; ++jdx) {
        for (std::size_t idx = 0; idx < n; ++idx) {
            double v;
            std::memcpy(&v, buf.data() + off + 24, 8);
            A.data[jdx * n + idx] = v;
            off += rec;
        }
    }
    return A;
}

} // namespace czkit
