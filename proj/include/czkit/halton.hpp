#ifndef CZKIT_HALTON_HPP
#define CZKIT_HALTON_HPP

#include <cstdint>

namespace czkit {

/// Halton radical-inverse in the given base; index starts at 0.
inline double halton(std::uint64_t index, std::uint32_t base) {
    double f = 1.0, r = 0.0;
    std::uint64_t i = index + 1; // skip the 0 sample
    while (i > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

/// Deterministic low-discrepancy point in [0,1)^dim, dim <= 6.
inline void halton_point(std::uint64_t index, int dim, double* out) {
    static constexpr std::uint32_t primes[6] = {2, 3, 5, 7, 11, 13};
    for (int d = 0; d < dim; ++d) out[d] = halton(index, primes[d]);
}

/// splitmix64, used where tests want cheap deterministic pseudo-randoms.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

} // namespace czkit

#endif
