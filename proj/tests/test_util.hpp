#ifndef PTK_TEST_UTIL_HPP
#define PTK_TEST_UTIL_HPP

#include <cstdlib>
#include <random>
#include <string>

#include "ptk/padic.hpp"

namespace ptk_test {

// Deterministic by default; export PTK_TEST_SEED to explore other streams.
inline std::uint64_t test_seed() {
    if (const char* s = std::getenv("PTK_TEST_SEED")) {
        return std::strtoull(s, nullptr, 10);
    }
    return 0x9d2c5680u;
}

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(test_seed() ^ (salt * 0x9e3779b97f4a7c15ull));
}

inline ptk::Int random_int_below(std::mt19937_64& rng, const ptk::Int& bound) {
    ptk::Int r = 0;
    ptk::Int b = bound;
    while (b > 0) {
        r = r * 0x100000000ull + static_cast<std::uint32_t>(rng());
        b >>= 32;
    }
    return r % bound;
}

// Random nonzero element with valuation in [vmin, vmax].
inline ptk::PadicNumber random_padic(std::mt19937_64& rng, long long p, int prec,
                                     int vmin = 0, int vmax = 0) {
    int v = vmin + static_cast<int>(rng() % static_cast<std::uint64_t>(vmax - vmin + 1));
    ptk::Int mod = ptk::p_power(p, prec - v);
    ptk::Int u = 0;
    while (u % p == 0) u = random_int_below(rng, mod);
    return ptk::PadicNumber::from_unit_part(p, v, u, prec);
}

} // namespace ptk_test

#endif
