#pragma once

#include <cstdint>

namespace igusa {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n);

// p^e, or 0 if it does not fit below `limit`.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t limit);

// p-adic valuation of a nonzero residue r modulo p^level; returns `level`
// when r == 0 (order at least level).
inline unsigned valuation(std::uint64_t r, std::uint64_t p, unsigned level) {
    if (r == 0) return level;
    unsigned v = 0;
    while (r % p == 0) {
        r /= p;
        ++v;
    }
    return v;
}

} // namespace igusa
