// Exact arithmetic in the prime field F_p for a runtime-chosen prime p.
// Every computation in this project reduces to dense linear algebra over
// F_p; residues are kept in [0, p) inside a machine word.
#pragma once

#include <cstdint>
#include <stdexcept>

namespace arn {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr u32 kDefaultPrime = 32003;

inline u32 fp_add(u32 a, u32 b, u32 p) {
    u32 s = a + b;
    return s >= p ? s - p : s;
}

inline u32 fp_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }

inline u32 fp_neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }

inline u32 fp_mul(u32 a, u32 b, u32 p) {
    return static_cast<u32>((static_cast<u64>(a) * b) % p);
}

inline u32 fp_pow(u32 a, u64 e, u32 p) {
    u32 r = 1 % p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u32 fp_inv(u32 a, u32 p) {
    if (a == 0) throw std::domain_error("fp_inv: zero is not invertible");
    return fp_pow(a, p - 2, p);
}

// Canonical residue of a (possibly negative) integer.
inline u32 fp_of(long long v, u32 p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    return static_cast<u32>(m);
}

inline bool is_prime(u32 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace arn
