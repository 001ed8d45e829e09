#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bridgestat {

/// Prime modulus as used by the p-adic routines.
using Prime = unsigned long;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Throws std::invalid_argument unless p is an odd prime.
inline void require_odd_prime(std::uint64_t p) {
    if (p == 2)
        throw std::invalid_argument("p must be an odd prime, got 2");
    if (!is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

/// p-adic valuation of a nonzero integer. Precondition: n != 0.
inline std::uint64_t valuation(const mpz_class& n, Prime p) {
    if (sgn(n) == 0)
        throw std::invalid_argument("valuation of zero is infinite");
    mpz_class q;
    mpz_class pz(p);
    return static_cast<std::uint64_t>(mpz_remove(q.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

inline std::uint64_t valuation(std::uint64_t n, Prime p) {
    if (n == 0)
        throw std::invalid_argument("valuation of zero is infinite");
    std::uint64_t k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

/// Floor of a*b/c for nonnegative operands, exact in 128-bit.
inline std::uint64_t floor_mul_div(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) / c);
}

} // namespace bridgestat
