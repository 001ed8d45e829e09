#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bridgestat/arith.hpp"
#include "bridgestat/extended.hpp"
#include "bridgestat/linking.hpp"
#include "bridgestat/polynomial.hpp"
#include "bridgestat/schubert.hpp"

namespace bridgestat {

/**
 * @brief Alexander polynomial of L_{a/b} from Minkus' alternating sum.
 *
 * Delta(t) = sum_{k=0}^{b-1} (-1)^k t^{s_k}, with s_0 = 0 and
 * s_k = eps_1 + ... + eps_k. For a = 1 this is 1 - t + t^2 - ... .
 */
inline LaurentPoly minkus_polynomial(const SchubertFraction& f) {
    // exponents stay within [-(b-1), b-1]
    const auto b = static_cast<std::int64_t>(f.b());
    std::vector<std::int64_t> dense(static_cast<std::size_t>(2 * b - 1), 0);
    std::int64_t s = 0;
    for (std::int64_t k = 0; k < b; ++k) {
        if (k > 0) s += epsilon(f, static_cast<std::uint64_t>(k)).value();
        dense[static_cast<std::size_t>(s + b - 1)] += (k % 2 == 0) ? 1 : -1;
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(dense.size());
    for (auto c : dense) coeffs.emplace_back(static_cast<long>(c));
    return LaurentPoly(-(b - 1), std::move(coeffs));
}

/**
 * Delta(1 + X) after clearing the Laurent shift. Agrees with the completed
 * Alexander polynomial up to the unit (1 + X)^{min_deg}.
 */
inline IntPoly completed_polynomial(const LaurentPoly& delta) {
    return shift_by_one(delta.normalized());
}

inline IntPoly completed_polynomial(const SchubertFraction& f) {
    return completed_polynomial(minkus_polynomial(f));
}

/// 1 + t + ... + t^{m-1}.
inline IntPoly geometric_polynomial(std::uint64_t m) {
    return IntPoly(std::vector<BigInt>(m, BigInt(1)));
}

/**
 * @brief p-adic valuation of the order of H_1 of the p^n-fold branched cover.
 *
 * Equals v_p |Res((t^{p^n} - 1)/(t - 1), Q)| where Q is the normalized
 * Alexander polynomial. Infinite when the resultant vanishes.
 */
inline ExtendedCount homology_order_exponent(const LaurentPoly& delta, Prime p, std::uint64_t n) {
    if (delta.is_zero())
        throw std::invalid_argument("homology_order_exponent: Alexander polynomial is zero");
    if (n == 0)
        return 0;
    BigInt pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
    if (!pn.fits_ulong_p())
        throw std::invalid_argument("homology_order_exponent: p^n too large");
    const BigInt res = resultant(geometric_polynomial(pn.get_ui()), delta.normalized());
    if (sgn(res) == 0)
        return infinite;
    return valuation(res, p);
}

inline ExtendedCount homology_order_exponent(const SchubertFraction& f, Prime p, std::uint64_t n) {
    detail::require_link(f, "homology_order_exponent");
    require_odd_prime(p);
    return homology_order_exponent(minkus_polynomial(f), p, n);
}

} // namespace bridgestat
