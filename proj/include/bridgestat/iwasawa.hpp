#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bridgestat/alexpoly.hpp"
#include "bridgestat/arith.hpp"
#include "bridgestat/extended.hpp"
#include "bridgestat/linking.hpp"
#include "bridgestat/polynomial.hpp"
#include "bridgestat/schubert.hpp"

namespace bridgestat {

/// mu and lambda of an Iwasawa power series; both infinite exactly for zero.
struct IwasawaInvariants {
    ExtendedCount mu;
    ExtendedCount lambda;

    static IwasawaInvariants finite(std::uint64_t mu, std::uint64_t lambda) { return {mu, lambda}; }
    static IwasawaInvariants infinite() { return {bridgestat::infinite, bridgestat::infinite}; }

    friend bool operator==(const IwasawaInvariants&, const IwasawaInvariants&) = default;
};

/**
 * @brief mu and lambda of a polynomial viewed in Z_p[[X]].
 *
 * mu is the least p-adic valuation among the coefficients; lambda is the
 * least index attaining it. After dividing out p^mu the first unit
 * coefficient sits at lambda, and Weierstrass preparation does the rest.
 */
inline IwasawaInvariants invariants_of(const IntPoly& poly, Prime p) {
    require_odd_prime(p);
    if (poly.is_zero())
        return IwasawaInvariants::infinite();
    std::uint64_t mu = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t lambda = 0;
    const auto& c = poly.coeffs();
    for (std::size_t i = 0; i < c.size() && mu > 0; ++i) {
        if (sgn(c[i]) == 0) continue;
        const auto v = valuation(c[i], p);
        if (v < mu) {
            mu = v;
            lambda = i;
        }
    }
    return IwasawaInvariants::finite(mu, lambda);
}

/// Invariants of the total-linking-number cover branched along L_{a/b}.
inline IwasawaInvariants invariants(const SchubertFraction& f, Prime p) {
    require_odd_prime(p);
    return invariants_of(completed_polynomial(f), p);
}

/// Order of vanishing at X = 0.
inline ExtendedCount x_order(const IntPoly& poly) {
    const auto& c = poly.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) return static_cast<std::uint64_t>(i);
    return infinite;
}

/// Exponents e_n of |H_1| along the tower, with the fitted (mu, lambda, nu).
struct GrowthReport {
    ExtendedCount mu;
    ExtendedCount lambda;
    std::int64_t nu = 0;
    std::vector<std::uint64_t> exponents;  // e_0 .. e_{n_max}
    std::uint64_t stabilized_at = 0;
    bool consistent = false;               // formula holds at the last two indices
};

class InfiniteHomologyError : public std::runtime_error {
public:
    explicit InfiniteHomologyError(std::uint64_t n)
        : std::runtime_error("homology of the p^" + std::to_string(n) + "-fold cover is infinite"), n_(n) {}
    [[nodiscard]] std::uint64_t level() const { return n_; }

private:
    std::uint64_t n_;
};

namespace detail {

inline BigInt growth_prediction(Prime p, std::uint64_t n, std::uint64_t mu, std::uint64_t lambda) {
    BigInt pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
    return pn * BigInt(static_cast<unsigned long>(mu)) + BigInt(static_cast<unsigned long>(n)) *
                                                             BigInt(static_cast<unsigned long>(lambda));
}

} // namespace detail

/**
 * @brief Checks e_n = p^n mu + n lambda + nu along n = 0..n_max.
 *
 * nu is fitted at n_max; stabilized_at is the least index from which the
 * formula holds through n_max. Throws InfiniteHomologyError naming the
 * first level whose homology is infinite.
 */
inline GrowthReport verify_growth(const SchubertFraction& f, Prime p, std::uint64_t n_max = 4) {
    require_odd_prime(p);
    detail::require_link(f, "verify_growth");
    if (n_max < 3)
        throw std::invalid_argument("verify_growth: n_max must be at least 3");
    if (linking_number(f) == 0)
        throw std::invalid_argument("verify_growth: linking number is zero");

    const LaurentPoly delta = minkus_polynomial(f);
    const IwasawaInvariants inv = invariants_of(completed_polynomial(delta), p);

    GrowthReport report;
    report.mu = inv.mu;
    report.lambda = inv.lambda;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto e = homology_order_exponent(delta, p, n);
        if (e.is_infinite())
            throw InfiniteHomologyError(n);
        report.exponents.push_back(e.value());
    }
    if (inv.mu.is_infinite())
        return report;

    const auto mu = inv.mu.value(), lambda = inv.lambda.value();
    const BigInt nu = BigInt(static_cast<unsigned long>(report.exponents[n_max])) -
                      detail::growth_prediction(p, n_max, mu, lambda);
    report.nu = nu.get_si();

    auto holds = [&](std::uint64_t n) {
        return BigInt(static_cast<unsigned long>(report.exponents[n])) ==
               detail::growth_prediction(p, n, mu, lambda) + nu;
    };
    report.consistent = holds(n_max - 1);
    report.stabilized_at = n_max;
    while (report.stabilized_at > 0 && holds(report.stabilized_at - 1))
        --report.stabilized_at;
    return report;
}

} // namespace bridgestat
