#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bridgestat {

/**
 * @brief Validation failure for a Schubert pair (a, b).
 *
 * Each rejected condition carries its own Reason so callers (and the CLI)
 * can report which constraint was violated.
 */
class FractionError : public std::invalid_argument {
public:
    enum class Reason { NonPositiveNumerator, NonPositiveDenominator, NumeratorTooLarge, NotCoprime };

    FractionError(Reason reason, const std::string& what)
        : std::invalid_argument(what), reason_(reason) {}

    [[nodiscard]] Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/**
 * @brief A 2-bridge link or knot L_{a/b} in Schubert normal form.
 *
 * Invariants: gcd(a, b) = 1 and 0 < a < 2b. b even names a two-component
 * link, b odd a knot. Only make_fraction constructs one.
 */
class SchubertFraction {
public:
    [[nodiscard]] std::uint64_t a() const { return a_; }
    [[nodiscard]] std::uint64_t b() const { return b_; }
    [[nodiscard]] bool is_link() const { return b_ % 2 == 0; }
    [[nodiscard]] bool is_knot() const { return !is_link(); }

    friend auto operator<=>(const SchubertFraction&, const SchubertFraction&) = default;

    friend std::ostream& operator<<(std::ostream& os, const SchubertFraction& f) {
        return os << f.a_ << '/' << f.b_;
    }

    friend SchubertFraction make_fraction(std::int64_t a, std::int64_t b);

private:
    SchubertFraction(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {}
    std::uint64_t a_;
    std::uint64_t b_;
};

inline SchubertFraction make_fraction(std::int64_t a, std::int64_t b) {
    using R = FractionError::Reason;
    if (a <= 0)
        throw FractionError(R::NonPositiveNumerator, "a must be positive, got " + std::to_string(a));
    if (b <= 0)
        throw FractionError(R::NonPositiveDenominator, "b must be positive, got " + std::to_string(b));
    if (a >= 2 * b)
        throw FractionError(R::NumeratorTooLarge,
                            "a must satisfy a < 2b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    if (std::gcd(a, b) != 1)
        throw FractionError(R::NotCoprime, "gcd(a,b) must be 1, got gcd(" + std::to_string(a) + "," +
                                               std::to_string(b) + ")=" + std::to_string(std::gcd(a, b)));
    return SchubertFraction(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

/// max(a^2, b).
inline std::uint64_t height(const SchubertFraction& f) {
    return std::max(f.a() * f.a(), f.b());
}

namespace detail {

inline void require_link(const SchubertFraction& f, const char* what) {
    if (!f.is_link())
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(f.a()) + "/" +
                                    std::to_string(f.b()) + " is a knot (b odd), expected a link");
}

} // namespace detail

/// Same oriented link type: b = b' and a a' = 1 mod 2b. Both must be links.
inline bool same_type(const SchubertFraction& f, const SchubertFraction& g) {
    detail::require_link(f, "same_type");
    detail::require_link(g, "same_type");
    if (f.b() != g.b())
        return false;
    const auto m = static_cast<unsigned __int128>(2 * f.b());
    return (static_cast<unsigned __int128>(f.a()) * g.a()) % m == 1;
}

/// The unique a' in (0, 2b) with a a' = 1 mod 2b.
inline SchubertFraction same_type_partner(const SchubertFraction& f) {
    detail::require_link(f, "same_type_partner");
    const std::int64_t m = static_cast<std::int64_t>(2 * f.b());
    // extended Euclid on (a, 2b); gcd is 1 because a is odd and coprime to b
    std::int64_t r0 = m, r1 = static_cast<std::int64_t>(f.a());
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    std::int64_t inv = s0 % m;
    if (inv < 0) inv += m;
    return make_fraction(inv, static_cast<std::int64_t>(f.b()));
}

/// Largest odd a with a^2 < x (0 when none).
inline std::uint64_t max_numerator(double x) {
    if (!(x > 1.0)) return 0;
    auto a = static_cast<std::uint64_t>(std::sqrt(x));
    while (static_cast<double>(a * a) >= x) --a;
    while (static_cast<double>((a + 1) * (a + 1)) < x) ++a;
    if (a % 2 == 0 && a > 0) --a;
    return a;
}

/// Link fractions a/b with the given numerator and height < x, ascending in b.
inline std::vector<SchubertFraction> links_with_numerator(std::uint64_t a, double x) {
    std::vector<SchubertFraction> out;
    if (a % 2 == 0 || static_cast<double>(a * a) >= x)
        return out;
    // 2b > a and b even; the smallest even b exceeding a/2
    std::uint64_t b = (a / 2 + 1) + ((a / 2 + 1) % 2);
    for (; static_cast<double>(b) < x; b += 2) {
        if (std::gcd(a, b) == 1)
            out.push_back(make_fraction(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)));
    }
    return out;
}

/**
 * @brief All two-component link fractions with height strictly below x.
 *
 * Fractions are not merged up to link type. Order is ascending (a, b).
 */
inline std::vector<SchubertFraction> enumerate_links(double x) {
    std::vector<SchubertFraction> out;
    for (std::uint64_t a = 1; a <= max_numerator(x); a += 2) {
        auto row = links_with_numerator(a, x);
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

/// Closed-form lower bound x^{3/2} - (5/4)(x + sqrt x) claimed for #N_{<x}.
inline double claimed_count_lower_bound(double x) {
    return std::pow(x, 1.5) - 1.25 * (x + std::sqrt(x));
}

} // namespace bridgestat
