#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bridgestat {

using BigInt = mpz_class;

namespace detail {

inline void trim_back(std::vector<BigInt>& c) {
    while (!c.empty() && sgn(c.back()) == 0)
        c.pop_back();
}

} // namespace detail

/**
 * @brief Dense integer polynomial in one variable.
 *
 * coeffs()[i] multiplies X^i. Trailing zeros are trimmed, so the zero
 * polynomial has no coefficients and degree -1.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { detail::trim_back(coeffs_); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.emplace_back(c);
        detail::trim_back(coeffs_);
    }

    [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    [[nodiscard]] const BigInt& leading() const { return coeffs_.back(); }

    /// Coefficient of X^i, zero past the degree.
    [[nodiscard]] BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
        os << '[';
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            os << (i ? ", " : "") << p.coeffs_[i];
        return os << ']';
    }

private:
    std::vector<BigInt> coeffs_;
};

/**
 * @brief Integer Laurent polynomial sum_k coeffs[k] t^{min_deg + k}.
 *
 * Canonical form: first and last stored coefficients are nonzero. The zero
 * polynomial stores nothing and has min_deg 0.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t min_deg, std::vector<BigInt> coeffs) : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
        detail::trim_back(coeffs_);
        auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) != 0; });
        min_deg_ += first - coeffs_.begin();
        coeffs_.erase(coeffs_.begin(), first);
        if (coeffs_.empty()) min_deg_ = 0;
    }

    [[nodiscard]] std::int64_t min_deg() const { return min_deg_; }
    [[nodiscard]] std::int64_t max_deg() const { return min_deg_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^e.
    [[nodiscard]] BigInt coeff(std::int64_t e) const {
        const auto k = e - min_deg_;
        return (k >= 0 && k < static_cast<std::int64_t>(coeffs_.size())) ? coeffs_[k] : BigInt(0);
    }

    /// Value at t = 1.
    [[nodiscard]] BigInt at_one() const {
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    /// t^{-min_deg} times this, as an ordinary polynomial with nonzero constant term.
    [[nodiscard]] IntPoly normalized() const { return IntPoly(coeffs_); }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::int64_t min_deg_ = 0;
    std::vector<BigInt> coeffs_;
};

/// P(1 + X), by repeated synthetic division (Taylor shift by one).
inline IntPoly shift_by_one(const IntPoly& p) {
    std::vector<BigInt> c = p.coeffs();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            c[j] += c[j + 1];
    return IntPoly(std::move(c));
}

/// gcd of the coefficients, nonnegative; zero for the zero polynomial.
inline BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

namespace detail {

inline std::vector<BigInt> divide_exact(std::vector<BigInt> c, const BigInt& d) {
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return c;
}

inline BigInt pow(const BigInt& base, std::uint64_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Pseudo-remainder: lc(b)^{deg a - deg b + 1} a mod b. Requires deg a >= deg b >= 0.
inline std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    // exactly deg a - deg b + 1 elimination steps, each scaling by lc(b)
    for (std::size_t k = a.size(); k-- > db;) {
        const BigInt lead = a[k];
        a.resize(k);
        for (auto& x : a) x *= lb;
        if (sgn(lead) != 0)
            for (std::size_t i = 0; i < db; ++i)
                a[k - db + i] -= lead * b[i];
    }
    trim_back(a);
    return a;
}

} // namespace detail

/**
 * @brief Resultant of two integer polynomials.
 *
 * Subresultant pseudo-remainder sequence (Collins), after removing contents.
 * Returns zero when the polynomials share a root or either is zero.
 */
inline BigInt resultant(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero())
        return 0;
    std::vector<BigInt> A = lhs.coeffs();
    std::vector<BigInt> B = rhs.coeffs();
    int s = 1;
    if (A.size() < B.size()) {
        std::swap(A, B);
        if ((A.size() - 1) % 2 == 1 && (B.size() - 1) % 2 == 1) s = -1;
    }
    const BigInt ca = content(IntPoly(A));
    const BigInt cb = content(IntPoly(B));
    A = detail::divide_exact(std::move(A), ca);
    B = detail::divide_exact(std::move(B), cb);
    const BigInt t = detail::pow(ca, B.size() - 1) * detail::pow(cb, A.size() - 1);
    if (B.size() == 1)
        return s * t * detail::pow(B[0], A.size() - 1);

    BigInt g = 1, h = 1;
    while (true) {
        const std::size_t da = A.size() - 1, db = B.size() - 1;
        const std::size_t delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) s = -s;
        std::vector<BigInt> R = detail::pseudo_remainder(A, B);
        if (R.empty())
            return 0;
        A = std::move(B);
        R = detail::divide_exact(std::move(R), g * detail::pow(h, delta));
        B = std::move(R);
        g = A.back();
        // h <- g^delta / h^(delta - 1), exact
        if (delta > 0) {
            BigInt num = detail::pow(g, delta);
            BigInt den = detail::pow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.size() == 1) {
            // h <- h^{1 - deg A} lc(B)^{deg A}
            const std::size_t dA = A.size() - 1;
            BigInt num = detail::pow(B[0], dA);
            BigInt den = detail::pow(h, dA - 1);
            BigInt r;
            mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * t * r;
        }
    }
}

} // namespace bridgestat
