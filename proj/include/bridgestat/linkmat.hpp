#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bridgestat/arith.hpp"
#include "bridgestat/polynomial.hpp"

namespace bridgestat {

/// Dense row-major integer matrix.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// One off-diagonal linking number, components numbered from 1.
struct LinkingEntry {
    std::size_t i;
    std::size_t j;
    std::int64_t value;
};

/**
 * @brief Pairwise linking numbers of an r-component link and a cover vector z.
 *
 * The linking matrix is stored symmetric with zero diagonal. z must be
 * admissible: gcd(z) = 1 and no entry zero.
 */
class LinkingData {
public:
    LinkingData(std::size_t r, std::vector<std::int64_t> z, const std::vector<LinkingEntry>& entries)
        : r_(r), z_(std::move(z)), linking_(r, std::vector<std::int64_t>(r, 0)) {
        if (r < 2)
            throw std::invalid_argument("linking data: need at least 2 components, got r=" + std::to_string(r));
        if (z_.size() != r)
            throw std::invalid_argument("linking data: z has length " + std::to_string(z_.size()) +
                                        ", expected r=" + std::to_string(r));
        for (std::size_t k = 0; k < r; ++k)
            if (z_[k] == 0)
                throw std::invalid_argument("inadmissible z: entry z_" + std::to_string(k + 1) +
                                            " is zero (product of z must be nonzero)");
        std::int64_t g = 0;
        for (auto zi : z_) g = std::gcd(g, zi);
        if (g != 1)
            throw std::invalid_argument("inadmissible z: gcd(z) = " + std::to_string(g) + ", expected 1");

        std::vector<std::vector<bool>> seen(r, std::vector<bool>(r, false));
        for (const auto& e : entries) {
            if (e.i < 1 || e.j > r || e.i >= e.j)
                throw std::invalid_argument("linking data: pair (" + std::to_string(e.i) + "," +
                                            std::to_string(e.j) + ") must satisfy 1 <= i < j <= r");
            if (seen[e.i - 1][e.j - 1])
                throw std::invalid_argument("linking data: duplicate pair (" + std::to_string(e.i) + "," +
                                            std::to_string(e.j) + ")");
            seen[e.i - 1][e.j - 1] = true;
            linking_[e.i - 1][e.j - 1] = e.value;
            linking_[e.j - 1][e.i - 1] = e.value;
        }
    }

    /// Two components with linking number ell.
    static LinkingData two_component(std::int64_t ell, std::int64_t z1 = 1, std::int64_t z2 = 1) {
        return LinkingData(2, {z1, z2}, {{1, 2, ell}});
    }

    [[nodiscard]] std::size_t r() const { return r_; }
    [[nodiscard]] const std::vector<std::int64_t>& z() const { return z_; }
    /// ell_{i,j} with 1-based indices.
    [[nodiscard]] std::int64_t linking(std::size_t i, std::size_t j) const { return linking_[i - 1][j - 1]; }

private:
    std::size_t r_;
    std::vector<std::int64_t> z_;
    std::vector<std::vector<std::int64_t>> linking_;
};

/**
 * @brief C_{L,z}: off-diagonal ell_{i,j} z_i, diagonal -sum_{t != i} z_t ell_{t,i}.
 *
 * Rows sum to zero.
 */
class LinkingMatrix {
public:
    explicit LinkingMatrix(IntMatrix entries) : entries_(std::move(entries)) {}

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] const IntMatrix& entries() const { return entries_; }
    [[nodiscard]] const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }

    /// Delete row i and column j (0-based).
    [[nodiscard]] IntMatrix minor(std::size_t i, std::size_t j) const {
        IntMatrix m;
        for (std::size_t r = 0; r < size(); ++r) {
            if (r == i) continue;
            std::vector<BigInt> row;
            for (std::size_t c = 0; c < size(); ++c)
                if (c != j) row.push_back(entries_[r][c]);
            m.push_back(std::move(row));
        }
        return m;
    }

    friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

private:
    IntMatrix entries_;
};

inline LinkingMatrix linking_matrix(const LinkingData& d) {
    const std::size_t r = d.r();
    IntMatrix m(r, std::vector<BigInt>(r, 0));
    for (std::size_t i = 1; i <= r; ++i) {
        BigInt diag = 0;
        for (std::size_t t = 1; t <= r; ++t) {
            if (t == i) continue;
            diag -= BigInt(static_cast<long>(d.z()[t - 1])) * BigInt(static_cast<long>(d.linking(t, i)));
            m[i - 1][t - 1] = BigInt(static_cast<long>(d.linking(i, t))) * BigInt(static_cast<long>(d.z()[i - 1]));
        }
        m[i - 1][i - 1] = diag;
    }
    return LinkingMatrix(std::move(m));
}

/// Determinant by Bareiss fraction-free elimination.
inline BigInt determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t s = k + 1;
            while (s < n && sgn(m[s][k]) == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Rank over Q (hence over Q_p), fraction-free.
inline std::size_t rank_rational(const LinkingMatrix& mat) {
    IntMatrix m = mat.entries();
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt v = m[i][j] * m[rank][c] - m[i][c] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

/// Rank of the reduction mod p.
inline std::size_t rank_mod_p(const LinkingMatrix& mat, Prime p) {
    const std::size_t rows = mat.size();
    const std::size_t cols = rows ? mat.entries()[0].size() : 0;
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = mpz_fdiv_ui(mat(i, j).get_mpz_t(), p);

    auto inverse = [p](std::uint64_t x) {
        // Fermat: x^{p-2}
        std::uint64_t result = 1, base = x % p, e = p - 2;
        while (e) {
            if (e & 1) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % p);
            base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
            e >>= 1;
        }
        return result;
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const std::uint64_t inv = inverse(m[rank][c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const std::uint64_t factor = static_cast<std::uint64_t>(static_cast<unsigned __int128>(m[i][c]) * inv % p);
            for (std::size_t j = c; j < cols; ++j) {
                const auto sub = static_cast<std::uint64_t>(static_cast<unsigned __int128>(factor) * m[rank][j] % p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

/// |x|_p restricted to {0} and {p^{-k}}.
struct PAdicAbsolute {
    bool zero = true;
    std::uint64_t exponent = 0;  // value p^{-exponent} when nonzero

    [[nodiscard]] bool is_unit() const { return !zero && exponent == 0; }

    [[nodiscard]] std::string to_string(Prime p) const {
        if (zero) return "0";
        if (exponent == 0) return "1";
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), p, exponent);
        return "1/" + den.get_str();
    }

    friend bool operator==(const PAdicAbsolute&, const PAdicAbsolute&) = default;
};

/// max over (i, j) of |det M_{i,j}|_p, with |0|_p = 0.
inline PAdicAbsolute c_value(const LinkingData& d, Prime p) {
    require_odd_prime(p);
    const LinkingMatrix c = linking_matrix(d);
    PAdicAbsolute best;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            const BigInt det = determinant(c.minor(i, j));
            if (sgn(det) == 0) continue;
            const auto v = valuation(det, p);
            if (best.zero || v < best.exponent) best = PAdicAbsolute{false, v};
        }
    }
    return best;
}

/// Outcome of the linking-matrix tests for mu = 0 and minimal lambda.
struct Criterion {
    std::size_t lambda_lower_bound = 0;  // r - 1
    bool ord_exceeds = false;            // ord_{X=0} > r - 1
    bool mu0_lambda_min = false;         // mu = 0 and lambda = r - 1
    std::size_t rank_rational = 0;
    std::size_t rank_mod_p = 0;
    PAdicAbsolute c_value;
};

inline Criterion criterion(const LinkingData& d, Prime p) {
    require_odd_prime(p);
    const LinkingMatrix c = linking_matrix(d);
    Criterion out;
    out.lambda_lower_bound = d.r() - 1;
    out.rank_rational = rank_rational(c);
    out.rank_mod_p = rank_mod_p(c, p);
    out.c_value = c_value(d, p);
    out.ord_exceeds = out.rank_rational < d.r() - 1;
    out.mu0_lambda_min = out.rank_mod_p == d.r() - 1;
    if (out.mu0_lambda_min != out.c_value.is_unit())
        throw std::logic_error("criterion: rank mod p and c-value disagree");
    return out;
}

/**
 * For r = 3: the two minor determinants of C spanned by its first two rows,
 *   det M_{3,3} = z3 (z2 l21 l32 + z1 l31 l12 + z3 l31 l32),
 *   det M_{3,1} = z1 (z2 l12 l23 + z1 l13 l12 + z3 l13 l32).
 * The matrix has rank 2 iff one of them is nonzero.
 */
inline std::pair<BigInt, BigInt> three_component_determinants(const LinkingData& d) {
    if (d.r() != 3)
        throw std::invalid_argument("three_component_determinants: r must be 3");
    auto l = [&](std::size_t i, std::size_t j) { return BigInt(static_cast<long>(d.linking(i, j))); };
    const BigInt z1(static_cast<long>(d.z()[0])), z2(static_cast<long>(d.z()[1])), z3(static_cast<long>(d.z()[2]));
    BigInt first = z3 * (z2 * l(2, 1) * l(3, 2) + z1 * l(3, 1) * l(1, 2) + z3 * l(3, 1) * l(3, 2));
    BigInt second = z1 * (z2 * l(1, 2) * l(2, 3) + z1 * l(1, 3) * l(1, 2) + z3 * l(1, 3) * l(3, 2));
    return {first, second};
}

} // namespace bridgestat
