#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bridgestat/arith.hpp"
#include "bridgestat/schubert.hpp"

namespace bridgestat {

/// A sign in {+1, -1}.
class EpsilonSign {
public:
    static constexpr EpsilonSign plus() { return EpsilonSign(1); }
    static constexpr EpsilonSign minus() { return EpsilonSign(-1); }

    [[nodiscard]] constexpr int value() const { return value_; }
    friend constexpr bool operator==(EpsilonSign, EpsilonSign) = default;

private:
    constexpr explicit EpsilonSign(int v) : value_(v) {}
    int value_;
};

/// (-1)^floor(i a / b).
inline EpsilonSign epsilon(const SchubertFraction& f, std::uint64_t i) {
    return floor_mul_div(i, f.a(), f.b()) % 2 == 0 ? EpsilonSign::plus() : EpsilonSign::minus();
}

/// Linking number of the two components of L_{a/b}: sum of epsilon over odd i <= b.
inline std::int64_t linking_number(const SchubertFraction& f) {
    detail::require_link(f, "linking_number");
    std::int64_t sum = 0;
    for (std::uint64_t i = 1; i < f.b(); i += 2)
        sum += epsilon(f, i).value();
    return sum;
}

/**
 * @brief Occupancy profile c_j, j = 0..a-1.
 *
 * c_j counts the odd integers i in [1, b] with floor(i a / b) = j.
 * The entries sum to b/2.
 */
inline std::vector<std::uint64_t> c_profile(const SchubertFraction& f) {
    detail::require_link(f, "c_profile");
    std::vector<std::uint64_t> c(f.a(), 0);
    for (std::uint64_t i = 1; i < f.b(); i += 2)
        ++c[floor_mul_div(i, f.a(), f.b())];
    return c;
}

} // namespace bridgestat
