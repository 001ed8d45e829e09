#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

namespace bridgestat {

/// Tag for the point at infinity of the extended naturals.
struct Infinite {
    friend constexpr bool operator==(Infinite, Infinite) { return true; }
};

inline constexpr Infinite infinite{};

/**
 * @brief A nonnegative integer or infinity.
 *
 * Used for quantities that are undefined-as-finite on the zero polynomial
 * (mu, lambda, order of vanishing) and for infinite homology groups.
 */
class ExtendedCount {
public:
    constexpr ExtendedCount() : value_(std::uint64_t{0}) {}
    constexpr ExtendedCount(std::uint64_t n) : value_(n) {}
    constexpr ExtendedCount(Infinite) : value_(Infinite{}) {}

    [[nodiscard]] constexpr bool is_infinite() const {
        return std::holds_alternative<Infinite>(value_);
    }
    [[nodiscard]] constexpr bool is_finite() const { return !is_infinite(); }

    /// Throws std::logic_error when infinite.
    [[nodiscard]] std::uint64_t value() const {
        if (is_infinite())
            throw std::logic_error("ExtendedCount: value() on infinity");
        return std::get<std::uint64_t>(value_);
    }

    friend constexpr bool operator==(const ExtendedCount&, const ExtendedCount&) = default;

    [[nodiscard]] std::string to_string() const {
        return is_infinite() ? std::string("inf") : std::to_string(std::get<std::uint64_t>(value_));
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtendedCount& c) {
        return os << c.to_string();
    }

private:
    std::variant<std::uint64_t, Infinite> value_;
};

} // namespace bridgestat
