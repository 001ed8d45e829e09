#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bridgestat/iwasawa.hpp"
#include "bridgestat/linkmat.hpp"
#include "bridgestat/polynomial.hpp"
#include "bridgestat/stats.hpp"

namespace bridgestat::json_io {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline json to_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

inline BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

inline json to_json(const ExtendedCount& c) {
    return c.is_infinite() ? json(nullptr) : json(c.value());
}

inline ExtendedCount count_from_json(const json& j) {
    if (j.is_null()) return infinite;
    return j.get<std::uint64_t>();
}

inline json coeffs_json(const std::vector<BigInt>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(to_json(c));
    return arr;
}

inline std::vector<BigInt> coeffs_from_json(const json& arr) {
    std::vector<BigInt> out;
    for (const auto& c : arr) out.push_back(big_from_json(c));
    return out;
}

inline json to_json(const LaurentPoly& p) {
    return json{{"min_deg", p.min_deg()}, {"coeffs", coeffs_json(p.coeffs())}};
}

inline json to_json(const IntPoly& p) { return json{{"coeffs", coeffs_json(p.coeffs())}}; }

inline LaurentPoly laurent_from_json(const json& j) {
    return LaurentPoly(j.at("min_deg").get<std::int64_t>(), coeffs_from_json(j.at("coeffs")));
}

inline IntPoly intpoly_from_json(const json& j) { return IntPoly(coeffs_from_json(j.at("coeffs"))); }

inline json to_json(const IwasawaInvariants& inv) {
    return json{{"mu", to_json(inv.mu)}, {"lambda", to_json(inv.lambda)}};
}

inline json to_json(const GrowthReport& g) {
    return json{{"mu", to_json(g.mu)},
                {"lambda", to_json(g.lambda)},
                {"nu", g.nu},
                {"exponents", g.exponents},
                {"stabilized_at", g.stabilized_at},
                {"consistent", g.consistent}};
}

/**
 * @brief Reads {"r": int, "z": [int...], "linking": [[i, j, value], ...]}.
 *
 * Components are numbered from 1 and pairs need i < j; omitted pairs are 0.
 */
inline LinkingData linking_data_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("linking data: expected a JSON object");
    const auto r = j.at("r").get<std::int64_t>();
    if (r < 2) throw std::invalid_argument("linking data: need at least 2 components, got r=" + std::to_string(r));
    std::vector<std::int64_t> z = j.at("z").get<std::vector<std::int64_t>>();
    std::vector<LinkingEntry> entries;
    if (j.contains("linking")) {
        for (const auto& e : j.at("linking")) {
            if (!e.is_array() || e.size() != 3)
                throw std::invalid_argument("linking data: each entry must be [i, j, value], got " + e.dump());
            const auto i = e[0].get<std::int64_t>(), k = e[1].get<std::int64_t>();
            if (i < 1 || k < 1)
                throw std::invalid_argument("linking data: component indices start at 1, got " + e.dump());
            entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(k), e[2].get<std::int64_t>()});
        }
    }
    return LinkingData(static_cast<std::size_t>(r), std::move(z), entries);
}

inline json to_json(const LinkingMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entries()) rows.push_back(coeffs_json(row));
    return rows;
}

inline json to_json(const Criterion& c, Prime p) {
    return json{{"p", p},
                {"lambda_lower_bound", c.lambda_lower_bound},
                {"ord_exceeds", c.ord_exceeds},
                {"mu0_lambda_min", c.mu0_lambda_min},
                {"rank_rational", c.rank_rational},
                {"rank_mod_p", c.rank_mod_p},
                {"c_value", c.c_value.to_string(p)}};
}

inline json to_json(const DensityReport& r) {
    json j{{"p", r.p},
           {"x", r.x},
           {"predicate", to_string(r.predicate)},
           {"total", r.total},
           {"hits", r.hits},
           {"proportion", r.proportion_exact()},
           {"proportion_decimal", r.proportion_decimal()}};
    j["error_bound"] = r.error_bound ? json(*r.error_bound) : json(nullptr);
    return j;
}

} // namespace bridgestat::json_io
