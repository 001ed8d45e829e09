#include <gtest/gtest.h>

#include "bridgestat/linkmat.hpp"
#include "oracles.hpp"

using namespace bridgestat;

namespace {

IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m;
    for (auto r : rows) {
        std::vector<BigInt> row;
        for (long v : r) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<std::vector<mpq_class>> to_rational(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> q;
    for (const auto& r : m) {
        std::vector<mpq_class> row;
        for (const auto& v : r) row.emplace_back(v);
        q.push_back(std::move(row));
    }
    return q;
}

// Every 3-component configuration with linking numbers in [-2, 2] and z from a fixed list.
template <class Fn>
void for_each_three_component(Fn fn) {
    const std::vector<std::vector<std::int64_t>> zs{{1, 1, 1}, {1, 2, 3}, {-1, 3, 2}, {3, 3, 1}, {5, 1, -7}};
    for (const auto& z : zs)
        for (std::int64_t l12 = -2; l12 <= 2; ++l12)
            for (std::int64_t l13 = -2; l13 <= 2; ++l13)
                for (std::int64_t l23 = -2; l23 <= 2; ++l23)
                    fn(LinkingData(3, z, {{1, 2, l12}, {1, 3, l13}, {2, 3, l23}}));
}

} // namespace

TEST(LinkingData, RejectsInadmissibleZ) {
    EXPECT_THROW(LinkingData(2, {0, 1}, {{1, 2, 1}}), std::invalid_argument);
    EXPECT_THROW(LinkingData(2, {2, 4}, {{1, 2, 1}}), std::invalid_argument);
    EXPECT_THROW(LinkingData(3, {3, 6, 9}, {}), std::invalid_argument);
    try {
        LinkingData(2, {2, 4}, {});
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("gcd"), std::string::npos);
    }
    try {
        LinkingData(2, {0, 1}, {});
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("zero"), std::string::npos);
    }
}

TEST(LinkingData, RejectsMalformedPairs) {
    EXPECT_THROW(LinkingData(1, {1}, {}), std::invalid_argument);
    EXPECT_THROW(LinkingData(2, {1, 1, 1}, {}), std::invalid_argument);
    EXPECT_THROW(LinkingData(2, {1, 1}, {{2, 1, 1}}), std::invalid_argument);
    EXPECT_THROW(LinkingData(2, {1, 1}, {{1, 3, 1}}), std::invalid_argument);
    EXPECT_THROW(LinkingData(2, {1, 1}, {{1, 1, 1}}), std::invalid_argument);
    EXPECT_THROW(LinkingData(3, {1, 1, 1}, {{1, 2, 1}, {1, 2, 2}}), std::invalid_argument);
}

TEST(LinkingData, SymmetricWithZeroDefaults) {
    LinkingData d(3, {1, 1, 1}, {{1, 3, 4}});
    EXPECT_EQ(d.linking(1, 3), 4);
    EXPECT_EQ(d.linking(3, 1), 4);
    EXPECT_EQ(d.linking(1, 2), 0);
    EXPECT_EQ(d.linking(2, 2), 0);
}

TEST(LinkingMatrix, TwoComponentShape) {
    for (std::int64_t ell : {-3, 0, 1, 4})
        for (auto [z1, z2] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 3}, {-5, 2}}) {
            const auto c = linking_matrix(LinkingData::two_component(ell, z1, z2));
            EXPECT_EQ(c.entries(), ints({{-z2 * ell, z1 * ell}, {z2 * ell, -z1 * ell}}));
        }
}

TEST(LinkingMatrix, ThreeComponentShape) {
    const std::int64_t z1 = 2, z2 = -1, z3 = 3, l12 = 1, l13 = -2, l23 = 5;
    const auto c = linking_matrix(LinkingData(3, {z1, z2, z3}, {{1, 2, l12}, {1, 3, l13}, {2, 3, l23}}));
    EXPECT_EQ(c.entries(), ints({{-(z2 * l12 + z3 * l13), z1 * l12, z1 * l13},
                                 {z2 * l12, -(z1 * l12 + z3 * l23), z2 * l23},
                                 {z3 * l13, z3 * l23, -(z1 * l13 + z2 * l23)}}));
}

TEST(LinkingMatrix, ZeroLinkingGivesZeroMatrix) {
    const auto c = linking_matrix(LinkingData(4, {1, 2, 3, 5}, {}));
    for (const auto& row : c.entries())
        for (const auto& v : row) EXPECT_EQ(v, 0);
    EXPECT_EQ(rank_rational(c), 0u);
    EXPECT_EQ(rank_mod_p(c, 3), 0u);
}

TEST(LinkingMatrix, RowsSumToZero) {
    auto check = [](const LinkingData& d) {
        const auto c = linking_matrix(d);
        for (std::size_t j = 0; j < c.size(); ++j) {
            BigInt col = 0;
            for (std::size_t i = 0; i < c.size(); ++i) col += c(i, j);
            EXPECT_EQ(col, 0);
        }
    };
    for_each_three_component(check);
    check(LinkingData(4, {1, -2, 3, 5}, {{1, 2, 3}, {1, 4, -1}, {2, 3, 2}, {3, 4, 7}}));
}

TEST(Determinant, AgreesWithRationalElimination) {
    for_each_three_component([](const LinkingData& d) {
        const auto c = linking_matrix(d);
        EXPECT_EQ(determinant(c.entries()), oracle::rational_determinant(to_rational(c.entries())).get_num());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                EXPECT_EQ(determinant(c.minor(i, j)), oracle::rational_determinant(to_rational(c.minor(i, j))).get_num());
    });
    EXPECT_EQ(determinant(ints({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(determinant(ints({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}})), -6);
}

TEST(Rank, RationalAgreesWithOracle) {
    for_each_three_component([](const LinkingData& d) {
        const auto c = linking_matrix(d);
        EXPECT_EQ(rank_rational(c), oracle::rational_rank(to_rational(c.entries())));
    });
    EXPECT_EQ(rank_rational(LinkingMatrix(ints({{0, 2, 4}, {0, 1, 2}, {0, 0, 0}}))), 1u);
    EXPECT_EQ(rank_rational(LinkingMatrix(ints({{0, 2, 4}, {0, 1, 3}, {5, 0, 0}}))), 3u);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank_rational(linking_matrix(LinkingData::two_component(3))), 1u);
    EXPECT_EQ(rank_rational(linking_matrix(LinkingData::two_component(0))), 0u);
    EXPECT_EQ(rank_rational(linking_matrix(LinkingData(3, {1, 1, 1}, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}}))), 2u);
    EXPECT_EQ(rank_mod_p(linking_matrix(LinkingData::two_component(3)), 3), 0u);
    EXPECT_EQ(rank_mod_p(linking_matrix(LinkingData::two_component(3)), 5), 1u);
}

TEST(CValue, Examples) {
    const auto c33 = c_value(LinkingData::two_component(3), 3);
    EXPECT_FALSE(c33.zero);
    EXPECT_EQ(c33.exponent, 1u);
    EXPECT_EQ(c33.to_string(3), "1/3");
    for (unsigned long p : {3ul, 5ul, 7ul, 101ul}) EXPECT_TRUE(c_value(LinkingData::two_component(1), p).is_unit());
    EXPECT_TRUE(c_value(LinkingData::two_component(0), 5).zero);
    EXPECT_EQ(c_value(LinkingData::two_component(0), 5).to_string(5), "0");
    EXPECT_EQ(c_value(LinkingData::two_component(18), 3).to_string(3), "1/9");
}

TEST(Criterion, TwoComponentExamples) {
    const auto at3 = criterion(LinkingData::two_component(3), 3);
    EXPECT_FALSE(at3.mu0_lambda_min);
    EXPECT_EQ(at3.lambda_lower_bound, 1u);
    EXPECT_FALSE(at3.ord_exceeds);
    EXPECT_TRUE(criterion(LinkingData::two_component(3), 5).mu0_lambda_min);
    EXPECT_TRUE(criterion(LinkingData::two_component(0), 5).ord_exceeds);
}

TEST(Criterion, TwoComponentIndependentOfZ) {
    const std::vector<std::pair<std::int64_t, std::int64_t>> zs{{1, 1}, {1, 3}, {3, 1}, {2, 5}, {-7, 3}, {9, 10}, {5, 25 + 1}};
    for (std::int64_t ell = -12; ell <= 12; ++ell)
        for (auto [z1, z2] : zs)
            for (unsigned long p : {3ul, 5ul, 7ul}) {
                const auto c = criterion(LinkingData::two_component(ell, z1, z2), p);
                EXPECT_EQ(c.mu0_lambda_min, ell % static_cast<std::int64_t>(p) != 0)
                    << "ell=" << ell << " z=(" << z1 << "," << z2 << ") p=" << p;
                EXPECT_EQ(c.ord_exceeds, ell == 0);
            }
}

TEST(Criterion, ThreeWayEquivalence) {
    for_each_three_component([](const LinkingData& d) {
        for (unsigned long p : {3ul, 5ul, 7ul}) {
            const auto c = criterion(d, p);  // throws if c-value and rank disagree
            EXPECT_EQ(c.mu0_lambda_min, c.c_value.is_unit());
            EXPECT_EQ(c.mu0_lambda_min, c.rank_mod_p == 2u);
            EXPECT_EQ(c.ord_exceeds, c.c_value.zero);
        }
    });
}

TEST(Criterion, ThreeComponentMinorFormulas) {
    for_each_three_component([](const LinkingData& d) {
        const auto c = linking_matrix(d);
        const auto [first, second] = three_component_determinants(d);
        EXPECT_EQ(first, determinant(c.minor(2, 2)));
        EXPECT_EQ(second, determinant(c.minor(2, 0)));
        // first two rows independent iff one of these 2x2 minors (or the third) is nonzero;
        // the remaining minor of the top rows is dependent on these two via the zero row sum
        EXPECT_EQ(rank_rational(c) == 2u, sgn(first) != 0 || sgn(second) != 0 || sgn(determinant(c.minor(2, 1))) != 0);
    });
}

TEST(Criterion, ThreeComponentAllOnes) {
    const LinkingData d(3, {1, 1, 1}, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    const auto [first, second] = three_component_determinants(d);
    EXPECT_EQ(first, 3);
    EXPECT_EQ(second, 3);
    // every 2x2 minor of C is +-3 here, so p = 3 kills them all
    EXPECT_FALSE(criterion(d, 3).mu0_lambda_min);
    EXPECT_TRUE(criterion(d, 5).mu0_lambda_min);
    EXPECT_EQ(criterion(d, 3).c_value.to_string(3), "1/3");
    EXPECT_THROW((void)three_component_determinants(LinkingData::two_component(1)), std::invalid_argument);
}
