#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "skewclass/expansion.hpp"
#include "skewclass/verify.hpp"

using namespace skewclass;

namespace {

BoxDottedComposition bd(const char* text, int m = 2) { return parse_diagram(text, m); }

HExpansion poly(std::initializer_list<std::pair<std::vector<int>, Coefficient>> terms)
{
    HExpansion e(Partition(terms.begin()->first).size());
    for (const auto& [p, c] : terms)
        e.add(Partition(p), c);
    return e;
}

} // namespace

TEST(HExpansion, ArithmeticAndHomogeneity)
{
    auto e = HExpansion::monomial(Partition({2, 1}), 3);
    EXPECT_THROW(e.add(Partition({2}), 1), std::invalid_argument);
    e.add(Partition({2, 1}), -3);
    EXPECT_TRUE(e.is_zero());
    EXPECT_EQ(e, HExpansion(7));

    const auto a = HExpansion::monomial(Partition({1}), 1);
    const auto sq = a * a;
    EXPECT_EQ(sq.coeff(Partition({1, 1})), 1);
    EXPECT_EQ(a.times_h({3, 0}).coeff(Partition({3, 1})), 1);
    EXPECT_TRUE(a.times_h({-1}).is_zero());
}

TEST(HExpansion, OverflowIsReported)
{
    auto big = HExpansion::monomial(Partition({1}), std::numeric_limits<Coefficient>::max());
    EXPECT_THROW(big.add(Partition({1}), 1), std::overflow_error);
    EXPECT_THROW((void)big.scaled(2), std::overflow_error);
}

TEST(Expand, WorkedTwoDotExample)
{
    const auto expected = poly({{{3, 3, 3, 1}, 1},
                                {{5, 3, 1, 1}, -2},
                                {{4, 3, 3}, -1},
                                {{7, 1, 1, 1}, 1},
                                {{8, 1, 1}, -1},
                                {{5, 4, 1}, 1},
                                {{6, 3, 1}, 1}});
    const auto d = bd("3|3|3,1");
    EXPECT_EQ(expand_recursive(d), expected);
    EXPECT_EQ(expand_poset(d), expected);
    EXPECT_EQ(expand_determinant(to_skew_shape(d)), expected);
    EXPECT_EQ(expected.term_count(), 7u);
}

TEST(Expand, CancellationExample)
{
    const auto expected = poly({{{3, 2, 2, 1}, 1},
                                {{3, 3, 2}, -1},
                                {{4, 2, 1, 1}, -1},
                                {{5, 3}, 1},
                                {{6, 1, 1}, 1},
                                {{7, 1}, -1}});
    EXPECT_EQ(expand_recursive(bd("1,2,2|3")), expected);
    EXPECT_EQ(expand_recursive(bd("1,2|3,2")), expected);
    EXPECT_EQ(expand_poset(bd("1,2,2|3")), expected);
    EXPECT_EQ(expand_determinant(to_skew_shape(bd("1,2|3,2"))), expected);
    EXPECT_TRUE(equivalent(bd("1,2,2|3"), bd("1,2|3,2")));
    EXPECT_FALSE(equivalent(bd("1,2,2|3"), bd("2,1,2|3")));
}

TEST(Expand, SingleRowsAndRibbons)
{
    EXPECT_EQ(expand_recursive(bd("4")), HExpansion::monomial(Partition({4}), 1));
    EXPECT_EQ(expand_recursive(bd("2|2")), poly({{{2, 2}, 1}, {{3, 1}, -1}}));
    EXPECT_EQ(expand_recursive(bd("1,1")), poly({{{1, 1}, 1}, {{2}, -1}}));
}

TEST(Expand, MatchesPermutationDeterminant)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 2);
        const auto d = oracle::random_diagram(rng, m, 6, 4);
        const auto [lambda, mu] = oracle::cells_to_lambda_mu(
            oracle::diagram_cells(d.underlying().parts(), d.dots(), m));
        EXPECT_EQ(oracle::to_poly(expand_recursive(d)), oracle::jacobi_trudi(lambda, mu))
            << format_diagram(d);
    }
}

TEST(Expand, ThreeRoutesAgreeOnSmallUniverse)
{
    for (int m : {2, 3})
        for (int n = 2 * m; n <= 10; ++n)
            for (const auto& d : enumerate_all(n, m)) {
                const auto r = expand_recursive(d.diagram());
                ASSERT_EQ(r, expand_poset(d.diagram())) << format_diagram(d);
                ASSERT_EQ(r, expand_determinant(to_skew_shape(d.diagram()))) << format_diagram(d);
            }
}

TEST(Expand, AntipodalInvariance)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 3);
        const auto d = oracle::random_diagram(rng, m, 7, 5);
        EXPECT_EQ(expand_recursive(d), expand_recursive(antipodal(d))) << format_diagram(d);
    }
}

TEST(Expand, DifferentMIsAnError)
{
    EXPECT_THROW((void)equivalent(bd("3|3", 2), bd("3|3", 3)), std::invalid_argument);
    EXPECT_FALSE(equivalent(bd("3|3", 2), bd("3|4", 2)));
}

TEST(Format, TermsInDecreasingLexOrder)
{
    EXPECT_EQ(format_expansion(expand_recursive(bd("3|3|3,1"))),
              "-h8*h1^2 + h7*h1^3 + h6*h3*h1 + h5*h4*h1 - 2*h5*h3*h1^2 - h4*h3^2 + h3^3*h1");
    EXPECT_EQ(format_expansion(HExpansion(3)), "0");
    EXPECT_EQ(format_expansion(HExpansion::one()), "1");
}
