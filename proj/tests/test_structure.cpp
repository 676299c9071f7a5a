#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "skewclass/structure.hpp"
#include "skewclass/verify.hpp"

using namespace skewclass;

namespace {

OneDotDiagram od(const char* text, int m = 2) { return parse_one_dot(text, m); }

std::string signs(const SignTable& t)
{
    std::string out;
    for (int x = 1; x <= t.domain_max(); ++x)
        out += sign_char(t.sign(x));
    return out;
}

std::string labels(const ClassTaxonomy& tax)
{
    std::string out;
    for (const auto& [min, l] : tax.labels)
        out += std::to_string(min) + label_char(l) + ' ';
    return out;
}

} // namespace

TEST(OneDot, Validation)
{
    EXPECT_THROW(od("3"), std::invalid_argument);
    EXPECT_THROW(od("3|3|3"), std::invalid_argument);
    EXPECT_THROW(OneDotDiagram(Composition({1}), Composition({3}), 2), std::invalid_argument);
    EXPECT_EQ(od("1,2,2|3").antipodal(), od("3|2,2,1"));
    EXPECT_EQ(r_value(od("3,1,4,1,2|3,1,2")), 5);
}

TEST(SignTable, WorkedExample)
{
    const auto d = od("1,3,2|4,2,1,2,2");
    const auto t = sign_function(d);
    EXPECT_EQ(signs(t), "+--+----+-++-+-");
    const std::vector<int> types{1, 1, 0, 2, 1, 0, 1, 0, 1, 0, 1, 2, 0, 1, 1};
    for (int x = 1; x <= 15; ++x)
        EXPECT_EQ(element_type(t, x), types[static_cast<std::size_t>(x - 1)]) << x;
    EXPECT_THROW((void)t.sign(0), std::out_of_range);
    EXPECT_THROW((void)t.sign(16), std::out_of_range);
}

TEST(SignTable, SecondExample)
{
    EXPECT_EQ(signs(sign_function(od("3,1,4,1,2|3,1,2"))), "--++---++---++-");
}

TEST(SignTable, FastPathMatchesDefinitionAndOracle)
{
    for (int m : {2, 3, 4})
        for (int n = 2 * m; n <= 11; ++n)
            for (const auto& d : enumerate_all(n, m)) {
                const auto fast = sign_function(d);
                ASSERT_EQ(fast, sign_function_by_coarsenings(d)) << format_diagram(d);
                const auto ref = oracle::signs_by_merging(d.alpha().parts(), d.beta().parts(), m);
                for (int x = 1; x <= fast.domain_max(); ++x)
                    ASSERT_EQ(fast.plus(x), ref[static_cast<std::size_t>(x)]) << format_diagram(d);
            }
}

TEST(SignTable, ForcedMinusAndRecovery)
{
    for (int m : {2, 3})
        for (int n = 2 * m; n <= 12; ++n)
            for (const auto& d : enumerate_all(n, m)) {
                const auto t = sign_function(d);
                const int a = d.size_alpha(), b = d.size_beta();
                for (int x = a - m + 1; x <= a; ++x)
                    ASSERT_FALSE(t.plus(x));
                std::set<int> s, u;
                for (int x = 1; x < a; ++x)
                    if (t.plus(x))
                        s.insert(x);
                for (int x = 1; x < b; ++x)
                    if (t.plus(a - m + 1 + x))
                        u.insert(x);
                ASSERT_EQ(comp_of(s, a), d.alpha());
                ASSERT_EQ(comp_of(u, b), d.beta());
            }
}

TEST(IntClasses, WorkedExample)
{
    const auto c = int_classes(od("1,3,2|4,2,1,2,2"));
    EXPECT_EQ(c.r, 5);
    const std::vector<std::vector<int>> expected{
        {1, 5, 6, 10, 11, 15}, {2, 4, 7, 9, 12, 14}, {3, 8, 13}};
    EXPECT_EQ(c.blocks, expected);
    EXPECT_EQ(c.representative(14), 2);
}

TEST(IntClasses, CongruenceDescription)
{
    for (int m : {2, 3, 4})
        for (int n = 2 * m; n <= 13; ++n)
            for (const auto& d : enumerate_all(n, m)) {
                const auto c = int_classes(d);
                const int r = c.r;
                auto mod = [r](int v) { return ((v % r) + r) % r; };
                for (int i = 1; i <= c.domain_max; ++i)
                    for (int j = 1; j <= c.domain_max; ++j) {
                        const bool same = c.block_index[i - 1] == c.block_index[j - 1];
                        const bool predicted = mod(i - j) == 0 || mod(i - (m - 1 - j)) == 0;
                        ASSERT_EQ(same, predicted) << format_diagram(d) << " " << i << " " << j;
                    }
                for (const auto& block : c.blocks) {
                    const int i = block.front();
                    const auto low = std::count_if(block.begin(), block.end(),
                                                   [r](int x) { return x <= r; });
                    const int expected = mod(i - (m - 1 - i)) == 0 ? 1 : 2;
                    if (c.domain_max >= r) {
                        ASSERT_EQ(low, expected) << format_diagram(d) << " class of " << i;
                    }
                }
            }
}

TEST(Classify, UnequalExamples)
{
    EXPECT_EQ(labels(classify(od("1,3,2|4,2,1,2,2"))), "1A 2B 3C ");
    EXPECT_EQ(labels(classify(od("3,1,2|3,1,4,1,2"))), "1C 2A 3C ");
    EXPECT_EQ(labels(classify(od("1,2|3,2"))), "1A ");
    EXPECT_EQ(classify(od("1,2|3,2")).size_case, ClassTaxonomy::Case::unequal);
}

TEST(Classify, EqualExamples)
{
    const auto tax = classify(od("1,3|2,2"));
    EXPECT_EQ(tax.size_case, ClassTaxonomy::Case::equal);
    EXPECT_EQ(labels(tax), "1B 2B ");
    EXPECT_EQ(labels(classify(od("1,2|2,1"))), "1C ");
    EXPECT_EQ(labels(classify(od("4|4", 3))), "1C 2C ");
}

TEST(Canonical, Examples)
{
    EXPECT_TRUE(is_canonical(od("1,2|3,2")));
    EXPECT_FALSE(is_canonical(od("1,2,2|3")));
    EXPECT_TRUE(is_canonical(od("3|2,2,1")));
    EXPECT_TRUE(is_canonical(od("1,3|2,2")));
    EXPECT_FALSE(is_canonical(od("2,2|3,1")));
    EXPECT_TRUE(is_canonical(od("1,2|2,1")));
}

TEST(Canonical, ExactlyOneOfPairUnlessSelfAntipodal)
{
    for (int m : {2, 3})
        for (int n = 2 * m; n <= 12; ++n)
            for (const auto& d : enumerate_all(n, m)) {
                const auto e = d.antipodal();
                if (d == e)
                    ASSERT_TRUE(is_canonical(d)) << format_diagram(d);
                else
                    ASSERT_NE(is_canonical(d), is_canonical(e)) << format_diagram(d);
            }
}

TEST(Classify, EqualSizeSelfAntipodalIffNoTypeOne)
{
    for (int m : {2, 3})
        for (int n = 2 * m; n <= 12; n += 2)
            for (const auto& d : enumerate_all(n, m)) {
                if (d.size_alpha() != d.size_beta())
                    continue;
                const auto t = sign_function(d);
                bool any_one = false;
                for (int x = 1; x <= t.domain_max(); ++x)
                    any_one |= element_type(t, x) == 1;
                ASSERT_EQ(any_one, d != d.antipodal()) << format_diagram(d);
            }
}
