#include <gtest/gtest.h>

#include "coinv/demazure.hpp"

using namespace coinv;

namespace {

std::vector<Composition> compositions_up_to(int n, int total)
{
    std::vector<Composition> out;
    for (int t = 0; t <= total; ++t)
        for (auto& c : weak_compositions(t, n)) out.push_back(c);
    return out;
}

const Composition kFigure{0, 4, 0, 3, 3, 0, 2, 0, 0};

}  // namespace

TEST(SkipData, Examples)
{
    auto sd = skip_data({2, 3, 6, 8}, 8);
    EXPECT_EQ(sd.composition, (Composition{0, 2, 2, 0, 0, 4, 0, 5}));
    EXPECT_EQ(sd.monomial.str(), "x2^2*x3^2*x6^4*x8^5");
    EXPECT_EQ(skip_composition({1}, 4), (Composition{1, 0, 0, 0}));
    EXPECT_EQ(skip_composition({2, 3, 5}, 5), (Composition{0, 2, 2, 0, 3}));
    EXPECT_EQ(skip_composition({1, 3, 5, 6, 9}, 9), (Composition{1, 0, 2, 0, 3, 3, 0, 0, 5}));
    EXPECT_THROW(skip_composition({3, 2}, 4), std::invalid_argument);
    // support of x(S) is S
    for (auto& S : subsets_of_size(6, 3)) {
        auto m = skip_monomial(S, 6);
        std::vector<int> support;
        for (int i = 1; i <= 6; ++i)
            if (m[i]) support.push_back(i);
        EXPECT_EQ(support, S);
    }
}

TEST(SkipData, Decrement)
{
    EXPECT_EQ(decrement({1, 0, 2, 0, 3, 3, 0, 0, 5}), (Composition{0, 0, 1, 0, 2, 2, 0, 0, 4}));
    EXPECT_EQ(reverse_composition({1, 0, 2}), (Composition{2, 0, 1}));
}

TEST(Skyline, DisplayedFilling)
{
    SkylineFilling f{{3, 0, 1, 3}, {{4, 4, 3, 3}, {3}, {2, 2}, {1, 1, 1, 1}}};
    EXPECT_TRUE(is_ssk(f));
    auto all = enumerate_ssk({3, 0, 1, 3});
    bool found = false;
    for (auto& g : all) found = found || g.columns == f.columns;
    EXPECT_TRUE(found);
    for (auto& g : all) EXPECT_TRUE(is_ssk(g));
    auto empty = enumerate_ssk({0, 0, 0});
    EXPECT_EQ(empty.size(), 1u);
}

TEST(Skyline, BigFillingOfSkipShape)
{
    for (auto& S : subsets_of_size(5, 3)) {
        auto g = reverse_composition(skip_composition(S, 5));
        int n = 5;
        SkylineFilling big{g, std::vector<std::vector<int>>(n)};
        for (int c = 0; c < n; ++c) big.columns[c].assign(g[c] + 1, n - c);
        EXPECT_TRUE(is_ssk(big));
    }
}

TEST(Demazure, DominantIsMonomial)
{
    Composition g{3, 2, 2, 0};
    EXPECT_EQ(demazure_char(g), RationalPolynomial(Monomial(g)));
}

TEST(Demazure, AgreesWithDividedDifferences)
{
    for (int n = 1; n <= 4; ++n)
        for (auto& g : compositions_up_to(n, 5)) EXPECT_EQ(demazure_char(g), demazure_char_divided(g)) << n;
}

TEST(Demazure, SingleRowIsCompleteHomogeneous)
{
    int n = 5;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> vars;
        for (int j = i; j <= n; ++j) vars.push_back(j);
        EXPECT_EQ(reverse_skip_demazure({i}, n), homogeneous(i, vars, n));
    }
}

TEST(Demazure, ReverseVariables)
{
    auto f = parse_polynomial("x1^2*x2", 2);
    EXPECT_EQ(reverse_vars(f), parse_polynomial("x1*x2^2", 2));
    EXPECT_EQ(reverse_vars(reverse_vars(f)), f);
    EXPECT_EQ(reverse_vars(elementary(2, 4)), elementary(2, 4));
    EXPECT_EQ(reverse_skip_demazure({2, 3, 5}, 5).leading_monomial().str(), "x2^2*x3^2*x5^3");
}

TEST(Collections, FigureRB)
{
    EXPECT_TRUE(is_rb(kFigure, {{2, 5}, {5, 4}, {6, 1}, {8, 1}, {9, 1}}));
    EXPECT_FALSE(is_rb(kFigure, {{3, 1}, {7, 3}, {8, 1}, {9, 1}}));
    auto zero = rb_collections({3, 1, 2}, 0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].cells.empty());
    for (int d = 0; d <= 4; ++d)
        for (auto& rho : rb_collections(kFigure, d)) {
            EXPECT_EQ(static_cast<int>(rho.cells.size()), d);
            EXPECT_TRUE(is_rb(kFigure, rho.cells));
        }
}

TEST(Collections, FigureLL)
{
    EXPECT_TRUE(is_ll(kFigure, {{2, 4}, {7, 1}, {7, 2}}));
    EXPECT_FALSE(is_ll(kFigure, {{4, 3}, {7, 2}}));
    for (auto& la : ll_collections(kFigure)) EXPECT_TRUE(is_ll(kFigure, la.cells));
}

TEST(Identities, DualPieri)
{
    EXPECT_TRUE(dual_pieri({1, 0}, 1).equal());
    for (int n = 1; n <= 3; ++n)
        for (auto& g : compositions_up_to(n, 3))
            for (int d = 0; d <= n; ++d) {
                auto p = dual_pieri(g, d);
                EXPECT_EQ(p.lhs, p.rhs);
            }
    auto p0 = dual_pieri({2, 0, 1}, 0);
    EXPECT_EQ(p0.lhs, demazure_char({2, 0, 1}));
    EXPECT_TRUE(p0.equal());
}

TEST(Identities, DemazureIdentity)
{
    EXPECT_TRUE(demazure_identity_check({1, 2}, 2, 1).equal());
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto& S : subsets_of_size(n, n - k + 1)) {
                auto p = demazure_identity_check(S, n, k);
                EXPECT_EQ(p.lhs, p.rhs) << "n=" << n << " k=" << k;
            }
    EXPECT_THROW(demazure_identity_check({1}, 3, 2), std::invalid_argument);
}

TEST(Groebner, LeadingTermsAreSkipMonomials)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto& g : predicted_groebner_labeled(n, k, k)) {
                if (g.power_index) {
                    Monomial m(n);
                    m.set(g.power_index, k);
                    EXPECT_EQ(g.poly.leading_monomial(), m);
                } else {
                    EXPECT_EQ(g.poly.leading_monomial(), skip_monomial(g.S, n));
                    EXPECT_EQ(g.poly.leading_coeff(), 1);
                }
            }
}

TEST(Groebner, PredictedBasisIsGroebnerAndReduced)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            EXPECT_TRUE(is_groebner(predicted_groebner(n, k))) << n << "," << k;
            if (k < n) EXPECT_TRUE(is_reduced_gb(predicted_groebner(n, k))) << n << "," << k;
            EXPECT_TRUE(is_reduced_gb(reduced_groebner(n, k))) << n << "," << k;
        }
    for (int n = 2; n <= 4; ++n) EXPECT_FALSE(is_reduced_gb(predicted_groebner(n, n)));
}

TEST(Groebner, PrintedSixFourLabels)
{
    std::vector<Composition> want{{0, 0, 0, 1, 1, 1}, {0, 0, 2, 0, 1, 1}, {0, 3, 0, 0, 1, 1}, {0, 0, 2, 2, 0, 1},
                                  {0, 3, 0, 2, 0, 1}, {0, 3, 3, 0, 0, 1}, {0, 0, 2, 2, 2, 0}, {0, 3, 0, 2, 2, 0},
                                  {0, 3, 3, 0, 2, 0}, {0, 3, 3, 3, 0, 0}};
    std::vector<Composition> got;
    int powers = 0;
    for (auto& g : reduced_groebner_labeled(6, 4)) {
        if (g.power_index) ++powers;
        else got.push_back(g.label);
    }
    EXPECT_EQ(powers, 6);
    EXPECT_EQ(got, want);
    auto G = reduced_groebner(6, 4);
    EXPECT_EQ(reduce_gb(G).size(), G.size());
    EXPECT_TRUE(is_reduced_gb(G));
}
