#include <gtest/gtest.h>

#include "coinv/delta.hpp"

using namespace coinv;

namespace {

QPoly Q(std::vector<long long> c) { return QPoly(std::move(c)); }

SymFunc schur(int d, std::vector<std::pair<Partition, QPoly>> terms)
{
    SymFunc f(Basis::schur, d);
    for (auto& [la, c] : terms) f.add(la, c);
    return f;
}

const SymFunc kThreeTwo = schur(3, {{{3}, Q({1, 1})}, {{2, 1}, Q({0, 1, 1})}});

}  // namespace

TEST(DeltaSide, ThreeTwo)
{
    EXPECT_EQ(c_nk(3, 2), schur(3, {{{2, 1}, Q({1, 1})}, {{1, 1, 1}, Q({0, 1, 1})}}));
    EXPECT_EQ(d_nk(3, 2), kThreeTwo);
    EXPECT_EQ(delta_reversal_degree(3, 2), 2);
    EXPECT_EQ(d_nk_fundamental(3, 2), kThreeTwo);
}

TEST(DeltaSide, EdgeCases)
{
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(d_nk(n, 1), schur(n, {{{n}, 1}}));
        SymFunc reg(Basis::schur, n);
        for (auto& la : partitions_of(n)) reg.add(la, static_cast<long long>(enumerate_syt(la).size()));
        EXPECT_EQ(d_nk(n, n).at_q_one(), reg);
    }
    EXPECT_THROW(d_nk(2, 3), std::invalid_argument);
}

TEST(TableauRoute, Examples)
{
    EXPECT_EQ(grfrob_syt(3, 2), kThreeTwo);
    EXPECT_EQ(grfrob_syt(4, 2), schur(4, {{{4}, q_binomial(3, 2)}, {{3, 1}, Q({0, 1, 1, 1})}, {{2, 2}, Q({0, 0, 1})}}));
    // k = n is the Lusztig-Stanley sum
    for (int n = 1; n <= 5; ++n) {
        SymFunc want(Basis::schur, n);
        for (auto& t : enumerate_syt(n)) want.add(t.shape(), QPoly::monomial(t.maj()));
        EXPECT_EQ(grfrob_syt(n, n), want);
    }
}

TEST(HallLittlewoodRoute, SixThree)
{
    SymFunc sum(Basis::schur, 6);
    sum += qprime({4, 1, 1}).scaled(q_multinomial(3, {2, 1}));
    sum += qprime({3, 2, 1}).scaled(q_multinomial(3, {1, 1, 1}).shift(1));
    sum += qprime({2, 2, 2}).scaled(q_multinomial(3, {3}).shift(3));
    auto reversed = rev_q_coeffs(sum, delta_reversal_degree(6, 3));
    EXPECT_EQ(grfrob_hl(6, 3), reversed);
    EXPECT_EQ(grfrob_syt(6, 3), reversed);
}

TEST(HallLittlewoodRoute, SmallCases)
{
    EXPECT_EQ(grfrob_hl(3, 2), d_nk(3, 2));
    auto q21 = rev_q_coeffs(qprime({2, 1}).scaled(q_multinomial(2, {1, 1})), 2);
    EXPECT_EQ(q21, d_nk(3, 2));
}

TEST(HallLittlewoodRoute, UnreversedLusztigStanley)
{
    // Q'_{(1^n)} with charge is the reversal of grFrob(R_n); they coincide only for n = 1
    for (int n = 1; n <= 5; ++n) {
        auto qp = qprime(Partition(n, 1));
        EXPECT_EQ(rev_q_coeffs(qp, n * (n - 1) / 2), grfrob_syt(n, n));
        if (n == 1) EXPECT_EQ(qp, grfrob_syt(n, n));
        else EXPECT_NE(qp, grfrob_syt(n, n));
    }
}

TEST(Routes, AllAgreeUpToFive)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            auto r = delta_result(n, k);
            EXPECT_TRUE(r.consistent) << n << "," << k;
            EXPECT_TRUE(r.all_agree()) << n << "," << k;
            EXPECT_EQ(r.routes.size(), route_names().size());
            EXPECT_EQ(r.d_nk.at_q_one(), convert(ungraded_frob(n, k), Basis::schur));
            EXPECT_TRUE(r.d_nk.nonnegative());
        }
}

TEST(Routes, BruteForceThreeTwo)
{
    auto bf = grfrob_bruteforce(3, 2);
    EXPECT_TRUE(bf.consistent);
    EXPECT_EQ(bf.image, kThreeTwo);
    bool ok = false;
    EXPECT_EQ(compute_route("syt", 3, 2, &ok), kThreeTwo);
    EXPECT_THROW(compute_route("nonsense", 3, 2), std::invalid_argument);
}

TEST(Routes, SixAtFormulaLevel)
{
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(d_nk(6, k), grfrob_syt(6, k)) << k;
        EXPECT_EQ(grfrob_hl(6, k), grfrob_syt(6, k)) << k;
    }
}

TEST(Ungraded, Examples)
{
    SymFunc h21(Basis::homogeneous, 3);
    h21.add({2, 1}, 2);
    EXPECT_EQ(ungraded_frob(3, 2), h21);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(ungraded_frob(n, n), basis_element(Basis::homogeneous, Partition(n, 1)));
        EXPECT_EQ(ungraded_frob(n, 1), basis_element(Basis::homogeneous, {n}));
    }
}

TEST(Recursion, ElementaryPerp)
{
    EXPECT_TRUE(e_perp_recursion_check(3, 2, 1).equal());
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j) {
                auto p = e_perp_recursion_check(n, k, j);
                EXPECT_EQ(p.lhs, p.rhs) << n << "," << k << "," << j;
            }
    // j = n: only the sign component survives
    for (int n = 1; n <= 5; ++n) {
        auto p = e_perp_recursion_check(n, n, n);
        EXPECT_EQ(p.lhs, basis_element(Basis::schur, {}, QPoly::monomial(n * (n - 1) / 2)));
    }
}
