#include <gtest/gtest.h>

#include <set>

#include "coinv/quotient.hpp"

using namespace coinv;

namespace {

Monomial M(std::vector<int> e) { return Monomial(e); }

std::set<std::string> names(const std::vector<Monomial>& ms)
{
    std::set<std::string> s;
    for (auto& m : ms) s.insert(m.str());
    return s;
}

// Brute force: all exponent vectors below k that no skip monomial divides.
std::set<Monomial> nonskip_oracle(int n, int k, int s)
{
    std::set<Monomial> out;
    std::vector<std::vector<int>> skips;
    int universe = n;
    for (auto& S : subsets_of_size(universe, n - s + 1)) skips.push_back(S);
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            Monomial m(e);
            for (auto& S : skips)
                if (skip_monomial(S, n).divides(m)) return;
            out.insert(m);
            return;
        }
        for (int v = 0; v < k; ++v) {
            e[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

QPoly coinv_series(int n, int k)
{
    QPoly r;
    for (auto& s : enumerate_osps(n, k)) r += QPoly::monomial(coinv_osp(s));
    return r;
}

}  // namespace

TEST(Nonskip, SmallCases)
{
    EXPECT_EQ(names(nonskip_monomials(3, 2, 2)), (std::set<std::string>{"x2*x3", "x1*x3", "x1", "x2", "x3", "1"}));
    for (int n = 1; n <= 5; ++n) {
        auto m = nonskip_monomials(n, 1, 1);
        ASSERT_EQ(m.size(), 1u);
        EXPECT_EQ(m[0].degree(), 0);
    }
    EXPECT_EQ(static_cast<long long>(nonskip_monomials(4, 3, 2).size()), difference_count(4, 3, 2));
}

TEST(Nonskip, MatchesBruteForce)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int s = 1; s <= k; ++s) {
                auto got = nonskip_monomials(n, k, s);
                EXPECT_EQ(std::set<Monomial>(got.begin(), got.end()), nonskip_oracle(n, k, s));
                EXPECT_EQ(static_cast<long long>(got.size()), difference_count(n, k, s));
            }
}

TEST(Artin, EqualsNonskip)
{
    EXPECT_EQ(names(artin_monomials(3, 2)), (std::set<std::string>{"x2*x3", "x1*x3", "x1", "x2", "x3", "1"}));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            auto a = artin_monomials(n, k), m = nonskip_monomials(n, k, k);
            EXPECT_EQ(std::set<Monomial>(a.begin(), a.end()), std::set<Monomial>(m.begin(), m.end()));
        }
    // classical sub-staircase monomials
    EXPECT_EQ(artin_monomials(4, 4).size(), 24u);
    for (auto& m : artin_monomials(4, 4))
        for (int i = 1; i <= 4; ++i) EXPECT_LT(m[i], i);
}

TEST(GarsiaStanton, Examples)
{
    EXPECT_EQ(gs_monomial({3, 4, 2, 5, 6, 1, 8, 7}), M({1, 2, 3, 3, 2, 2, 0, 1}));
    std::set<std::string> four;
    for (auto& e : gs_entries(6, 3))
        if (e.pi == Word{3, 5, 6, 1, 2, 4}) four.insert(e.monomial.str());
    EXPECT_EQ(four, (std::set<std::string>{"x3*x5*x6", "x3^2*x5*x6", "x3^2*x5^2*x6", "x3^2*x5^2*x6^2"}));
    EXPECT_EQ(gs_monomials(4, 4).size(), 24u);
}

TEST(GarsiaStanton, CountAndDegrees)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            auto gs = gs_monomials(n, k);
            EXPECT_EQ(static_cast<long long>(gs.size()), factorial(k) * stirling2(n, k));
            EXPECT_EQ(degree_series(gs), coinv_series(n, k)) << n << "," << k;
        }
}

TEST(GarsiaStanton, FullRankModuloIdeal)
{
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            Quotient q(n, k);
            EXPECT_EQ(rank_series(q, gs_monomials(n, k)), hilbert_series(n, k)) << n << "," << k;
        }
}

TEST(Hilbert, Series)
{
    EXPECT_EQ(hilbert_series(3, 2, 2), QPoly(std::vector<long long>{1, 3, 2}));
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(hilbert_series(n, 1, 1), QPoly(1));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) EXPECT_EQ(hilbert_series(n, k), mahonian_target(n, k));
    EXPECT_EQ(hilbert_series(4, 3, 2), hilbert_series(4, 3, 3) + hilbert_series(4, 2, 2).shift(2));
}

TEST(Hilbert, PascalRecursion)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 2; k <= n; ++k)
            for (int s = 1; s < k; ++s)
                EXPECT_EQ(hilbert_series(n, k, s), hilbert_series(n, k, s + 1) + hilbert_series(n, k - 1, s).shift(n - s));
}

TEST(Hilbert, PinnedPartitionsCount)
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int s = 0; s <= k; ++s)
                EXPECT_EQ(static_cast<long long>(enumerate_pinned_osps(n, k, s).size()), difference_count(n, k, s));
}

TEST(Bijection, WorkedExampleStepByStep)
{
    auto sigma = OrderedSetPartition::parse("5|146|8|23|7");
    auto steps = psi_trace(sigma);
    ASSERT_EQ(steps.size(), 8u);
    std::vector<std::string> want{"1", "x2", "x2*x3", "x2*x3", "x2^2*x3^2", "x2^2*x3^2*x6",
                                  "x1*x2^3*x3^3*x6*x7^3", "x1^2*x2^4*x3^4*x6*x7^3*x8^2"};
    std::vector<bool> bars{false, true, false, false, true, false, true, true};
    std::vector<std::vector<int>> skip_sets{{}, {}, {}, {}, {2, 3}, {}, {1, 2, 3}, {1, 2, 3}};
    for (int i = 1; i < 8; ++i) {
        EXPECT_EQ(steps[i].letter, i + 1);
        EXPECT_EQ(steps[i].monomial.str(), want[i]) << "letter " << i + 1;
        EXPECT_EQ(steps[i].bar, bars[i]) << "letter " << i + 1;
        if (bars[i]) EXPECT_EQ(steps[i].S, skip_sets[i]) << "letter " << i + 1;
    }
    EXPECT_EQ(steps[0].monomial.degree(), 0);
    EXPECT_EQ(psi(sigma), M({2, 4, 4, 0, 0, 1, 3, 2}));
    EXPECT_EQ(phi(M({2, 4, 4, 0, 0, 1, 3, 2}), 5), sigma);
}

TEST(Bijection, SmallCases)
{
    EXPECT_EQ(psi(OrderedSetPartition::parse("1")).degree(), 0);
    EXPECT_EQ(psi(OrderedSetPartition::parse("1|23")), M({0, 1, 1}));
    EXPECT_EQ(phi(M({0}), 1), OrderedSetPartition::parse("1"));
    EXPECT_THROW(phi(M({2, 0}), 2), std::invalid_argument);
}

TEST(Bijection, DegreeAndRoundTrip)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            std::set<Monomial> image;
            for (auto& s : enumerate_osps(n, k)) {
                auto m = psi(s);
                EXPECT_EQ(m.degree(), coinv_osp(s));
                EXPECT_TRUE(is_nonskip(m, k, k));
                EXPECT_EQ(phi(m, k), s);
                image.insert(m);
            }
            auto all = nonskip_monomials(n, k, k);
            EXPECT_EQ(image, std::set<Monomial>(all.begin(), all.end()));
        }
    for (auto& m : nonskip_monomials(4, 2, 2)) EXPECT_EQ(psi(phi(m, 2)), m);
}

TEST(Bijection, CanonicalSkipSet)
{
    EXPECT_EQ(canonical_skip_set(M({3, 0, 0, 2, 3, 3, 0}), 4), (std::vector<int>{1, 5, 6}));
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            std::vector<int> first;
            for (int i = 1; i <= n - k; ++i) first.push_back(i);
            EXPECT_EQ(canonical_skip_set(Monomial(n), k), first);
        }
}

TEST(Straightening, DisplayedMonomial)
{
    auto sd = straightening_data(M({3, 4, 0, 2, 2, 0, 0}));
    EXPECT_EQ(sd.lambda, (Partition{4, 3, 2, 2}));
    EXPECT_EQ(sd.pi, (Word{2, 1, 4, 5, 3, 6, 7}));
    EXPECT_EQ(sd.d, (std::vector<int>{2, 1, 1, 1, 0, 0, 0}));
    EXPECT_EQ(sd.mu, (Partition{4, 2}));
    EXPECT_TRUE(straighten_check(M({3, 4, 0, 2, 2, 0, 0})));
}

TEST(Straightening, GsMonomialsAreFixed)
{
    for (auto& pi : permutations(4)) {
        auto m = gs_monomial(pi);
        auto sd = straightening_data(m);
        EXPECT_TRUE(sd.mu.empty());
        EXPECT_TRUE(straightening_remainder(m).is_zero());
    }
}

TEST(Straightening, Exhaustive)
{
    std::vector<int> e(4, 0);
    for (e[0] = 0; e[0] <= 4; ++e[0])
        for (e[1] = 0; e[1] <= 4 - e[0]; ++e[1])
            for (e[2] = 0; e[2] <= 4 - e[0] - e[1]; ++e[2])
                for (e[3] = 0; e[3] <= 4 - e[0] - e[1] - e[2]; ++e[3]) EXPECT_TRUE(straighten_check(Monomial(e)));
}

TEST(Character, ThreeTwo)
{
    auto ch = graded_character(3, 2, 2);
    EXPECT_TRUE(ch.consistent);
    EXPECT_EQ(ch.values.at({1, 1, 1}), hilbert_series(3, 2));
    EXPECT_EQ(ch.values.at({1, 1, 1}).at_one(), 6);
    // degree 0 is the trivial representation
    for (auto& [la, v] : ch.values) EXPECT_EQ(v[0], 1);
}

TEST(Antisymmetrization, Identity)
{
    EXPECT_EQ(antisymmetrize_hilbert(3, 2, 1), q_binomial(2, 1) * hilbert_series(2, 2, 1));
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(antisymmetrize_hilbert(n, n, n), QPoly::monomial(n * (n - 1) / 2));
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j) {
                auto lhs = antisymmetrize_hilbert(n, k, j);
                EXPECT_EQ(lhs, antisymmetrize_target(n, k, j)) << n << "," << k << "," << j;
                if (j <= k) EXPECT_EQ(lhs.at_one(), binomial(k, j) * difference_count(n - j, k, k - j));
            }
    }
}
