#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coinv/combinat.hpp"
#include "coinv/qseries.hpp"

using namespace coinv;

namespace {

OrderedSetPartition osp(const char* s) { return OrderedSetPartition::parse(s); }

// Independent inv: pairs i < j with i's block strictly right of j's block,
// i the minimum of its block.
int inv_oracle(const OrderedSetPartition& s)
{
    int c = 0;
    for (int i = 1; i <= s.n(); ++i)
        for (int j = i + 1; j <= s.n(); ++j) {
            int bi = s.block_of(i), bj = s.block_of(j);
            if (bi > bj && s.blocks()[bi].front() == i) ++c;
        }
    return c;
}

// maj summed ascent by ascent: each ascent a of the starred word counts
// a minus the number of stars at or before a.
int maj_oracle(const OrderedSetPartition& s)
{
    Word w;
    std::set<int> stars;
    for (auto& b : s.blocks())
        for (std::size_t j = 0; j < b.size(); ++j) {
            w.push_back(b[j]);
            if (j + 1 < b.size()) stars.insert(static_cast<int>(w.size()));
        }
    int m = 0;
    for (int a = 1; a < static_cast<int>(w.size()); ++a)
        if (w[a - 1] < w[a]) m += a - static_cast<int>(std::distance(stars.begin(), stars.upper_bound(a)));
    return m;
}

QPoly distribution(const std::vector<OrderedSetPartition>& all, int (*stat)(const OrderedSetPartition&))
{
    QPoly r;
    for (auto& s : all) r += QPoly::monomial(stat(s));
    return r;
}

}  // namespace

TEST(Counting, SmallValues)
{
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(stirling2(6, 3), 90);
}

TEST(OrderedSetPartitions, Enumeration)
{
    EXPECT_EQ(enumerate_osps(3, 2).size(), 6u);
    EXPECT_EQ(enumerate_osps(4, 2).size(), 14u);
    auto one = enumerate_osps(1, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].str(), "1");
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            auto all = enumerate_osps(n, k);
            EXPECT_EQ(static_cast<long long>(all.size()), factorial(k) * stirling2(n, k));
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
            EXPECT_EQ(std::set<OrderedSetPartition>(all.begin(), all.end()).size(), all.size());
        }
    EXPECT_THROW(enumerate_osps(2, 3), std::invalid_argument);
}

TEST(OrderedSetPartitions, ParseAndPrint)
{
    EXPECT_EQ(osp("24|6|135").str(), "24|6|135");
    EXPECT_EQ(osp("(42|6|531)").str(), "24|6|135");
    EXPECT_EQ(osp("1,10|2,3,4,5,6,7,8,9").str(), "1,10|2,3,4,5,6,7,8,9");
    EXPECT_THROW(osp("12|x"), std::invalid_argument);
    EXPECT_THROW(osp("12||3"), std::invalid_argument);
    EXPECT_THROW(osp("12|4"), std::invalid_argument);
}

TEST(Statistics, InvExamples)
{
    EXPECT_EQ(inv_osp(osp("24|6|135")), 3);
    EXPECT_EQ(inv_osp(osp("1|2|3|4")), 0);
    // unique maximizer (k..n | k-1 | ... | 1)
    EXPECT_EQ(inv_osp(osp("3456|2|1")), osp_max_stat(6, 3));
    EXPECT_EQ(osp_max_stat(6, 3), 9);
}

TEST(Statistics, CoinvExamples)
{
    EXPECT_EQ(coinv_pairs(osp("45|167|23")), 5);
    EXPECT_EQ(coinv_osp(osp("45|167|23")), 5);
    EXPECT_EQ(coinv_osp(osp("23|1")), 0);
    EXPECT_EQ(coinv_osp(osp("12|3")), 2);
}

TEST(Statistics, MajExamples)
{
    EXPECT_EQ(maj_osp(osp("24|6|135")), 5);
    EXPECT_EQ(comaj_osp(osp("24|6|135")), 4);
    EXPECT_EQ(comaj_osp(osp("245|1|3|6")), 7);
    EXPECT_EQ(maj_osp(osp("1")), 0);
    // 1 2 ... (k-1) k*(k+1)*...*n maximizes maj
    EXPECT_EQ(maj_osp(osp("1|2|3456")), osp_max_stat(6, 3));
    EXPECT_EQ(comaj_osp(osp("1|2|3456")), 0);
}

TEST(Statistics, AgreeWithOracles)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto& s : enumerate_osps(n, k)) {
                ASSERT_EQ(inv_osp(s), inv_oracle(s)) << s.str();
                ASSERT_EQ(maj_osp(s), maj_oracle(s)) << s.str();
                ASSERT_EQ(coinv_pairs(s), coinv_osp(s)) << s.str();
            }
}

TEST(Statistics, UniqueMaximizers)
{
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            int top = osp_max_stat(n, k), inv_hits = 0, maj_hits = 0;
            for (auto& s : enumerate_osps(n, k)) {
                inv_hits += inv_osp(s) == top;
                maj_hits += maj_osp(s) == top;
            }
            EXPECT_EQ(inv_hits, 1);
            EXPECT_EQ(maj_hits, 1);
        }
}

TEST(Statistics, MahonianEquidistribution)
{
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            auto all = enumerate_osps(n, k);
            QPoly target = q_factorial(k) * q_stirling(n, k);
            EXPECT_EQ(distribution(all, inv_osp), target) << n << "," << k;
            EXPECT_EQ(distribution(all, maj_osp), target) << n << "," << k;
        }
}

TEST(StarredPermutations, Encoding)
{
    auto sp = osp_stars(osp("24|6|135"));
    EXPECT_EQ(sp.perm, (Word{2, 4, 6, 1, 3, 5}));
    EXPECT_EQ(sp.stars, (std::vector<int>{1, 4, 5}));
    EXPECT_EQ(osp_from_stars({2, 4, 6, 1, 3, 5}, {1, 4, 5}), osp("24|6|135"));

    auto sp2 = osp_stars(osp("5|146|23|7"));
    EXPECT_EQ(sp2.perm, (Word{5, 1, 4, 6, 2, 3, 7}));
    EXPECT_EQ(sp2.stars, (std::vector<int>{2, 3, 5}));

    auto id = osp_stars(osp("1|2|3"));
    EXPECT_EQ(id.perm, (Word{1, 2, 3}));
    EXPECT_TRUE(id.stars.empty());

    EXPECT_THROW(osp_from_stars({2, 1}, {1}), std::invalid_argument);
    for (auto& s : enumerate_osps(5, 3)) {
        auto e = osp_stars(s);
        EXPECT_EQ(osp_from_stars(e.perm, e.stars), s);
    }
}

TEST(Multisets, Enumeration)
{
    auto a = enumerate_omps({2, 1}, 2);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].blocks, (std::vector<std::vector<int>>{{1}, {1, 2}}));
    EXPECT_EQ(a[1].blocks, (std::vector<std::vector<int>>{{1, 2}, {1}}));
    EXPECT_EQ(enumerate_omps({1, 1, 1}, 3).size(), 6u);
    EXPECT_EQ(enumerate_omps({1, 1, 1}, 2).size(), 6u);
    for (auto& mu : enumerate_omps({2, 2, 1}, 3)) EXPECT_EQ(mu.content(), (Composition{2, 2, 1}));
}

TEST(Multisets, Inversions)
{
    EXPECT_EQ(inv_omp({{{2, 4, 7}, {2, 6}, {6}}}), 3);
    EXPECT_EQ(inv_omp({{{1, 3, 6}, {2, 4}, {5}}}), 3);
    EXPECT_EQ(inv_omp({{{1}, {1, 2}}}), 0);
    EXPECT_EQ(inv_omp({{{1, 2}, {1}}}), 1);
    // on set partitions it is the OSP statistic
    for (auto& s : enumerate_osps(5, 2)) EXPECT_EQ(inv_omp({s.blocks()}), inv_osp(s));
}

TEST(Words, ReadingWords)
{
    EXPECT_EQ(rword({{2, 4, 7}, {1}, {3, 5}, {3}}), (Word{7, 4, 5, 2, 1, 3, 3}));
    EXPECT_EQ(rword({{2, 4, 7}, {2, 6}, {6}}), (Word{7, 4, 6, 2, 2, 6}));
    EXPECT_EQ(rword({{1, 2, 3}}), (Word{3, 2, 1}));
    EXPECT_EQ(revword({{2, 4, 7}, {2, 6}, {6}}), (Word{6, 2, 2, 6, 4, 7}));
}

TEST(Words, Standardization)
{
    EXPECT_EQ(standardize({1, 3, 1}), (Word{1, 3, 2}));
    EXPECT_EQ(standardize({7, 4, 6, 2, 2, 6}), (Word{6, 3, 4, 1, 2, 5}));
    EXPECT_EQ(standardize({1, 2, 3}), (Word{1, 2, 3}));
    EXPECT_TRUE(inverse_descent_set({1, 2, 3}).empty());
}

TEST(Permutations, Statistics)
{
    EXPECT_EQ(major_index({5, 3, 1, 6, 4, 2}), 12);
    EXPECT_EQ(major_index({1, 2, 3, 4}), 0);
    EXPECT_EQ(inversions({1, 2, 3, 4}), 0);
    // pairwise count
    Word p{2, 1, 4, 5, 3, 6, 7};
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    EXPECT_EQ(inversions(p), inv);
    for (auto& w : permutations(5)) {
        EXPECT_EQ(inverse(inverse(w)), w);
        auto code = lehmer_code(w);
        EXPECT_EQ(size_of(code), inversions(w));
    }
    EXPECT_EQ(permutations(5).size(), 120u);
}

TEST(Tableaux, DescentsOfDisplayedTableau)
{
    StandardYoungTableau t{{{1, 2, 3, 7}, {4, 6}, {5, 8}}};
    EXPECT_EQ(t.shape(), (Partition{4, 2, 2}));
    EXPECT_EQ(t.descents(), (std::vector<int>{3, 4, 7}));
    EXPECT_EQ(t.des(), 3);
    EXPECT_EQ(t.maj(), 14);
    StandardYoungTableau row{{{1, 2, 3, 4}}};
    EXPECT_EQ(row.des(), 0);
    EXPECT_EQ(row.maj(), 0);
}

TEST(Tableaux, Enumeration)
{
    int few = 0;
    for (auto& t : enumerate_syt(4)) few += t.des() <= 1;
    EXPECT_EQ(few, 5);
    // involution counts (telephone numbers) and hook-length counts
    long long tel[] = {1, 1, 2, 4, 10, 26, 76, 232};
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(static_cast<long long>(enumerate_syt(n).size()), tel[n]);
    EXPECT_EQ(enumerate_syt(Partition{3, 2}).size(), 5u);
    EXPECT_EQ(enumerate_syt(Partition{4, 2, 2}).size(), 56u);
}

TEST(Partitions, Basics)
{
    EXPECT_EQ(partitions_of(6).size(), 11u);
    EXPECT_EQ(conjugate({4, 2, 2}), (Partition{3, 3, 1, 1}));
    EXPECT_TRUE(dominates({3, 1}, {2, 2}));
    EXPECT_FALSE(dominates({2, 2}, {3, 1}));
    EXPECT_EQ(weak_compositions(3, 2).size(), 4u);
    EXPECT_EQ(subsets_of_size(5, 2).size(), 10u);
}

TEST(Staircases, Listed)
{
    auto s53 = staircases(5, 3);
    std::set<std::vector<int>> got(s53.begin(), s53.end());
    std::set<std::vector<int>> want{{0, 1, 2, 2, 2}, {0, 2, 1, 2, 2}, {0, 2, 2, 1, 2},
                                    {2, 0, 1, 2, 2}, {2, 0, 2, 1, 2}, {2, 2, 0, 1, 2}};
    EXPECT_EQ(got, want);
    EXPECT_EQ(s53.size(), 6u);
    auto s44 = staircases(4, 4);
    ASSERT_EQ(s44.size(), 1u);
    EXPECT_EQ(s44[0], (std::vector<int>{0, 1, 2, 3}));
    auto s32 = staircases(3, 2);
    EXPECT_EQ(std::set<std::vector<int>>(s32.begin(), s32.end()),
              (std::set<std::vector<int>>{{0, 1, 1}, {1, 0, 1}}));
}
