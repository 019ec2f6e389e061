#pragma once
// Permutations, partitions, ordered set/multiset partitions, tableaux.
// Letters and positions are 1-based throughout.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

namespace coinv {

using Word = std::vector<int>;
using Partition = std::vector<int>;    // weakly decreasing, positive parts
using Composition = std::vector<int>;  // weak composition

// ---- integer helpers -------------------------------------------------------

inline long long factorial(int n)
{
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline long long binomial(int n, int a)
{
    if (a < 0 || n < 0 || a > n) return 0;
    long long r = 1;
    for (int i = 1; i <= a; ++i) r = r * (n - a + i) / i;
    return r;
}

// Stirling numbers of the second kind.
inline long long stirling2(int n, int k)
{
    if (n < 0 || k < 0) return 0;
    std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(k + 1, 0));
    t[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            t[i][j] = t[i - 1][j - 1] + j * t[i - 1][j];
    return t[n][k];
}

inline long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// ---- permutations ----------------------------------------------------------

inline bool is_permutation_word(const Word& w)
{
    std::vector<char> seen(w.size() + 1, 0);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

inline Word inverse(const Word& p)
{
    Word q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

inline std::vector<int> descent_set(const Word& w)
{
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

inline std::vector<int> ascent_set(const Word& w)
{
    std::vector<int> a;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) a.push_back(static_cast<int>(i) + 1);
    return a;
}

inline int major_index(const Word& w)
{
    int s = 0;
    for (int i : descent_set(w)) s += i;
    return s;
}

inline int inversions(const Word& w)
{
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++c;
    return c;
}

// c_i = #{j < i : w_i < w_j}
inline std::vector<int> lehmer_code(const Word& w)
{
    std::vector<int> c(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (w[i] < w[j]) ++c[i];
    return c;
}

struct PermStats {
    std::vector<int> des;
    std::vector<int> asc;
    int maj = 0;
    int inv = 0;
    std::vector<int> lehmer;
};

inline PermStats perm_stats(const Word& p)
{
    if (!is_permutation_word(p)) throw std::invalid_argument("perm_stats: not a permutation");
    return {descent_set(p), ascent_set(p), major_index(p), inversions(p), lehmer_code(p)};
}

// Stable standardization: equal letters are numbered left to right.
inline Word standardize(const Word& w)
{
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
    Word p(w.size());
    for (std::size_t r = 0; r < idx.size(); ++r) p[idx[r]] = static_cast<int>(r) + 1;
    return p;
}

inline std::vector<int> inverse_descent_set(const Word& p) { return descent_set(inverse(p)); }

// All permutations of [n] in lexicographic order.
inline std::vector<Word> permutations(int n)
{
    std::vector<Word> out;
    Word p(n);
    std::iota(p.begin(), p.end(), 1);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// ---- partitions and compositions -------------------------------------------

inline int size_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Partitions of n in lexicographically decreasing order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition conjugate(const Partition& la)
{
    Partition c;
    if (la.empty()) return c;
    for (int i = 1; i <= la[0]; ++i) {
        int cnt = 0;
        for (int p : la)
            if (p >= i) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

// entry i-1 holds the multiplicity of part i
inline std::vector<int> multiplicities(const Partition& la)
{
    int top = la.empty() ? 0 : la[0];
    std::vector<int> m(top + 1, 0);
    for (int p : la) ++m[p];
    return std::vector<int>(m.begin() + 1, m.end());
}

// la >= mu in dominance order (same size assumed).
inline bool dominates(const Partition& la, const Partition& mu)
{
    int a = 0, b = 0;
    std::size_t len = std::max(la.size(), mu.size());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < la.size() ? la[i] : 0;
        b += i < mu.size() ? mu[i] : 0;
        if (a < b) return false;
    }
    return true;
}

inline Partition sorted_partition(std::vector<int> v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// Weak compositions of n with exactly `parts` parts, lex decreasing.
inline std::vector<Composition> weak_compositions(int n, int parts)
{
    std::vector<Composition> out;
    Composition cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (parts == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, n);
    return out;
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int r)
{
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= n - (r - static_cast<int>(cur.size())) + 1; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// ---- ordered set partitions ------------------------------------------------

// Blocks are kept sorted ascending; block order is significant.
class OrderedSetPartition {
public:
    OrderedSetPartition() = default;
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks))
    {
        for (auto& b : blocks_) std::sort(b.begin(), b.end());
        validate();
    }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int k() const { return static_cast<int>(blocks_.size()); }
    int n() const
    {
        int s = 0;
        for (auto& b : blocks_) s += static_cast<int>(b.size());
        return s;
    }
    // 0-based index of the block holding letter a
    int block_of(int a) const
    {
        for (int i = 0; i < k(); ++i)
            if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), a)) return i;
        return -1;
    }

    // Letters at or above 10 force comma separators inside blocks.
    std::string str() const
    {
        bool wide = n() >= 10;
        std::string s;
        for (int i = 0; i < k(); ++i) {
            if (i) s += '|';
            for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
                if (wide && j) s += ',';
                s += std::to_string(blocks_[i][j]);
            }
        }
        return s;
    }

    static OrderedSetPartition parse(const std::string& text)
    {
        std::vector<std::vector<int>> blocks(1);
        bool commas = text.find(',') != std::string::npos;
        std::string num;
        auto flush = [&] {
            if (!num.empty()) blocks.back().push_back(std::stoi(num));
            num.clear();
        };
        for (std::size_t pos = 0; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c == ' ' || c == '(' || c == ')') continue;
            if (c == '|') {
                flush();
                blocks.emplace_back();
            } else if (c == ',') {
                flush();
            } else if (c >= '0' && c <= '9') {
                if (commas) num += c;
                else blocks.back().push_back(c - '0');
            } else {
                throw std::invalid_argument("OSP parse error at column " + std::to_string(pos + 1) +
                                            ": unexpected '" + std::string(1, c) + "'");
            }
        }
        flush();
        return OrderedSetPartition(std::move(blocks));
    }

    friend bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b)
    {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator<(const OrderedSetPartition& a, const OrderedSetPartition& b)
    {
        return a.blocks_ < b.blocks_;
    }

private:
    void validate() const
    {
        int total = n();
        std::vector<char> seen(total + 1, 0);
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("ordered set partition has an empty block");
            for (int x : b) {
                if (x < 1 || x > total || seen[x])
                    throw std::invalid_argument("ordered set partition blocks must partition [n]");
                seen[x] = 1;
            }
        }
    }

    std::vector<std::vector<int>> blocks_;
};

inline std::ostream& operator<<(std::ostream& os, const OrderedSetPartition& s) { return os << s.str(); }

// All of OP_{n,k}, sorted by block sequence.
inline std::vector<OrderedSetPartition> enumerate_osps(int n, int k)
{
    if (k < 1 || k > n) throw std::invalid_argument("enumerate_osps: need 1 <= k <= n");
    std::vector<OrderedSetPartition> out;
    std::vector<int> assign(n, 0);
    std::vector<int> used(k, 0);
    auto rec = [&](auto&& self, int letter) -> void {
        if (letter == n) {
            for (int u : used)
                if (!u) return;
            std::vector<std::vector<int>> blocks(k);
            for (int a = 0; a < n; ++a) blocks[assign[a]].push_back(a + 1);
            out.emplace_back(std::move(blocks));
            return;
        }
        int empty = 0;
        for (int u : used) empty += (u == 0);
        if (empty > n - letter) return;
        for (int b = 0; b < k; ++b) {
            assign[letter] = b;
            ++used[b];
            self(self, letter + 1);
            --used[b];
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline int osp_max_stat(int n, int k) { return (n - k) * (k - 1) + k * (k - 1) / 2; }

// Pairs i < j with i minimal in some block B_m and j in an earlier block.
inline int inv_osp(const OrderedSetPartition& s)
{
    int c = 0;
    const auto& B = s.blocks();
    for (int m = 0; m < s.k(); ++m) {
        int i = B[m].front();
        for (int l = 0; l < m; ++l)
            for (int j : B[l])
                if (j > i) ++c;
    }
    return c;
}

inline int coinv_osp(const OrderedSetPartition& s) { return osp_max_stat(s.n(), s.k()) - inv_osp(s); }

// Direct pair count: a < b in different blocks, at least one minimal in its
// block, and when a sits to the right of b only b is minimal.
inline int coinv_pairs(const OrderedSetPartition& s)
{
    int n = s.n(), c = 0;
    const auto& B = s.blocks();
    auto is_min = [&](int x, int blk) { return B[blk].front() == x; };
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            int ba = s.block_of(a), bb = s.block_of(b);
            if (ba == bb) continue;
            bool ma = is_min(a, ba), mb = is_min(b, bb);
            if (!ma && !mb) continue;
            if (ba > bb && !(mb && !ma)) continue;
            ++c;
        }
    return c;
}

// Ascent-starred encoding: blocks are concatenated increasingly and a star at
// position i means pi_i and pi_{i+1} share a block.
struct StarredPermutation {
    Word perm;
    std::vector<int> stars;  // sorted positions in [n-1]
};

inline StarredPermutation osp_stars(const OrderedSetPartition& s)
{
    StarredPermutation r;
    int pos = 0;
    for (auto& b : s.blocks())
        for (std::size_t j = 0; j < b.size(); ++j) {
            r.perm.push_back(b[j]);
            ++pos;
            if (j + 1 < b.size()) r.stars.push_back(pos);
        }
    return r;
}

inline OrderedSetPartition osp_from_stars(const Word& perm, const std::vector<int>& stars)
{
    if (!is_permutation_word(perm)) throw std::invalid_argument("osp_from_stars: not a permutation");
    std::set<int> st(stars.begin(), stars.end());
    for (int i : st)
        if (i < 1 || i >= static_cast<int>(perm.size()) || perm[i - 1] > perm[i])
            throw std::invalid_argument("osp_from_stars: star not at an ascent");
    std::vector<std::vector<int>> blocks(1);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        blocks.back().push_back(perm[i]);
        if (i + 1 < perm.size() && !st.count(static_cast<int>(i) + 1)) blocks.emplace_back();
    }
    return OrderedSetPartition(std::move(blocks));
}

inline int maj_osp(const OrderedSetPartition& s)
{
    auto sp = osp_stars(s);
    int n = static_cast<int>(sp.perm.size());
    Word comp(n);
    for (int i = 0; i < n; ++i) comp[i] = n - sp.perm[i] + 1;
    int m = major_index(comp);
    auto asc = ascent_set(sp.perm);
    for (int i : sp.stars)
        m -= static_cast<int>(std::count_if(asc.begin(), asc.end(), [&](int a) { return a >= i; }));
    return m;
}

inline int comaj_osp(const OrderedSetPartition& s) { return osp_max_stat(s.n(), s.k()) - maj_osp(s); }

// ---- ordered multiset partitions -------------------------------------------

struct OrderedMultisetPartition {
    std::vector<std::vector<int>> blocks;  // each sorted ascending, no repeats

    Composition content() const
    {
        int top = 0;
        for (auto& b : blocks)
            for (int x : b) top = std::max(top, x);
        Composition c(top, 0);
        for (auto& b : blocks)
            for (int x : b) ++c[x - 1];
        return c;
    }
    friend bool operator==(const OrderedMultisetPartition&, const OrderedMultisetPartition&) = default;
    friend auto operator<=>(const OrderedMultisetPartition&, const OrderedMultisetPartition&) = default;
};

// Every letter i goes into content[i-1] distinct blocks; no block stays empty.
inline std::vector<OrderedMultisetPartition> enumerate_omps(const Composition& content, int k)
{
    std::vector<OrderedMultisetPartition> out;
    if (k < 1 || size_of(content) < k) return out;
    int letters = static_cast<int>(content.size());
    std::vector<std::vector<std::vector<int>>> choices(letters);
    for (int i = 0; i < letters; ++i) choices[i] = subsets_of_size(k, content[i]);
    std::vector<std::vector<int>> blocks(k);
    auto rec = [&](auto&& self, int letter) -> void {
        if (letter == letters) {
            for (auto& b : blocks)
                if (b.empty()) return;
            out.push_back({blocks});
            return;
        }
        for (auto& ch : choices[letter]) {
            for (int b : ch) blocks[b - 1].push_back(letter + 1);
            self(self, letter + 1);
            for (int b : ch) blocks[b - 1].pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline int inv_omp(const OrderedMultisetPartition& mu)
{
    int c = 0;
    const auto& B = mu.blocks;
    for (std::size_t m = 0; m < B.size(); ++m) {
        int i = B[m].front();
        for (std::size_t l = 0; l < m; ++l)
            for (int j : B[l])
                if (j > i) ++c;
    }
    return c;
}

// Diagonal r holds the r-th smallest letter of each block; diagonals are read
// left to right, deepest first. (247|1|35|3) -> 7452133.
inline Word rword(const std::vector<std::vector<int>>& blocks)
{
    std::size_t depth = 0;
    for (auto& b : blocks) depth = std::max(depth, b.size());
    Word w;
    for (std::size_t r = depth; r >= 1; --r)
        for (auto& b : blocks)
            if (b.size() >= r) w.push_back(b[r - 1]);
    return w;
}

inline Word revword(const std::vector<std::vector<int>>& blocks)
{
    Word w = rword(blocks);
    std::reverse(w.begin(), w.end());
    return w;
}

// ---- standard Young tableaux -----------------------------------------------

struct StandardYoungTableau {
    std::vector<std::vector<int>> rows;  // English notation, top row first

    Partition shape() const
    {
        Partition p;
        for (auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return p;
    }
    int size() const
    {
        int s = 0;
        for (auto& r : rows) s += static_cast<int>(r.size());
        return s;
    }
    // i is a descent when i+1 sits in a strictly lower row
    std::vector<int> descents() const
    {
        int n = size();
        std::vector<int> row(n + 1);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int x : rows[r]) row[x] = static_cast<int>(r);
        std::vector<int> d;
        for (int i = 1; i < n; ++i)
            if (row[i + 1] > row[i]) d.push_back(i);
        return d;
    }
    int des() const { return static_cast<int>(descents().size()); }
    int maj() const
    {
        int s = 0;
        for (int i : descents()) s += i;
        return s;
    }
};

inline std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape)
{
    std::vector<StandardYoungTableau> out;
    int n = size_of(shape);
    StandardYoungTableau t;
    t.rows.resize(shape.size());
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(t);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            int len = static_cast<int>(t.rows[r].size());
            if (len >= shape[r]) continue;
            if (r > 0 && static_cast<int>(t.rows[r - 1].size()) <= len) continue;
            t.rows[r].push_back(next);
            self(self, next + 1);
            t.rows[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline std::vector<StandardYoungTableau> enumerate_syt(int n)
{
    std::vector<StandardYoungTableau> out;
    for (auto& la : partitions_of(n)) {
        auto part = enumerate_syt(la);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// ---- staircases ------------------------------------------------------------

// Distinct shuffles of (0,1,...,k-1) with n-k extra copies of k-1.
inline std::vector<std::vector<int>> staircases(int n, int k)
{
    if (k < 1 || k > n) throw std::invalid_argument("staircases: need 1 <= k <= n");
    std::set<std::vector<int>> seen;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int a, int b) -> void {
        if (a == k && b == n - k) {
            seen.insert(cur);
            return;
        }
        if (a < k) {
            cur.push_back(a);
            self(self, a + 1, b);
            cur.pop_back();
        }
        if (b < n - k) {
            cur.push_back(k - 1);
            self(self, a, b + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return {seen.begin(), seen.end()};
}

}  // namespace coinv
