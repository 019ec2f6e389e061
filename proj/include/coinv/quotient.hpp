#pragma once
// The quotient rings R_{n,k} and R_{n,k,s}: monomial bases, Hilbert series,
// the insertion bijection with ordered set partitions, graded characters,
// antisymmetrization ranks and straightening data.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "combinat.hpp"
#include "demazure.hpp"
#include "parallel.hpp"
#include "polyring.hpp"
#include "qseries.hpp"

namespace coinv {

// ---- skip detection -----------------------------------------------------------

// Largest |S| with x(S) | m. Greedy from the left is optimal: taking an index
// early only lowers the exponent needed further right.
inline int max_skip_size(const Monomial& m)
{
    int j = 0;
    for (int i = 1; i <= m.nvars(); ++i)
        if (m[i] >= i - j) ++j;
    return j;
}

// m avoids x_i^k and every x(S) with |S| = n-s+1. When n-s+1 <= 0 every
// monomial is a multiple of some x(S), so nothing qualifies.
inline bool is_nonskip(const Monomial& m, int k, int s)
{
    int n = m.nvars();
    int t = n - s + 1;
    if (t <= 0) return false;
    for (int i = 1; i <= n; ++i)
        if (m[i] >= k) return false;
    return max_skip_size(m) < t;
}

// Sort order used for every basis listing: degree descending, then lex descending.
inline bool basis_order(const Monomial& a, const Monomial& b)
{
    int da = a.degree(), db = b.degree();
    return da != db ? da > db : b < a;
}

inline std::vector<Monomial> nonskip_monomials(int n, int k, int s)
{
    if (n < 0 || k < 1 || s < 0 || s > k) throw std::invalid_argument("nonskip_monomials: bad parameters");
    std::vector<Monomial> out;
    int t = n - s + 1;
    if (t <= 0) return out;
    Monomial m(n);
    // DFS keeps the greedy skip counter so pruning is exact
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i > n) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e < k; ++e) {
            int nj = j + (e >= i - j ? 1 : 0);
            if (nj >= t) break;  // larger e keeps the skip
            m.set(i, e);
            self(self, i + 1, nj);
        }
        m.set(i, 0);
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end(), basis_order);
    return out;
}

inline std::vector<Monomial> artin_monomials(int n, int k)
{
    std::set<Monomial> seen;
    for (auto& st : staircases(n, k)) {
        Monomial m(n);
        auto rec = [&](auto&& self, int i) -> void {
            if (i > n) {
                seen.insert(m);
                return;
            }
            for (int e = 0; e <= st[i - 1]; ++e) {
                m.set(i, e);
                self(self, i + 1);
            }
            m.set(i, 0);
        };
        rec(rec, 1);
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), basis_order);
    return out;
}

// gs_pi = prod over descents i of x_{pi_1} ... x_{pi_i}
inline Monomial gs_monomial(const Word& pi)
{
    int n = static_cast<int>(pi.size());
    Monomial m(n);
    for (int i : descent_set(pi))
        for (int a = 0; a < i; ++a) m.add(pi[a], 1);
    return m;
}

struct GsEntry {
    Word pi;
    std::vector<int> tail;  // i_1 >= ... >= i_{n-k}
    Monomial monomial;
};

inline std::vector<GsEntry> gs_entries(int n, int k)
{
    if (k < 1 || k > n) throw std::invalid_argument("gs_monomials: need 1 <= k <= n");
    std::vector<GsEntry> out;
    int len = n - k;
    for (auto& pi : permutations(n)) {
        int des = static_cast<int>(descent_set(pi).size());
        if (des >= k) continue;
        Monomial base = gs_monomial(pi);
        std::vector<int> tail(len, 0);
        auto rec = [&](auto&& self, int pos, int cap) -> void {
            if (pos == len) {
                Monomial m = base;
                for (int a = 0; a < len; ++a) m.add(pi[a], tail[a]);
                out.push_back({pi, tail, m});
                return;
            }
            for (int v = 0; v <= cap; ++v) {
                tail[pos] = v;
                self(self, pos + 1, v);
            }
        };
        rec(rec, 0, k - des - 1);
    }
    return out;
}

inline std::vector<Monomial> gs_monomials(int n, int k)
{
    std::vector<Monomial> out;
    for (auto& e : gs_entries(n, k)) out.push_back(e.monomial);
    std::sort(out.begin(), out.end(), basis_order);
    return out;
}

inline QPoly degree_series(const std::vector<Monomial>& ms)
{
    std::vector<long long> c;
    for (auto& m : ms) {
        int d = m.degree();
        if (d >= static_cast<int>(c.size())) c.resize(d + 1, 0);
        ++c[d];
    }
    return QPoly(c);
}

// Hilbert series of R_{n,k,s} read off its standard monomials.
inline QPoly hilbert_series(int n, int k, int s) { return degree_series(nonskip_monomials(n, k, s)); }
inline QPoly hilbert_series(int n, int k) { return hilbert_series(n, k, k); }

// ---- OP_{n,k,s} -------------------------------------------------------------

// k-block ordered set partitions of [n+k-s] with letter n+i in block s+i.
// Letters 1..n are assigned freely as long as blocks 1..s end up nonempty.
inline std::vector<OrderedSetPartition> enumerate_pinned_osps(int n, int k, int s)
{
    if (s < 0 || s > k || k < 1) throw std::invalid_argument("enumerate_pinned_osps: need 0 <= s <= k");
    std::vector<OrderedSetPartition> out;
    if (n + k - s < k) return out;
    std::vector<std::vector<int>> blocks(k);
    for (int i = 1; i <= k - s; ++i) blocks[s + i - 1].push_back(n + i);
    auto rec = [&](auto&& self, int letter, int empty_free) -> void {
        if (n - letter + 1 < empty_free) return;
        if (letter > n) {
            out.emplace_back(blocks);
            return;
        }
        for (int b = 0; b < k; ++b) {
            bool fills = b < s && blocks[b].empty();
            blocks[b].push_back(letter);
            self(self, letter + 1, empty_free - (fills ? 1 : 0));
            blocks[b].pop_back();
        }
    };
    rec(rec, 1, s);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- the insertion bijection ------------------------------------------------------

inline Monomial extend_vars(const Monomial& m, int n)
{
    Monomial r(n);
    for (int i = 1; i <= m.nvars(); ++i) r.set(i, m[i]);
    return r;
}

inline Monomial drop_last_var(const Monomial& m)
{
    Monomial r(m.nvars() - 1);
    for (int i = 1; i < m.nvars(); ++i) r.set(i, m[i]);
    return r;
}

// All |S| = n-k with x(S) | m(S) m, lex order.
inline std::vector<std::vector<int>> canonical_skip_collection(const Monomial& m, int k)
{
    int n = m.nvars();
    std::vector<std::vector<int>> C;
    for (auto& S : subsets_of_size(n, n - k))
        if (skip_monomial(S, n).divides(m * subset_monomial(S, n))) C.push_back(S);
    return C;
}

// The unique |S| = n-k such that x(S) | m(S) m and m(S) m is still free of
// every x(U) with |U| = n-k+1.
inline std::vector<int> canonical_skip_set(const Monomial& m, int k)
{
    int n = m.nvars();
    if (!is_nonskip(m, k, k)) throw std::invalid_argument("canonical_skip_set: monomial is not nonskip");
    std::vector<std::vector<int>> hits;
    for (auto& S : subsets_of_size(n, n - k)) {
        Monomial mm = m * subset_monomial(S, n);
        if (skip_monomial(S, n).divides(mm) && max_skip_size(mm) < n - k + 1) hits.push_back(S);
    }
    if (hits.size() != 1) throw std::logic_error("canonical_skip_set: expected exactly one set");
    return hits[0];
}

struct PsiStep {
    int letter = 0;
    bool bar = false;      // letter inserted as a singleton block
    int block = 0;         // 0-based block receiving the letter
    std::vector<int> S;    // skip set used by a bar insertion
    Monomial monomial;     // image after this step
};

// Builds sigma letter by letter and records the monomial after each insertion.
inline std::vector<PsiStep> psi_trace(const OrderedSetPartition& sigma)
{
    int n = sigma.n();
    std::vector<PsiStep> steps;
    Monomial m(1);
    steps.push_back({1, true, 0, {}, m});
    for (int a = 2; a <= n; ++a) {
        // restriction of sigma to letters 1..a
        std::vector<std::vector<int>> blocks;
        int pos = -1;
        bool single = false;
        for (auto& b : sigma.blocks()) {
            std::vector<int> kept;
            for (int x : b)
                if (x <= a) kept.push_back(x);
            if (kept.empty()) continue;
            if (std::find(kept.begin(), kept.end(), a) != kept.end()) {
                pos = static_cast<int>(blocks.size());
                single = kept.size() == 1;
            }
            blocks.push_back(kept);
        }
        int k_before = static_cast<int>(blocks.size()) - (single ? 1 : 0);
        Monomial prev = m;
        m = extend_vars(prev, a);
        PsiStep st{a, single, pos, {}, m};
        if (single) {
            st.S = canonical_skip_set(prev, k_before);
            m = m * subset_monomial(st.S, a);
        }
        m.add(a, pos);
        st.monomial = m;
        steps.push_back(st);
    }
    return steps;
}

inline Monomial psi(const OrderedSetPartition& sigma) { return psi_trace(sigma).back().monomial; }

inline OrderedSetPartition phi(const Monomial& m, int k)
{
    int n = m.nvars();
    if (n < 1 || k < 1 || k > n || !is_nonskip(m, k, k)) throw std::invalid_argument("phi: monomial outside M_{n,k}");
    if (n == 1) return OrderedSetPartition(std::vector<std::vector<int>>{{1}});
    int i = m[n];
    Monomial rest = drop_last_var(m);
    if (k <= n - 1 && is_nonskip(rest, k, k)) {
        auto blocks = phi(rest, k).blocks();
        blocks[i].push_back(n);
        return OrderedSetPartition(std::move(blocks));
    }
    std::vector<std::vector<int>> hits;
    for (auto& S : subsets_of_size(n - 1, n - k))
        if (skip_monomial(S, n - 1).divides(rest)) hits.push_back(S);
    if (hits.size() != 1) throw std::logic_error("phi: expected exactly one skip set");
    auto blocks = phi(rest / subset_monomial(hits[0], n - 1), k - 1).blocks();
    blocks.insert(blocks.begin() + i, std::vector<int>{n});
    return OrderedSetPartition(std::move(blocks));
}

// ---- exact linear algebra ---------------------------------------------------------

inline int matrix_rank(std::vector<std::vector<Rational>> rows)
{
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// ---- the quotient ring ---------------------------------------------------------

class Quotient {
public:
    Quotient(int n, int k, int s) : n_(n), k_(k), s_(s)
    {
        if (s == k) gb_ = reduced_groebner(n, k);
        else gb_ = predicted_groebner(n, k, s);
        basis_ = nonskip_monomials(n, k, s);
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }
    Quotient(int n, int k) : Quotient(n, k, k) {}

    int n() const { return n_; }
    int k() const { return k_; }
    int s() const { return s_; }
    const std::vector<RationalPolynomial>& groebner() const { return gb_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    long long index_of(const Monomial& m) const
    {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : static_cast<long long>(it->second);
    }

    RationalPolynomial reduce(const RationalPolynomial& f) const { return normal_form(f, gb_); }

private:
    int n_, k_, s_;
    std::vector<RationalPolynomial> gb_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
};

// Memoized normal forms of single monomials; not shared across threads.
class MonomialReducer {
public:
    explicit MonomialReducer(const Quotient& q) : q_(q) {}
    const RationalPolynomial& operator()(const Monomial& m)
    {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(m, q_.reduce(RationalPolynomial(m))).first->second;
    }

private:
    const Quotient& q_;
    std::map<Monomial, RationalPolynomial> cache_;
};

// Permutation with the given cycle type; cycles fill consecutive letters.
inline Word cycle_type_representative(const Partition& la)
{
    int n = size_of(la);
    Word p(n);
    int start = 1;
    for (int len : la) {
        for (int t = 0; t < len; ++t) p[start + t - 1] = start + (t + 1) % len;
        start += len;
    }
    return p;
}

// Conjugate of the standard representative by i -> n+1-i.
inline Word alternate_representative(const Partition& la)
{
    Word p = cycle_type_representative(la);
    int n = static_cast<int>(p.size());
    Word q(n);
    for (int i = 1; i <= n; ++i) q[n - i] = n + 1 - p[i - 1];
    return q;
}

inline Partition cycle_type(const Word& p)
{
    int n = static_cast<int>(p.size());
    std::vector<char> seen(n + 1, 0);
    Partition la;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j - 1]) {
            seen[j] = 1;
            ++len;
        }
        la.push_back(len);
    }
    return sorted_partition(la);
}

// Graded trace of pi acting by x_i -> x_{pi(i)}.
inline QPoly graded_trace(const Quotient& q, const Word& pi, MonomialReducer& red)
{
    std::vector<Rational> by_deg;
    for (auto& m : q.basis()) {
        Rational c = red(m.permuted(pi)).coeff(m);
        int d = m.degree();
        if (d >= static_cast<int>(by_deg.size())) by_deg.resize(d + 1, 0);
        by_deg[d] += c;
    }
    std::vector<long long> out;
    for (auto& c : by_deg) {
        if (c.get_den() != 1) throw std::logic_error("graded_trace: non-integral trace");
        out.push_back(c.get_num().get_si());
    }
    return QPoly(out);
}

struct CharacterResult {
    std::map<Partition, QPoly> values;  // cycle type -> trace by degree
    bool consistent = true;             // both representatives agree
};

inline CharacterResult graded_character(const Quotient& q)
{
    auto classes = partitions_of(q.n());
    std::vector<QPoly> a(classes.size()), b(classes.size());
    parallel_for(classes.size(), [&](std::size_t c) {
        MonomialReducer red(q);
        a[c] = graded_trace(q, cycle_type_representative(classes[c]), red);
        b[c] = graded_trace(q, alternate_representative(classes[c]), red);
    });
    CharacterResult res;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        res.values[classes[c]] = a[c];
        if (!(a[c] == b[c])) res.consistent = false;
    }
    return res;
}

inline CharacterResult graded_character(int n, int k, int s) { return graded_character(Quotient(n, k, s)); }

inline int permutation_sign(const Word& p) { return inversions(p) % 2 ? -1 : 1; }

// Rank, degree by degree, of the antisymmetrizer over the last j letters
// applied to the standard monomials of R_{n,k}.
inline QPoly antisymmetrize_hilbert(const Quotient& q, int j)
{
    int n = q.n();
    if (j < 1 || j > n) throw std::invalid_argument("antisymmetrize_hilbert: need 1 <= j <= n");
    std::vector<std::pair<Word, int>> group;
    for (auto& w : permutations(j)) {
        Word full(n);
        for (int i = 1; i <= n - j; ++i) full[i - 1] = i;
        for (int i = 1; i <= j; ++i) full[n - j + i - 1] = n - j + w[i - 1];
        group.emplace_back(full, permutation_sign(w));
    }
    const auto& B = q.basis();
    std::map<int, std::vector<std::size_t>> by_deg;
    for (std::size_t i = 0; i < B.size(); ++i) by_deg[B[i].degree()].push_back(i);
    std::vector<int> keys;
    for (auto& [d, v] : by_deg) keys.push_back(d);
    std::vector<long long> ranks(keys.size(), 0);
    parallel_for(keys.size(), [&](std::size_t t) {
        MonomialReducer red(q);
        const auto& idx = by_deg.at(keys[t]);
        std::map<std::size_t, std::size_t> col;
        for (std::size_t c = 0; c < idx.size(); ++c) col[idx[c]] = c;
        std::vector<std::vector<Rational>> rows;
        for (auto i : idx) {
            std::vector<Rational> row(idx.size(), 0);
            for (auto& [g, sign] : group)
                for (auto& [m, c] : red(B[i].permuted(g)).terms()) row[col.at(q.index_of(m))] += sign * c;
            rows.push_back(std::move(row));
        }
        ranks[t] = matrix_rank(std::move(rows));
    });
    std::vector<long long> coeffs;
    for (std::size_t t = 0; t < keys.size(); ++t) {
        if (keys[t] >= static_cast<int>(coeffs.size())) coeffs.resize(keys[t] + 1, 0);
        coeffs[keys[t]] = ranks[t];
    }
    return QPoly(coeffs);
}

inline QPoly antisymmetrize_hilbert(int n, int k, int j) { return antisymmetrize_hilbert(Quotient(n, k), j); }

// Right-hand side of the antisymmetrization identity.
inline QPoly antisymmetrize_target(int n, int k, int j)
{
    if (j > k) return {};
    return q_binomial(k, j).shift(j * (j - 1) / 2) * hilbert_series(n - j, k, k - j);
}

// Degree-by-degree rank of the normal forms of a monomial family.
inline QPoly rank_series(const Quotient& q, const std::vector<Monomial>& family)
{
    std::map<int, std::vector<Monomial>> by_deg;
    for (auto& m : family) by_deg[m.degree()].push_back(m);
    MonomialReducer red(q);
    std::vector<long long> coeffs;
    for (auto& [d, ms] : by_deg) {
        std::vector<std::vector<Rational>> rows;
        for (auto& m : ms) {
            std::vector<Rational> row(q.basis().size(), 0);
            for (auto& [t, c] : red(m).terms()) row[q.index_of(t)] = c;
            rows.push_back(std::move(row));
        }
        if (d >= static_cast<int>(coeffs.size())) coeffs.resize(d + 1, 0);
        coeffs[d] = matrix_rank(std::move(rows));
    }
    return QPoly(coeffs);
}

// ---- straightening data ---------------------------------------------------------

struct StraighteningData {
    Partition lambda;
    Word pi;
    std::vector<int> d;
    Partition mu;
};

// Variables sorted by decreasing exponent, ties to the smaller index.
inline Word exponent_order(const Monomial& m)
{
    int n = m.nvars();
    Word p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return m[a] > m[b]; });
    return p;
}

inline StraighteningData straightening_data(const Monomial& m)
{
    int n = m.nvars();
    StraighteningData sd;
    sd.pi = exponent_order(m);
    sd.lambda = sorted_partition(m.exponents());
    auto des = descent_set(sd.pi);
    sd.d.assign(n, 0);
    for (int j = 1; j <= n; ++j)
        sd.d[j - 1] = static_cast<int>(std::count_if(des.begin(), des.end(), [&](int x) { return x >= j; }));
    std::vector<int> conj(n);
    for (int j = 0; j < n; ++j) {
        int lam = j < static_cast<int>(sd.lambda.size()) ? sd.lambda[j] : 0;
        conj[j] = lam - sd.d[j];
        if (conj[j] < 0 || (j && conj[j] > conj[j - 1]))
            throw std::logic_error("straightening_data: lambda - d is not a partition");
    }
    sd.mu = conjugate(sorted_partition(conj));
    return sd;
}

// m' strictly precedes m: same degree and either lambda(m') is strictly
// dominated by lambda(m), or the lambdas agree and pi(m') has more inversions.
inline bool abr_precedes(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree()) return false;
    Partition la = sorted_partition(a.exponents()), lb = sorted_partition(b.exponents());
    if (la != lb) return dominates(lb, la);
    return inversions(exponent_order(a)) > inversions(exponent_order(b));
}

inline RationalPolynomial elementary_product(const Partition& mu, int n)
{
    RationalPolynomial r(n, 1);
    for (int p : mu) r *= elementary(p, n);
    return r;
}

// gs_{pi(m)} e_{mu(m)} - m, whose monomials must all precede m.
inline RationalPolynomial straightening_remainder(const Monomial& m)
{
    auto sd = straightening_data(m);
    RationalPolynomial r = elementary_product(sd.mu, m.nvars()).times(gs_monomial(sd.pi), 1);
    r.add_term(m, -1);
    return r;
}

inline bool straighten_check(const Monomial& m)
{
    RationalPolynomial rem = straightening_remainder(m);
    for (auto& [t, c] : rem.terms())
        if (!abr_precedes(t, m)) return false;
    return true;
}

}  // namespace coinv
