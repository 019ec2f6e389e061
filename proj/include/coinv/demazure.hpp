#pragma once
// Skyline fillings, Demazure characters, skip monomials, RB/LL cell
// collections and the predicted Groebner bases built from them.
//
// Coordinates: column c counts from 1 at the left, row 0 is the basement and
// rows 1..gamma_c hold the cells of column c. The basement reads n, n-1, ..., 1.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "polyring.hpp"

namespace coinv {

inline Composition reverse_composition(Composition g)
{
    std::reverse(g.begin(), g.end());
    return g;
}

// Subtract one from every nonzero part.
inline Composition decrement(Composition g)
{
    for (int& x : g)
        if (x > 0) --x;
    return g;
}

// ---- skip monomials ----------------------------------------------------------

struct SkipData {
    std::vector<int> S;
    Monomial monomial;
    Composition composition;
};

inline Composition skip_composition(const std::vector<int>& S, int n)
{
    Composition g(n, 0);
    for (std::size_t j = 0; j < S.size(); ++j) {
        if (S[j] < 1 || S[j] > n || (j && S[j] <= S[j - 1]))
            throw std::invalid_argument("skip set must be an increasing subset of [n]");
        g[S[j] - 1] = S[j] - static_cast<int>(j);
    }
    return g;
}

inline Monomial skip_monomial(const std::vector<int>& S, int n) { return Monomial(skip_composition(S, n)); }

inline SkipData skip_data(const std::vector<int>& S, int n)
{
    auto g = skip_composition(S, n);
    return {S, Monomial(g), g};
}

// Product of the variables indexed by S.
inline Monomial subset_monomial(const std::vector<int>& S, int n)
{
    Monomial m(n);
    for (int i : S) m.add(i, 1);
    return m;
}

// ---- skyline fillings ----------------------------------------------------------

struct SkylineFilling {
    Composition shape;
    // columns[c][r] for r = 0..shape[c]; row 0 holds the basement value
    std::vector<std::vector<int>> columns;

    int n() const { return static_cast<int>(shape.size()); }
    Monomial content() const
    {
        Monomial m(n());
        for (auto& col : columns)
            for (std::size_t r = 1; r < col.size(); ++r) m.add(col[r], 1);
        return m;
    }
    // Row-major grid, top row first, basement last; 0 marks absent cells.
    std::vector<std::vector<int>> grid() const
    {
        int h = shape.empty() ? 0 : *std::max_element(shape.begin(), shape.end());
        std::vector<std::vector<int>> g(h + 1, std::vector<int>(shape.size(), 0));
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (std::size_t r = 0; r < columns[c].size(); ++r) g[h - r][c] = columns[c][r];
        return g;
    }
};

namespace detail {

inline bool coinversion(int a, int b, int c) { return a <= b && b <= c; }

// Checks every triple whose last-filled cell is (j, r), with columns filled
// left to right and each column bottom-up. Indices here are 0-based columns.
inline bool triples_ok(const Composition& g, const std::vector<std::vector<int>>& cols, int j, int r)
{
    for (int i = 0; i < j; ++i) {
        if (g[i] >= g[j]) {
            // type A: a=(i,r), b=(j,r), c=(i,r-1)
            if (r >= 1 && coinversion(cols[i][r], cols[j][r], cols[i][r - 1])) return false;
        } else if (r >= 1 && r - 1 <= g[i]) {
            // type B: a=(j,r), b=(i,r-1), c=(j,r-1)
            if (coinversion(cols[j][r], cols[i][r - 1], cols[j][r - 1])) return false;
        }
    }
    return true;
}

}  // namespace detail

// Full check of both filling conditions; used as an oracle for the enumerator.
inline bool is_ssk(const SkylineFilling& f)
{
    const auto& g = f.shape;
    int n = f.n();
    if (static_cast<int>(f.columns.size()) != n) return false;
    for (int c = 0; c < n; ++c) {
        if (static_cast<int>(f.columns[c].size()) != g[c] + 1) return false;
        if (f.columns[c][0] != n - c) return false;
        for (int r = 1; r <= g[c]; ++r)
            if (f.columns[c][r] < 1 || f.columns[c][r] > f.columns[c][r - 1]) return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g[i] >= g[j]) {
                for (int r = 1; r <= g[j]; ++r)
                    if (detail::coinversion(f.columns[i][r], f.columns[j][r], f.columns[i][r - 1])) return false;
            } else {
                for (int r = 0; r <= g[i]; ++r)
                    if (detail::coinversion(f.columns[j][r + 1], f.columns[i][r], f.columns[j][r])) return false;
            }
        }
    return true;
}

// Calls visit(filling) for each SSK of shape g.
template <class Visit>
void for_each_ssk(const Composition& g, Visit&& visit)
{
    int n = static_cast<int>(g.size());
    SkylineFilling f{g, std::vector<std::vector<int>>(n)};
    for (int c = 0; c < n; ++c) {
        f.columns[c].assign(g[c] + 1, 0);
        f.columns[c][0] = n - c;
    }
    auto rec = [&](auto&& self, int c, int r) -> void {
        if (c == n) {
            visit(static_cast<const SkylineFilling&>(f));
            return;
        }
        if (r > g[c]) {
            self(self, c + 1, 1);
            return;
        }
        for (int v = f.columns[c][r - 1]; v >= 1; --v) {
            f.columns[c][r] = v;
            if (detail::triples_ok(g, f.columns, c, r)) self(self, c, r + 1);
        }
        f.columns[c][r] = 0;
    };
    rec(rec, 0, 1);
}

inline std::vector<SkylineFilling> enumerate_ssk(const Composition& g)
{
    std::vector<SkylineFilling> out;
    for_each_ssk(g, [&](const SkylineFilling& f) { out.push_back(f); });
    return out;
}

// kappa_gamma(x_1..x_n): sum of x^content over SSK of the reversed shape.
inline RationalPolynomial demazure_char(const Composition& gamma)
{
    int n = static_cast<int>(gamma.size());
    RationalPolynomial r(n);
    for_each_ssk(reverse_composition(gamma), [&](const SkylineFilling& f) { r.add_term(f.content(), 1); });
    return r;
}

// x_i -> x_{n+1-i}
inline RationalPolynomial reverse_vars(const RationalPolynomial& f)
{
    return f.map_monomials([](const Monomial& m) { return m.reversed(); });
}

// ---- divided differences (independent oracle) -----------------------------

// pi_i f = d_i(x_i f), applied monomial by monomial.
inline RationalPolynomial isobaric_divided_difference(const RationalPolynomial& f, int i)
{
    RationalPolynomial r(f.nvars());
    for (auto& [m, c] : f.terms()) {
        int a = m[i], b = m[i + 1];
        auto emit = [&](int p, int q, const Rational& coef) {
            Monomial t = m;
            t.set(i, p);
            t.set(i + 1, q);
            r.add_term(t, coef);
        };
        if (a >= b) {
            for (int t = 0; t <= a - b; ++t) emit(a - t, b + t, c);
        } else if (a + 1 < b) {
            for (int t = 1; t <= b - a - 1; ++t) emit(a + t, b - t, -c);
        }
    }
    return r;
}

// kappa_gamma = x^gamma for weakly decreasing gamma, else pi_i kappa_{s_i gamma}
// at the first ascent gamma_i < gamma_{i+1}.
inline RationalPolynomial demazure_char_divided(const Composition& gamma)
{
    int n = static_cast<int>(gamma.size());
    for (int i = 0; i + 1 < n; ++i)
        if (gamma[i] < gamma[i + 1]) {
            Composition g = gamma;
            std::swap(g[i], g[i + 1]);
            return isobaric_divided_difference(demazure_char_divided(g), i + 1);
        }
    return RationalPolynomial(Monomial(gamma));
}

// ---- RB and LL collections ----------------------------------------------------

enum class CollectionKind { RB, LL };

struct CellCollection {
    std::vector<std::pair<int, int>> cells;  // (column, row), sorted
    CollectionKind kind = CollectionKind::RB;
    friend bool operator==(const CellCollection&, const CellCollection&) = default;
};

// One new cell atop each chosen column; within each height class the chosen
// columns are the rightmost ones.
inline bool is_rb(const Composition& g, const std::vector<std::pair<int, int>>& cells)
{
    int n = static_cast<int>(g.size());
    std::vector<char> chosen(n + 1, 0);
    for (auto [c, r] : cells) {
        if (c < 1 || c > n || r != g[c - 1] + 1 || chosen[c]) return false;
        chosen[c] = 1;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (g[a - 1] == g[b - 1] && chosen[a] && !chosen[b]) return false;
    return true;
}

inline std::vector<CellCollection> rb_collections(const Composition& g, int d)
{
    int n = static_cast<int>(g.size());
    std::vector<int> heights(g.begin(), g.end());
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
    std::vector<std::vector<int>> classes;
    for (int h : heights) {
        classes.emplace_back();
        for (int c = 1; c <= n; ++c)
            if (g[c - 1] == h) classes.back().push_back(c);
    }
    std::vector<CellCollection> out;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, std::size_t cls, int left) -> void {
        if (cls == classes.size()) {
            if (left == 0) {
                CellCollection cc{cur, CollectionKind::RB};
                std::sort(cc.cells.begin(), cc.cells.end());
                out.push_back(std::move(cc));
            }
            return;
        }
        const auto& cols = classes[cls];
        int sz = static_cast<int>(cols.size());
        for (int take = 0; take <= std::min(sz, left); ++take) {
            for (int t = 0; t < take; ++t) cur.emplace_back(cols[sz - 1 - t], g[cols[sz - 1 - t] - 1] + 1);
            self(self, cls + 1, left - take);
            cur.resize(cur.size() - take);
        }
    };
    if (d >= 0) rec(rec, 0, d);
    return out;
}

// Top-justified in each column, at most one cell per row, and no cell can
// slide left within its row onto the bottom of another column's top-justified
// run. Only the receiving column has to stay top-justified; reading it as
// "the whole collection stays top-justified" (bottom cells only) breaks the
// Demazure identity already at n = 4.
inline bool is_ll(const Composition& g, const std::vector<std::pair<int, int>>& cells)
{
    int n = static_cast<int>(g.size());
    std::vector<int> count(n + 1, 0);
    std::vector<std::vector<int>> rows(n + 1);
    std::set<int> used_rows;
    for (auto [c, r] : cells) {
        if (c < 1 || c > n || r < 1 || r > g[c - 1]) return false;
        if (!used_rows.insert(r).second) return false;
        rows[c].push_back(r);
        ++count[c];
    }
    for (int c = 1; c <= n; ++c) {
        std::sort(rows[c].begin(), rows[c].end(), std::greater<>());
        for (int t = 0; t < count[c]; ++t)
            if (rows[c][t] != g[c - 1] - t) return false;
    }
    for (auto [c, r] : cells)
        for (int c2 = 1; c2 < c; ++c2)
            if (g[c2 - 1] >= r && g[c2 - 1] - count[c2] == r) return false;
    return true;
}

inline std::vector<CellCollection> ll_collections(const Composition& g)
{
    int n = static_cast<int>(g.size());
    std::vector<CellCollection> out;
    std::vector<int> take(n, 0);
    std::set<int> used;
    auto rec = [&](auto&& self, int c) -> void {
        if (c == n) {
            std::vector<std::pair<int, int>> cells;
            for (int j = 0; j < n; ++j)
                for (int t = 0; t < take[j]; ++t) cells.emplace_back(j + 1, g[j] - t);
            std::sort(cells.begin(), cells.end());
            if (is_ll(g, cells)) out.push_back({cells, CollectionKind::LL});
            return;
        }
        for (int t = 0; t <= g[c]; ++t) {
            bool clash = false;
            for (int u = 0; u < t; ++u)
                if (used.count(g[c] - u)) clash = true;
            if (clash) break;  // larger t only adds rows
            for (int u = 0; u < t; ++u) used.insert(g[c] - u);
            take[c] = t;
            self(self, c + 1);
            for (int u = 0; u < t; ++u) used.erase(g[c] - u);
        }
        take[c] = 0;
    };
    rec(rec, 0);
    return out;
}

// Adds (RB) or removes (LL) the cells column by column.
inline Composition add_cells(Composition g, const CellCollection& cc)
{
    for (auto [c, r] : cc.cells) ++g[c - 1];
    return g;
}

inline Composition remove_cells(Composition g, const CellCollection& cc)
{
    for (auto [c, r] : cc.cells) --g[c - 1];
    return g;
}

// ---- identities -------------------------------------------------------------

struct PolyPair {
    RationalPolynomial lhs;
    RationalPolynomial rhs;
    bool equal() const { return lhs == rhs; }
};

// e_d kappa_gamma versus the sum over RB collections of size d.
inline PolyPair dual_pieri(const Composition& g, int d)
{
    int n = static_cast<int>(g.size());
    PolyPair p{elementary(d, n) * demazure_char(g), RationalPolynomial(n)};
    for (auto& rho : rb_collections(g, d)) p.rhs += demazure_char(add_cells(g, rho));
    return p;
}

inline PolyPair demazure_identity_check(const std::vector<int>& S, int n, int k)
{
    if (static_cast<int>(S.size()) != n - k + 1)
        throw std::invalid_argument("demazure_identity_check: need |S| = n-k+1");
    Composition top = reverse_composition(skip_composition(S, n));
    Composition bar = decrement(top);
    PolyPair p{demazure_char(top), RationalPolynomial(n)};
    for (auto& la : ll_collections(bar)) {
        int sz = static_cast<int>(la.cells.size());
        auto term = demazure_char(remove_cells(bar, la)) * elementary(n - k + 1 + sz, n);
        if (sz % 2) p.rhs -= term;
        else p.rhs += term;
    }
    return p;
}

// ---- predicted Groebner bases ----------------------------------------------

// kappa_{gamma(S)*}(x_n^*)
inline RationalPolynomial reverse_skip_demazure(const std::vector<int>& S, int n)
{
    return reverse_vars(demazure_char(reverse_composition(skip_composition(S, n))));
}

struct LabeledGenerator {
    RationalPolynomial poly;
    std::vector<int> S;          // empty for variable powers
    Composition label;           // gamma(S)* for Demazure generators
    int power_index = 0;         // i for x_i^k
};

// Variable powers x_i^k, then kappa_{gamma(S)*}(x_n^*) for |S| = n-s+1 with S
// in lex order. S ranges over [n-1] when s = k and over [n] otherwise.
inline std::vector<LabeledGenerator> predicted_groebner_labeled(int n, int k, int s)
{
    if (!(1 <= s && s <= k && k <= n)) throw std::invalid_argument("predicted_groebner: need 1 <= s <= k <= n");
    std::vector<LabeledGenerator> out;
    for (int i = 1; i <= n; ++i) out.push_back({variable_power(n, i, k), {}, {}, i});
    int universe = s == k ? n - 1 : n;
    for (auto& S : subsets_of_size(universe, n - s + 1))
        out.push_back({reverse_skip_demazure(S, n), S, reverse_composition(skip_composition(S, n)), 0});
    return out;
}

inline std::vector<RationalPolynomial> predicted_groebner(int n, int k, int s)
{
    std::vector<RationalPolynomial> G;
    for (auto& g : predicted_groebner_labeled(n, k, s)) G.push_back(g.poly);
    return G;
}

inline std::vector<RationalPolynomial> predicted_groebner(int n, int k) { return predicted_groebner(n, k, k); }

// For k = n the powers x_1^n..x_{n-1}^n are redundant and are dropped.
inline std::vector<LabeledGenerator> reduced_groebner_labeled(int n, int k)
{
    auto all = predicted_groebner_labeled(n, k, k);
    if (k < n) return all;
    std::vector<LabeledGenerator> out;
    for (auto& g : all)
        if (g.power_index == 0 || g.power_index == n) out.push_back(g);
    return out;
}

inline std::vector<RationalPolynomial> reduced_groebner(int n, int k)
{
    std::vector<RationalPolynomial> G;
    for (auto& g : reduced_groebner_labeled(n, k)) G.push_back(g.poly);
    return G;
}

}  // namespace coinv
