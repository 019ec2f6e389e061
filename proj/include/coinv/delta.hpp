#pragma once
// C_{n,k} and D_{n,k} at t = 0, and the independent routes to the graded
// Frobenius image of R_{n,k}.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "parallel.hpp"
#include "qseries.hpp"
#include "quotient.hpp"
#include "symfunc.hpp"

namespace coinv {

inline void check_nk(int n, int k, int max_n, const char* who)
{
    if (k < 1 || k > n || n > max_n)
        throw std::invalid_argument(std::string(who) + ": need 1 <= k <= n <= " + std::to_string(max_n));
}

// Sum over weak compositions gamma of n (n parts) and k-block OMPs of content
// gamma of q^inv x^gamma. Symmetry is checked on every content, not assumed.
inline SymFunc c_nk(int n, int k)
{
    check_nk(n, k, 6, "c_nk");
    std::map<Partition, QPoly> by_sorted;
    SymFunc m(Basis::monomial, n);
    for (auto& gamma : weak_compositions(n, n)) {
        QPoly w;
        for (auto& mu : enumerate_omps(gamma, k)) w += QPoly::monomial(inv_omp(mu));
        Partition la = sorted_partition(gamma);
        auto it = by_sorted.find(la);
        if (it == by_sorted.end())
            by_sorted.emplace(la, w);
        else if (!(it->second == w))
            throw std::logic_error("c_nk: generating function is not symmetric");
    }
    for (auto& [la, w] : by_sorted) m.add(la, w);
    return to_schur(m);
}

inline int delta_reversal_degree(int n, int k) { return osp_max_stat(n, k); }

inline SymFunc d_nk(int n, int k) { return omega(rev_q_coeffs(c_nk(n, k), delta_reversal_degree(n, k))); }

// Sum over OP_{n,k} of q^coinv F_{iDes(revword)}, grouped by descent set first.
inline SymFunc d_nk_fundamental(int n, int k)
{
    check_nk(n, k, 6, "d_nk_fundamental");
    std::map<std::vector<int>, QPoly> by_descents;
    for (auto& s : enumerate_osps(n, k))
        by_descents[inverse_descent_set(revword(s.blocks()))] += QPoly::monomial(coinv_osp(s));
    SymFunc m(Basis::monomial, n);
    for (auto& [D, w] : by_descents) {
        SymFunc f = from_monomial_polynomial(fundamental_to_monomials(n, D, n), n);
        m += f.scaled(w);
    }
    return to_schur(m);
}

inline SymFunc grfrob_syt(int n, int k)
{
    check_nk(n, k, 7, "grfrob_syt");
    SymFunc out(Basis::schur, n);
    for (auto& T : enumerate_syt(n)) {
        QPoly b = q_binomial_or_zero(n - T.des() - 1, n - k);
        if (!b.is_zero()) out.add(T.shape(), b.shift(T.maj()));
    }
    return out;
}

inline SymFunc grfrob_hl(int n, int k)
{
    check_nk(n, k, 6, "grfrob_hl");
    SymFunc out(Basis::schur, n);
    for (auto& la : partitions_of(n)) {
        if (static_cast<int>(la.size()) != k) continue;
        int e = 0;
        for (int i = 0; i < k; ++i) e += i * (la[i] - 1);
        QPoly c = q_multinomial(k, multiplicities(la)).shift(e);
        out += qprime(la).scaled(c);
    }
    return rev_q_coeffs(out, delta_reversal_degree(n, k));
}

inline FrobeniusResult grfrob_bruteforce(int n, int k)
{
    check_nk(n, k, 6, "grfrob_bruteforce");
    auto ch = graded_character(n, k, k);
    auto fr = frobenius(ch.values, n);
    fr.consistent = fr.consistent && ch.consistent;
    return fr;
}

inline SymFunc ungraded_frob(int n, int k)
{
    check_nk(n, k, 7, "ungraded_frob");
    SymFunc h(Basis::homogeneous, n);
    for (auto& la : partitions_of(n)) {
        if (static_cast<int>(la.size()) != k) continue;
        long long c = factorial(k);
        for (int m : multiplicities(la)) c /= factorial(m);
        h.add(la, QPoly(c));
    }
    return h;
}

// D_{0,0} = 1; D_{n,k} = 0 for other k outside 1..n.
inline SymFunc d_nk_or_trivial(int n, int k)
{
    if (n == 0) {
        SymFunc one(Basis::schur, 0);
        if (k == 0) one.add({}, QPoly(1));
        return one;
    }
    if (k < 1 || k > n) return SymFunc(Basis::schur, n);
    return d_nk(n, k);
}

struct SymPair {
    SymFunc lhs, rhs;
    bool equal() const { return lhs == rhs; }
};

// m runs from max(0, k-j); the m = 0 term only matters when j = n = k, where
// it carries D_{0,0} = 1.
inline SymPair e_perp_recursion_check(int n, int k, int j)
{
    check_nk(n, k, 6, "e_perp_recursion_check");
    if (j < 1 || j > n) throw std::invalid_argument("e_perp_recursion_check: need 1 <= j <= n");
    SymPair p{e_perp(j, d_nk(n, k)), SymFunc(Basis::schur, n - j)};
    QPoly front = q_binomial_or_zero(k, j).shift(j * (j - 1) / 2);
    if (front.is_zero()) return p;
    for (int m = std::max(0, k - j); m <= std::min(k, n - j); ++m) {
        QPoly c = q_binomial_or_zero(j, k - m).shift((k - m) * (n - j - m)) * front;
        if (c.is_zero()) continue;
        p.rhs += d_nk_or_trivial(n - j, m).scaled(c);
    }
    return p;
}

struct DeltaResult {
    int n = 0, k = 0;
    SymFunc c_nk, d_nk;
    std::map<std::string, SymFunc> routes;  // route name -> Schur expansion
    bool consistent = true;                 // brute-force character was integral and nonnegative

    bool all_agree() const
    {
        for (auto& [name, f] : routes)
            if (!(f == d_nk)) return false;
        return consistent;
    }
};

inline const std::vector<std::string>& route_names()
{
    static const std::vector<std::string> names{"delta", "fundamental", "syt", "hl", "bruteforce"};
    return names;
}

inline SymFunc compute_route(const std::string& route, int n, int k, bool* consistent = nullptr)
{
    if (route == "delta") return d_nk(n, k);
    if (route == "fundamental") return d_nk_fundamental(n, k);
    if (route == "syt") return grfrob_syt(n, k);
    if (route == "hl") return grfrob_hl(n, k);
    if (route == "bruteforce") {
        auto fr = grfrob_bruteforce(n, k);
        if (consistent) *consistent = fr.consistent;
        return fr.image;
    }
    throw std::invalid_argument("unknown route '" + route + "'");
}

// Routes run independently; results land in a fixed order.
inline DeltaResult delta_result(int n, int k, const std::vector<std::string>& routes = route_names())
{
    check_nk(n, k, 6, "delta_result");
    DeltaResult r;
    r.n = n;
    r.k = k;
    r.c_nk = c_nk(n, k);
    r.d_nk = omega(rev_q_coeffs(r.c_nk, delta_reversal_degree(n, k)));
    std::vector<SymFunc> out(routes.size());
    std::vector<char> ok(routes.size(), 1);
    parallel_for(routes.size(), [&](std::size_t i) {
        bool c = true;
        out[i] = compute_route(routes[i], n, k, &c);
        ok[i] = c;
    });
    for (std::size_t i = 0; i < routes.size(); ++i) {
        r.routes[routes[i]] = out[i];
        if (!ok[i]) r.consistent = false;
    }
    return r;
}

}  // namespace coinv
