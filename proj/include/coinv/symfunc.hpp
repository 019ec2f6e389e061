#pragma once
// Symmetric functions with coefficients in Z[q]. Everything is routed through
// the Schur basis; Kostka and Kostka-Foulkes tables come from SSYT enumeration
// and the charge statistic.

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "polyring.hpp"
#include "qseries.hpp"

namespace coinv {

enum class Basis { monomial, elementary, homogeneous, schur, qprime };

inline std::string basis_name(Basis b)
{
    switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::elementary: return "elementary";
    case Basis::homogeneous: return "homogeneous";
    case Basis::schur: return "schur";
    case Basis::qprime: return "qprime";
    }
    return "?";
}

inline Basis parse_basis(const std::string& s)
{
    if (s == "monomial" || s == "m") return Basis::monomial;
    if (s == "elementary" || s == "e") return Basis::elementary;
    if (s == "homogeneous" || s == "h") return Basis::homogeneous;
    if (s == "schur" || s == "s") return Basis::schur;
    if (s == "qprime") return Basis::qprime;
    throw std::invalid_argument("unknown basis '" + s + "'");
}

inline constexpr int kMaxSymDegree = 8;

struct SymFunc {
    Basis basis = Basis::schur;
    int degree = 0;
    std::map<Partition, QPoly> terms;  // zero coefficients never stored

    SymFunc() = default;
    SymFunc(Basis b, int d) : basis(b), degree(d) {}

    QPoly coeff(const Partition& la) const
    {
        auto it = terms.find(la);
        return it == terms.end() ? QPoly() : it->second;
    }
    void add(const Partition& la, const QPoly& c)
    {
        if (size_of(la) != degree) throw std::invalid_argument("SymFunc: partition size differs from degree");
        QPoly& slot = terms[la];
        slot += c;
        if (slot.is_zero()) terms.erase(la);
    }
    SymFunc& operator+=(const SymFunc& o)
    {
        check(o);
        for (auto& [la, c] : o.terms) add(la, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o)
    {
        check(o);
        for (auto& [la, c] : o.terms) add(la, -c);
        return *this;
    }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc scaled(const QPoly& c) const
    {
        SymFunc r(basis, degree);
        for (auto& [la, x] : terms) r.add(la, x * c);
        return r;
    }
    bool is_zero() const { return terms.empty(); }
    int max_q_degree() const
    {
        int d = 0;
        for (auto& [la, c] : terms) d = std::max(d, c.degree());
        return d;
    }
    bool nonnegative() const
    {
        for (auto& [la, c] : terms)
            if (!c.nonnegative()) return false;
        return true;
    }
    // q -> 1
    SymFunc at_q_one() const
    {
        SymFunc r(basis, degree);
        for (auto& [la, c] : terms) r.add(la, QPoly(c.at_one()));
        return r;
    }
    friend bool operator==(const SymFunc& a, const SymFunc& b)
    {
        return a.basis == b.basis && a.degree == b.degree && a.terms == b.terms;
    }

    std::string str() const
    {
        if (terms.empty()) return "0";
        std::string prefix = basis == Basis::schur         ? "s"
                             : basis == Basis::monomial    ? "m"
                             : basis == Basis::elementary  ? "e"
                             : basis == Basis::homogeneous ? "h"
                                                           : "Q'";
        std::string s;
        // largest partitions first
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.str() + ")*" + prefix + "[";
            for (std::size_t i = 0; i < it->first.size(); ++i) s += (i ? "," : "") + std::to_string(it->first[i]);
            s += "]";
        }
        return s;
    }

private:
    void check(const SymFunc& o) const
    {
        if (o.basis != basis || o.degree != degree) throw std::invalid_argument("SymFunc: basis or degree mismatch");
    }
};

inline std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.str(); }

inline SymFunc basis_element(Basis b, const Partition& la, const QPoly& c = QPoly(1))
{
    SymFunc f(b, size_of(la));
    f.add(la, c);
    return f;
}

// ---- tableaux with content ---------------------------------------------------

// Semistandard tableaux of shape la and content mu (a composition), letters
// placed one horizontal strip at a time.
inline std::vector<std::vector<std::vector<int>>> enumerate_ssyt(const Partition& la, const std::vector<int>& mu)
{
    std::vector<std::vector<std::vector<int>>> out;
    if (size_of(la) != size_of(mu)) return out;
    std::vector<std::vector<int>> rows(la.size());
    auto place = [&](auto&& self, std::size_t letter) -> void {
        if (letter == mu.size()) {
            out.push_back(rows);
            return;
        }
        // distribute mu[letter] copies over rows as a horizontal strip
        std::vector<int> old(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) old[r] = static_cast<int>(rows[r].size());
        auto strip = [&](auto&& inner, std::size_t r, int left) -> void {
            if (r == rows.size()) {
                if (left == 0) self(self, letter + 1);
                return;
            }
            int cap = la[r] - old[r];
            if (r > 0) cap = std::min(cap, old[r - 1] - old[r]);
            for (int t = std::min(cap, left); t >= 0; --t) {
                for (int u = 0; u < t; ++u) rows[r].push_back(static_cast<int>(letter) + 1);
                inner(inner, r + 1, left - t);
                rows[r].resize(old[r]);
            }
        };
        strip(strip, 0, mu[letter]);
    };
    place(place, 0);
    return out;
}

// Rows bottom to top, each left to right.
inline Word reading_word(const std::vector<std::vector<int>>& rows)
{
    Word w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

// Lascoux-Schuetzenberger charge of a word whose content is a partition.
// Standard subwords are peeled off by scanning leftward cyclically for
// 1, 2, ...; a letter's index goes up by one whenever the scan wraps.
inline int charge(Word w)
{
    int total = 0;
    while (!w.empty()) {
        int top = *std::max_element(w.begin(), w.end());
        int len = static_cast<int>(w.size());
        std::vector<char> take(len, 0);
        int pos = len;  // scan starts just past the right end
        int index = 0;
        for (int letter = 1; letter <= top; ++letter) {
            int found = -1;
            for (int step = 1; step <= len; ++step) {
                int p = pos - step;
                bool wrapped = p < 0;
                if (wrapped) p += len;
                if (!take[p] && w[p] == letter) {
                    found = p;
                    if (wrapped && letter > 1) ++index;
                    break;
                }
            }
            if (found < 0) throw std::invalid_argument("charge: content is not a partition");
            take[found] = 1;
            total += index;
            pos = found;
        }
        Word rest;
        for (int p = 0; p < len; ++p)
            if (!take[p]) rest.push_back(w[p]);
        w = std::move(rest);
    }
    return total;
}

namespace detail {

struct KostkaTables {
    std::vector<Partition> parts;  // lex decreasing
    std::map<std::pair<Partition, Partition>, long long> K;
    std::map<std::pair<Partition, Partition>, QPoly> KF;
};

inline const KostkaTables& kostka_tables(int d)
{
    if (d < 0 || d > kMaxSymDegree)
        throw std::out_of_range("symmetric function degree above " + std::to_string(kMaxSymDegree));
    static std::mutex mu;
    static std::map<int, KostkaTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    KostkaTables t;
    t.parts = partitions_of(d);
    for (auto& la : t.parts)
        for (auto& nu : t.parts) {
            if (!dominates(la, nu)) continue;
            auto tabs = enumerate_ssyt(la, nu);
            if (tabs.empty()) continue;
            QPoly kf;
            for (auto& T : tabs) kf += QPoly::monomial(charge(reading_word(T)));
            t.K[{la, nu}] = static_cast<long long>(tabs.size());
            t.KF[{la, nu}] = kf;
        }
    return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace detail

inline long long kostka(const Partition& la, const Partition& mu)
{
    if (size_of(la) != size_of(mu)) return 0;
    const auto& t = detail::kostka_tables(size_of(la));
    auto it = t.K.find({la, mu});
    return it == t.K.end() ? 0 : it->second;
}

inline QPoly kostka_foulkes(const Partition& la, const Partition& mu)
{
    if (size_of(la) != size_of(mu)) return {};
    const auto& t = detail::kostka_tables(size_of(la));
    auto it = t.KF.find({la, mu});
    return it == t.KF.end() ? QPoly() : it->second;
}

// Q'_mu = sum_la K_{la,mu}(q) s_la
inline SymFunc qprime(const Partition& mu)
{
    int d = size_of(mu);
    SymFunc f(Basis::schur, d);
    for (auto& la : detail::kostka_tables(d).parts) f.add(la, kostka_foulkes(la, mu));
    return f;
}

// ---- basis changes ------------------------------------------------------------

inline SymFunc to_schur(const SymFunc& F)
{
    const int d = F.degree;
    const auto& t = detail::kostka_tables(d);
    SymFunc out(Basis::schur, d);
    switch (F.basis) {
    case Basis::schur: return F;
    case Basis::homogeneous:  // h_mu = sum K_{la,mu} s_la
        for (auto& [mu, c] : F.terms)
            for (auto& la : t.parts)
                if (long long k = kostka(la, mu)) out.add(la, c * QPoly(k));
        return out;
    case Basis::elementary:  // e_mu = sum K_{la',mu} s_la
        for (auto& [mu, c] : F.terms)
            for (auto& la : t.parts)
                if (long long k = kostka(conjugate(la), mu)) out.add(la, c * QPoly(k));
        return out;
    case Basis::qprime:
        for (auto& [mu, c] : F.terms)
            for (auto& la : t.parts) {
                QPoly k = kostka_foulkes(la, mu);
                if (!k.is_zero()) out.add(la, c * k);
            }
        return out;
    case Basis::monomial: {
        // peel off the lex-largest m_mu with s_mu = m_mu + lower terms
        SymFunc rest = F;
        while (!rest.is_zero()) {
            auto it = std::prev(rest.terms.end());
            Partition mu = it->first;
            QPoly c = it->second;
            out.add(mu, c);
            for (auto& nu : t.parts)
                if (long long k = kostka(mu, nu)) rest.add(nu, -(c * QPoly(k)));
        }
        return out;
    }
    }
    return out;
}

inline SymFunc from_schur(const SymFunc& S, Basis target)
{
    if (S.basis != Basis::schur) throw std::invalid_argument("from_schur: input must be in the Schur basis");
    const int d = S.degree;
    const auto& t = detail::kostka_tables(d);
    SymFunc out(target, d);
    switch (target) {
    case Basis::schur: return S;
    case Basis::monomial:
        for (auto& [la, c] : S.terms)
            for (auto& mu : t.parts)
                if (long long k = kostka(la, mu)) out.add(mu, c * QPoly(k));
        return out;
    case Basis::homogeneous:
    case Basis::qprime: {
        // both are unitriangular with s_la entering only for la >= mu, so
        // peel from the lex-smallest partition upward
        SymFunc rest = S;
        while (!rest.is_zero()) {
            auto it = rest.terms.begin();
            Partition mu = it->first;
            QPoly c = it->second;
            out.add(mu, c);
            SymFunc piece = target == Basis::qprime ? qprime(mu) : to_schur(basis_element(Basis::homogeneous, mu));
            rest -= piece.scaled(c);
        }
        return out;
    }
    case Basis::elementary: {
        // omega swaps e and h
        SymFunc w(Basis::schur, d);
        for (auto& [la, c] : S.terms) w.add(conjugate(la), c);
        SymFunc h = from_schur(w, Basis::homogeneous);
        for (auto& [la, c] : h.terms) out.add(la, c);
        return out;
    }
    }
    return out;
}

inline SymFunc convert(const SymFunc& F, Basis target) { return from_schur(to_schur(F), target); }

inline SymFunc omega(const SymFunc& F)
{
    SymFunc s = to_schur(F);
    SymFunc out(Basis::schur, s.degree);
    for (auto& [la, c] : s.terms) out.add(conjugate(la), c);
    return from_schur(out, F.basis);
}

// Each coefficient c(q) becomes q^D c(1/q).
inline SymFunc rev_q_coeffs(const SymFunc& F, int D)
{
    SymFunc out(F.basis, F.degree);
    for (auto& [la, c] : F.terms) out.add(la, c.reversed(D));
    return out;
}

inline SymFunc rev_q_coeffs(const SymFunc& F) { return rev_q_coeffs(F, F.max_q_degree()); }

// ---- e_j^perp -------------------------------------------------------------

// All mu with la/mu a vertical strip of size j.
inline std::vector<Partition> remove_vertical_strips(const Partition& la, int j)
{
    std::vector<Partition> out;
    Partition mu(la.size());
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == la.size()) {
            if (left == 0) out.push_back(sorted_partition(mu));
            return;
        }
        for (int drop = 0; drop <= std::min(1, left); ++drop) {
            mu[i] = la[i] - drop;
            if (i > 0 && mu[i] > mu[i - 1]) continue;
            self(self, i + 1, left - drop);
        }
    };
    rec(rec, 0, j);
    return out;
}

inline SymFunc e_perp(int j, const SymFunc& F)
{
    if (j < 0) throw std::invalid_argument("e_perp: j must be nonnegative");
    SymFunc s = to_schur(F);
    SymFunc out(Basis::schur, std::max(0, s.degree - j));
    if (j > s.degree) return out;
    for (auto& [la, c] : s.terms)
        for (auto& mu : remove_vertical_strips(la, j)) out.add(mu, c);
    return out;
}

// e_j s_mu by the dual rule: add vertical strips.
inline SymFunc e_times(int j, const SymFunc& F)
{
    SymFunc s = to_schur(F);
    SymFunc out(Basis::schur, s.degree + j);
    for (auto& [mu, c] : s.terms)
        for (auto& la : detail::kostka_tables(s.degree + j).parts)
            for (auto& nu : remove_vertical_strips(la, j))
                if (nu == mu) out.add(la, c);
    return out;
}

// ---- polynomial realizations --------------------------------------------------

// m_mu in n variables: all distinct rearrangements of mu padded with zeros.
inline RationalPolynomial monomial_symmetric(const Partition& mu, int n)
{
    RationalPolynomial r(n);
    if (static_cast<int>(mu.size()) > n) return r;
    std::vector<int> e(mu.begin(), mu.end());
    e.resize(n, 0);
    std::sort(e.begin(), e.end());
    do r.add_term(Monomial(e), 1);
    while (std::next_permutation(e.begin(), e.end()));
    return r;
}

// Expansion in degree-many variables. Coefficients must be free of q.
inline RationalPolynomial to_monomial_polynomial(const SymFunc& F)
{
    SymFunc m = convert(F, Basis::monomial);
    int n = F.degree;
    RationalPolynomial r(n);
    for (auto& [mu, c] : m.terms) {
        if (c.degree() > 0) throw std::invalid_argument("to_monomial_polynomial: coefficient depends on q");
        r += monomial_symmetric(mu, n).scaled(Rational(static_cast<long>(c[0])));
    }
    return r;
}

// Reads m-coefficients back from a symmetric polynomial in at least degree
// variables; the caller vouches for symmetry.
inline SymFunc from_monomial_polynomial(const RationalPolynomial& f, int degree)
{
    SymFunc out(Basis::monomial, degree);
    for (auto& mu : partitions_of(degree)) {
        if (static_cast<int>(mu.size()) > f.nvars()) continue;
        std::vector<int> e(mu.begin(), mu.end());
        e.resize(f.nvars(), 0);
        Rational c = f.coeff(Monomial(e));
        if (c.get_den() != 1) throw std::domain_error("from_monomial_polynomial: non-integral coefficient");
        out.add(mu, QPoly(c.get_num().get_si()));
    }
    return out;
}

inline bool is_symmetric(const RationalPolynomial& f)
{
    int n = f.nvars();
    for (int i = 1; i < n; ++i) {
        Word t(n);
        for (int a = 1; a <= n; ++a) t[a - 1] = a;
        std::swap(t[i - 1], t[i]);
        if (!(f.map_monomials([&](const Monomial& m) { return m.permuted(t); }) == f)) return false;
    }
    return true;
}

// Gessel's fundamental quasisymmetric function in N variables: sums over
// i_1 <= ... <= i_n with i_j < i_{j+1} whenever j is in D.
inline RationalPolynomial fundamental_to_monomials(int n, const std::vector<int>& D, int N)
{
    std::vector<char> strict(n + 1, 0);
    for (int j : D) {
        if (j < 1 || j >= n) throw std::invalid_argument("fundamental: descent outside [n-1]");
        strict[j] = 1;
    }
    RationalPolynomial r(N);
    Monomial m(N);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos > n) {
            r.add_term(m, 1);
            return;
        }
        for (int v = lo; v <= N; ++v) {
            m.add(v, 1);
            self(self, pos + 1, strict[pos] ? v + 1 : v);
            m.add(v, -1);
        }
    };
    rec(rec, 1, 1);
    return r;
}

// ---- characters -------------------------------------------------------------

inline long long centralizer_size(const Partition& la)
{
    long long z = 1;
    auto m = multiplicities(la);
    for (std::size_t i = 0; i < m.size(); ++i) z *= ipow(static_cast<long long>(i) + 1, m[i]) * factorial(m[i]);
    return z;
}

inline long long class_size(const Partition& la) { return factorial(size_of(la)) / centralizer_size(la); }

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from b to b-r, with sign given by the beads jumped over.
inline long long sn_character(const Partition& la, const Partition& rho)
{
    static std::mutex mu;
    static std::map<std::pair<Partition, Partition>, long long> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({la, rho});
        if (it != memo.end()) return it->second;
    }
    long long val = 0;
    if (rho.empty()) {
        val = la.empty() ? 1 : 0;
    } else {
        int r = rho[0];
        Partition tail(rho.begin() + 1, rho.end());
        int l = static_cast<int>(la.size());
        std::vector<int> beta(l);
        for (int i = 0; i < l; ++i) beta[i] = la[i] + (l - 1 - i);
        for (int i = 0; i < l; ++i) {
            int nb = beta[i] - r;
            if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
            int jumped = 0;
            for (int b : beta)
                if (b > nb && b < beta[i]) ++jumped;
            std::vector<int> nbeta = beta;
            nbeta[i] = nb;
            std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
            Partition nla(l);
            for (int t = 0; t < l; ++t) nla[t] = nbeta[t] - (l - 1 - t);
            val += (jumped % 2 ? -1 : 1) * sn_character(sorted_partition(nla), tail);
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    memo[{la, rho}] = val;
    return val;
}

using ClassFunction = std::map<Partition, QPoly>;  // cycle type -> value

struct FrobeniusResult {
    SymFunc image;
    bool consistent = true;  // integral, nonnegative multiplicities
};

// (1/n!) sum over classes |C| chi(C) p_C, expanded in Schur functions.
inline FrobeniusResult frobenius(const ClassFunction& chi, int n)
{
    FrobeniusResult res{SymFunc(Basis::schur, n), true};
    long long nf = factorial(n);
    int top = 0;
    for (auto& [rho, v] : chi) top = std::max(top, v.degree());
    auto classes = partitions_of(n);
    for (auto& rho : classes)
        if (!chi.count(rho)) throw std::invalid_argument("frobenius: class function misses a cycle type");
    for (auto& la : classes) {
        std::vector<long long> c(top + 1, 0);
        for (int d = 0; d <= top; ++d) {
            long long num = 0;
            for (auto& rho : classes) num += class_size(rho) * sn_character(la, rho) * chi.at(rho)[d];
            if (num % nf != 0) res.consistent = false;
            c[d] = num / nf;
            if (c[d] < 0) res.consistent = false;
        }
        res.image.add(la, QPoly(c));
    }
    return res;
}

}  // namespace coinv
