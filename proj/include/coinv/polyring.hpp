#pragma once
// Sparse multivariate polynomials with lex order, division and Buchberger.
// Variables are x_1..x_n; x_1 is the largest variable.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "combinat.hpp"

namespace coinv {

using Rational = mpq_class;

inline constexpr int kMaxVars = 16;

// Exponent vector with a fixed capacity; unused slots stay zero so that lex
// comparison is a plain byte comparison.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n) : n_(check_n(n)) {}
    explicit Monomial(const std::vector<int>& e) : n_(check_n(static_cast<int>(e.size())))
    {
        for (std::size_t i = 0; i < e.size(); ++i) set(static_cast<int>(i) + 1, e[i]);
    }

    int nvars() const { return n_; }
    // 1-based access
    int operator[](int i) const { return e_[i - 1]; }
    void set(int i, int v)
    {
        if (v < 0 || v > 255) throw std::out_of_range("Monomial: exponent out of range");
        e_[i - 1] = static_cast<std::uint8_t>(v);
    }
    void add(int i, int v) { set(i, (*this)[i] + v); }

    int degree() const
    {
        int d = 0;
        for (int i = 0; i < n_; ++i) d += e_[i];
        return d;
    }
    std::vector<int> exponents() const { return {e_.begin(), e_.begin() + n_}; }

    bool divides(const Monomial& o) const
    {
        for (int i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const
    {
        Monomial r(std::max(n_, o.n_));
        for (int i = 0; i < r.n_; ++i) r.e_[i] = checked(e_[i] + o.e_[i]);
        return r;
    }
    // exact quotient; caller guarantees o | *this
    Monomial operator/(const Monomial& o) const
    {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) {
            if (e_[i] < o.e_[i]) throw std::domain_error("Monomial: inexact division");
            r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
        }
        return r;
    }
    Monomial lcm(const Monomial& o) const
    {
        Monomial r(std::max(n_, o.n_));
        for (int i = 0; i < r.n_; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
        return r;
    }
    bool coprime(const Monomial& o) const
    {
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }
    // x_i -> x_{perm[i-1]}
    Monomial permuted(const Word& perm) const
    {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) r.e_[perm[i] - 1] = e_[i];
        return r;
    }
    Monomial reversed() const
    {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) r.e_[n_ - 1 - i] = e_[i];
        return r;
    }

    // lex: compare the first differing exponent
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        int c = std::memcmp(a.e_.data(), b.e_.data(), kMaxVars);
        return c != 0 ? c < 0 : a.n_ < b.n_;
    }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

    std::string str() const
    {
        std::string s;
        for (int i = 0; i < n_; ++i) {
            if (!e_[i]) continue;
            if (!s.empty()) s += '*';
            s += "x" + std::to_string(i + 1);
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    static int check_n(int n)
    {
        if (n < 0 || n > kMaxVars) throw std::out_of_range("Monomial: too many variables");
        return n;
    }
    static std::uint8_t checked(int v)
    {
        if (v > 255) throw std::out_of_range("Monomial: exponent overflow");
        return static_cast<std::uint8_t>(v);
    }
    std::array<std::uint8_t, kMaxVars> e_{};
    int n_ = 0;
};

// Lex-order comparison as -1/0/1.
inline int lex_compare(const Monomial& a, const Monomial& b) { return a < b ? -1 : (b < a ? 1 : 0); }

template <class Coeff>
class Polynomial {
public:
    using TermMap = std::map<Monomial, Coeff, std::greater<>>;  // largest first

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}
    Polynomial(int n, const Coeff& c) : n_(n)
    {
        if (c != 0) t_.emplace(Monomial(n), c);
    }
    Polynomial(const Monomial& m, const Coeff& c = Coeff(1)) : n_(m.nvars())
    {
        if (c != 0) t_.emplace(m, c);
    }
    static Polynomial variable(int n, int i)
    {
        Monomial m(n);
        m.set(i, 1);
        return Polynomial(m);
    }

    int nvars() const { return n_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    Coeff coeff(const Monomial& m) const
    {
        auto it = t_.find(m);
        return it == t_.end() ? Coeff(0) : it->second;
    }
    void add_term(const Monomial& m, const Coeff& c)
    {
        if (c == 0) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    std::pair<Monomial, Coeff> leading_term() const
    {
        if (t_.empty()) throw std::domain_error("leading_term of the zero polynomial");
        return *t_.begin();
    }
    const Monomial& leading_monomial() const
    {
        if (t_.empty()) throw std::domain_error("leading_monomial of the zero polynomial");
        return t_.begin()->first;
    }
    const Coeff& leading_coeff() const
    {
        if (t_.empty()) throw std::domain_error("leading_coeff of the zero polynomial");
        return t_.begin()->second;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        check(o);
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        check(o);
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const
    {
        Polynomial r(n_);
        for (auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check(b);
        Polynomial r(a.n_);
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Coeff& c) const
    {
        Polynomial r(n_);
        if (c == 0) return r;
        for (auto& [m, x] : t_) r.t_.emplace_hint(r.t_.end(), m, x * c);
        return r;
    }
    Polynomial times(const Monomial& mono, const Coeff& c) const
    {
        Polynomial r(n_);
        if (c == 0) return r;
        for (auto& [m, x] : t_) r.t_.emplace_hint(r.t_.end(), m * mono, x * c);  // order preserved
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    Polynomial map_monomials(const std::function<Monomial(const Monomial&)>& f) const
    {
        Polynomial r(n_);
        for (auto& [m, c] : t_) r.add_term(f(m), c);
        return r;
    }

    // Homogeneous component of degree d.
    Polynomial component(int d) const
    {
        Polynomial r(n_);
        for (auto& [m, c] : t_)
            if (m.degree() == d) r.t_.emplace_hint(r.t_.end(), m, c);
        return r;
    }
    int total_degree() const
    {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.degree());
        return d;
    }

private:
    void check(const Polynomial& o) const
    {
        if (o.n_ != n_) throw std::invalid_argument("polynomial ambient variable counts differ");
    }
    TermMap t_;
    int n_ = 0;
};

using RationalPolynomial = Polynomial<Rational>;

inline std::string rational_str(const Rational& c)
{
    return c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Text form such as "x1^2*x3 - 1/2*x2".
inline std::string to_text(const RationalPolynomial& f)
{
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : f.terms()) {
        Rational a = abs(c);
        if (first) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        first = false;
        bool unit = a == 1;
        bool constant = m.degree() == 0;
        if (!unit || constant) s += rational_str(a);
        if (!constant) s += (unit ? "" : "*") + m.str();
    }
    return s;
}

// Parses the text form back; n fixes the ambient variable count.
inline RationalPolynomial parse_polynomial(const std::string& text, int n)
{
    RationalPolynomial f(n);
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos + 1) + ": " + what);
    };
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto number = [&]() -> std::string {
        std::size_t st = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (st == pos) fail("expected a number");
        return text.substr(st, pos - st);
    };
    skip();
    if (text.substr(pos) == "0") return f;
    int sign = 1;
    bool any = false;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (any) {
            fail("expected '+' or '-'");
        }
        Rational c(sign);
        Monomial m(n);
        bool need_factor = true;
        while (need_factor) {
            skip();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                int i = std::stoi(number());
                if (i < 1 || i > n) fail("variable index out of range");
                int e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = std::stoi(number());
                }
                m.add(i, e);
            } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string num = number();
                std::string den = "1";
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = number();
                }
                c *= Rational(mpz_class(num), mpz_class(den));
            } else {
                fail("expected a coefficient or variable");
            }
            skip();
            need_factor = pos < text.size() && text[pos] == '*';
            if (need_factor) ++pos;
        }
        c.canonicalize();
        f.add_term(m, c);
        any = true;
        sign = 1;
    }
    if (!any) fail("empty polynomial");
    return f;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }
inline std::ostream& operator<<(std::ostream& os, const RationalPolynomial& f) { return os << to_text(f); }

// ---- symmetric polynomials in a subset of variables -------------------------

// e_d in the variables listed in vars (1-based indices into n variables).
inline RationalPolynomial elementary(int d, const std::vector<int>& vars, int n)
{
    RationalPolynomial r(n);
    if (d < 0 || d > static_cast<int>(vars.size())) return r;
    for (auto& sub : subsets_of_size(static_cast<int>(vars.size()), d)) {
        Monomial m(n);
        for (int i : sub) m.add(vars[i - 1], 1);
        r.add_term(m, 1);
    }
    return r;
}

inline RationalPolynomial homogeneous(int d, const std::vector<int>& vars, int n)
{
    RationalPolynomial r(n);
    if (d < 0) return r;
    int v = static_cast<int>(vars.size());
    if (v == 0) return d == 0 ? RationalPolynomial(n, 1) : r;
    for (auto& comp : weak_compositions(d, v)) {
        Monomial m(n);
        for (int i = 0; i < v; ++i) m.add(vars[i], comp[i]);
        r.add_term(m, 1);
    }
    return r;
}

inline std::vector<int> all_vars(int n)
{
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

inline RationalPolynomial elementary(int d, int n) { return elementary(d, all_vars(n), n); }
inline RationalPolynomial homogeneous(int d, int n) { return homogeneous(d, all_vars(n), n); }

// ---- division and Groebner bases --------------------------------------------

// Remainder of f on division by G. Terms are processed from the largest
// down; each reducible term is cancelled by the first g whose leading
// monomial divides it.
template <class Coeff>
Polynomial<Coeff> normal_form(const Polynomial<Coeff>& f, const std::vector<Polynomial<Coeff>>& G)
{
    for (auto& g : G)
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
    Polynomial<Coeff> p = f, r(f.nvars());
    while (!p.is_zero()) {
        auto [m, c] = p.leading_term();
        const Polynomial<Coeff>* hit = nullptr;
        for (auto& g : G)
            if (g.leading_monomial().divides(m)) {
                hit = &g;
                break;
            }
        if (hit) {
            p -= hit->times(m / hit->leading_monomial(), c / hit->leading_coeff());
        } else {
            r.add_term(m, c);
            p.add_term(m, -c);
        }
    }
    return r;
}

template <class Coeff>
Polynomial<Coeff> s_polynomial(const Polynomial<Coeff>& f, const Polynomial<Coeff>& g)
{
    Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    return f.times(l / f.leading_monomial(), Coeff(1) / f.leading_coeff()) -
           g.times(l / g.leading_monomial(), Coeff(1) / g.leading_coeff());
}

struct GroebnerCheck {
    bool ok = true;
    std::size_t pairs = 0;
    std::size_t skipped_coprime = 0;
    std::vector<std::pair<std::size_t, std::size_t>> failures;
};

// Every S-polynomial reduces to zero. Pairs with coprime leading monomials are
// skipped only when skip_coprime is set.
template <class Coeff>
GroebnerCheck check_groebner(const std::vector<Polynomial<Coeff>>& G, bool skip_coprime = false)
{
    GroebnerCheck res;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (skip_coprime && G[i].leading_monomial().coprime(G[j].leading_monomial())) {
                ++res.skipped_coprime;
                continue;
            }
            ++res.pairs;
            if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) {
                res.ok = false;
                res.failures.emplace_back(i, j);
            }
        }
    return res;
}

template <class Coeff>
bool is_groebner(const std::vector<Polynomial<Coeff>>& G)
{
    return check_groebner(G).ok;
}

template <class Coeff>
Polynomial<Coeff> make_monic(const Polynomial<Coeff>& f)
{
    return f.is_zero() ? f : f.scaled(Coeff(1) / f.leading_coeff());
}

template <class Coeff>
std::vector<Polynomial<Coeff>> buchberger(const std::vector<Polynomial<Coeff>>& gens);

// Minimal, monic, fully inter-reduced; survivors keep their input order.
// Input that is not yet a Groebner basis is completed first.
template <class Coeff>
std::vector<Polynomial<Coeff>> reduce_gb(const std::vector<Polynomial<Coeff>>& input)
{
    const std::vector<Polynomial<Coeff>> G = is_groebner(input) ? input : buchberger(input);
    std::vector<Polynomial<Coeff>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j || G[j].is_zero()) continue;
            const Monomial& a = G[j].leading_monomial();
            const Monomial& b = G[i].leading_monomial();
            if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(make_monic(G[i]));
    }
    std::vector<Polynomial<Coeff>> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<Coeff>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto lt = minimal[i].leading_term();
        Polynomial<Coeff> tail = minimal[i];
        tail.add_term(lt.first, -lt.second);
        Polynomial<Coeff> g = normal_form(tail, others);
        g.add_term(lt.first, lt.second);
        out.push_back(std::move(g));
    }
    return out;
}

template <class Coeff>
bool is_reduced_gb(const std::vector<Polynomial<Coeff>>& G)
{
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero() || G[i].leading_coeff() != 1) return false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            for (auto& [m, c] : G[j].terms())
                if (G[i].leading_monomial().divides(m)) return false;
        }
    }
    return true;
}

// Buchberger with the coprime criterion and the Gebauer-Moeller chain test;
// the result is reduced.
template <class Coeff>
std::vector<Polynomial<Coeff>> buchberger(const std::vector<Polynomial<Coeff>>& gens)
{
    std::vector<Polynomial<Coeff>> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(make_monic(g));
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    std::set<std::pair<std::size_t, std::size_t>> done;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.emplace_back(i, j);
    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    while (!pending.empty()) {
        // smallest lcm first keeps degrees low
        auto best = std::min_element(pending.begin(), pending.end(), [&](auto& p, auto& q) {
            Monomial lp = G[p.first].leading_monomial().lcm(G[p.second].leading_monomial());
            Monomial lq = G[q.first].leading_monomial().lcm(G[q.second].leading_monomial());
            int dp = lp.degree(), dq = lq.degree();
            return dp != dq ? dp < dq : lp < lq;
        });
        auto [i, j] = *best;
        pending.erase(best);
        done.insert(key(i, j));
        const Monomial& li = G[i].leading_monomial();
        const Monomial& lj = G[j].leading_monomial();
        if (li.coprime(lj)) continue;
        Monomial l = li.lcm(lj);
        bool chain = false;
        for (std::size_t t = 0; t < G.size() && !chain; ++t) {
            if (t == i || t == j) continue;
            if (G[t].leading_monomial().divides(l) && done.count(key(i, t)) && done.count(key(j, t))) chain = true;
        }
        if (chain) continue;
        auto r = normal_form(s_polynomial(G[i], G[j]), G);
        if (r.is_zero()) continue;
        G.push_back(make_monic(r));
        for (std::size_t t = 0; t + 1 < G.size(); ++t) pending.emplace_back(t, G.size() - 1);
    }
    return reduce_gb(G);
}

// Leading monomials of G, sorted.
template <class Coeff>
std::vector<Monomial> leading_monomials(const std::vector<Polynomial<Coeff>>& G)
{
    std::vector<Monomial> out;
    for (auto& g : G) out.push_back(g.leading_monomial());
    std::sort(out.begin(), out.end());
    return out;
}

// ---- ideals -------------------------------------------------------------

struct IdealPresentation {
    int n = 0;
    std::vector<RationalPolynomial> generators;
};

inline RationalPolynomial variable_power(int n, int i, int k)
{
    Monomial m(n);
    m.set(i, k);
    return RationalPolynomial(m);
}

// <x_1^k..x_n^k, e_n, ..., e_{n-s+1}>
inline IdealPresentation ideal_Inks(int n, int k, int s)
{
    if (!(1 <= s && s <= k && k <= n)) throw std::invalid_argument("ideal_Inks: need 1 <= s <= k <= n");
    IdealPresentation I{n, {}};
    for (int i = 1; i <= n; ++i) I.generators.push_back(variable_power(n, i, k));
    for (int d = n; d >= n - s + 1; --d) I.generators.push_back(elementary(d, n));
    return I;
}

inline IdealPresentation ideal_Ink(int n, int k) { return ideal_Inks(n, k, k); }

// ---- vanishing identity ----------------------------------------------------

inline Rational elementary_value(int d, const std::vector<Rational>& v)
{
    // coefficient extraction from prod (1 + t v_i)
    std::vector<Rational> c(v.size() + 1, 0);
    c[0] = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j >= 1; --j) c[j] += c[j - 1] * v[i];
    return d >= 0 && d <= static_cast<int>(v.size()) ? c[d] : Rational(0);
}

inline Rational homogeneous_value(int d, const std::vector<Rational>& v)
{
    if (d < 0) return 0;
    std::vector<Rational> h(d + 1, 0);
    h[0] = 1;
    for (auto& x : v)
        for (int j = 1; j <= d; ++j) h[j] += h[j - 1] * x;
    return h[d];
}

inline void require_distinct(const std::vector<Rational>& alphas)
{
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            if (alphas[i] == alphas[j]) throw std::invalid_argument("vanishing: alphas must be distinct");
}

// sum_{j=0}^r (-1)^j e_{r-j}(beta) h_j(alpha)
inline Rational vanishing_sum(const std::vector<Rational>& alphas, const std::vector<Rational>& betas, int r)
{
    require_distinct(alphas);
    Rational s = 0;
    for (int j = 0; j <= r; ++j) {
        Rational t = elementary_value(r - j, betas) * homogeneous_value(j, alphas);
        s += (j % 2 ? -t : t);
    }
    return s;
}

// sum_{j=0}^r (-1)^j h_j(alpha) e_{r-j}(x_1..x_n)
inline RationalPolynomial vanishing_poly(const std::vector<Rational>& alphas, int r, int n)
{
    require_distinct(alphas);
    RationalPolynomial f(n);
    for (int j = 0; j <= r; ++j) {
        Rational h = homogeneous_value(j, alphas);
        f += elementary(r - j, n).scaled(j % 2 ? Rational(-h) : h);
    }
    return f;
}

}  // namespace coinv
