#pragma once
// Univariate integer polynomials in q and the usual q-analogs.

#include <algorithm>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "combinat.hpp"

namespace coinv {

class QPoly {
public:
    QPoly() = default;
    QPoly(long long c) : c_{c} { trim(); }  // NOLINT: constants convert implicitly
    explicit QPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly monomial(int deg, long long c = 1)
    {
        std::vector<long long> v(deg + 1, 0);
        v[deg] = c;
        return QPoly(std::move(v));
    }

    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    long long operator[](int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : 0; }
    long long at_one() const
    {
        long long s = 0;
        for (auto x : c_) s += x;
        return s;
    }
    bool nonnegative() const
    {
        return std::all_of(c_.begin(), c_.end(), [](long long x) { return x >= 0; });
    }

    QPoly& operator+=(const QPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    QPoly operator-() const { return QPoly() - *this; }
    friend QPoly operator*(const QPoly& a, const QPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<long long> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i])
                for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(r));
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    // multiply by q^d
    QPoly shift(int d) const
    {
        if (is_zero()) return {};
        if (d < 0) throw std::invalid_argument("QPoly::shift: negative degree");
        std::vector<long long> r(d, 0);
        r.insert(r.end(), c_.begin(), c_.end());
        return QPoly(std::move(r));
    }

    // q^D p(1/q); D must be at least deg p
    QPoly reversed(int D) const
    {
        if (is_zero()) return {};
        if (D < degree()) throw std::invalid_argument("QPoly::reversed: degree exceeds reversal bound");
        std::vector<long long> r(D + 1, 0);
        for (int i = 0; i <= degree(); ++i) r[D - i] = c_[i];
        return QPoly(std::move(r));
    }

    std::string str() const
    {
        if (is_zero()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            long long c = c_[d];
            if (!c) continue;
            if (!s.empty()) s += c < 0 ? "-" : "+";
            else if (c < 0) s += "-";
            long long a = c < 0 ? -c : c;
            if (d == 0) s += std::to_string(a);
            else {
                if (a != 1) s += std::to_string(a) + "*";
                s += d == 1 ? "q" : "q^" + std::to_string(d);
            }
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

inline QPoly rev_q(const QPoly& p) { return p.reversed(std::max(p.degree(), 0)); }

inline QPoly q_int(int n)
{
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    return QPoly(std::vector<long long>(n, 1));
}

inline QPoly q_factorial(int n)
{
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    QPoly r(1);
    for (int i = 2; i <= n; ++i) r *= q_int(i);
    return r;
}

// q-Pascal: [n,a] = [n-1,a-1] + q^a [n-1,a]
inline QPoly q_binomial(int n, int a)
{
    if (n < 0 || a < 0 || a > n) throw std::invalid_argument("q_binomial: need 0 <= a <= n");
    std::vector<QPoly> row{QPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPoly> next(m + 1);
        next[0] = next[m] = QPoly(1);
        for (int b = 1; b < m; ++b) next[b] = row[b - 1] + row[b].shift(b);
        row = std::move(next);
    }
    return row[a];
}

// zero when the range is invalid; convenient inside sums
inline QPoly q_binomial_or_zero(int n, int a) { return (n < 0 || a < 0 || a > n) ? QPoly() : q_binomial(n, a); }

inline QPoly q_multinomial(int n, const std::vector<int>& parts)
{
    int total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
        total += p;
    }
    if (total != n) throw std::invalid_argument("q_multinomial: parts must sum to n");
    QPoly r(1);
    int left = n;
    for (int p : parts) {
        r *= q_binomial(left, p);
        left -= p;
    }
    return r;
}

inline QPoly q_stirling(int n, int k)
{
    if (n < 1 || k < 1) throw std::invalid_argument("q_stirling: need n, k >= 1");
    if (k > n) return {};
    std::vector<std::vector<QPoly>> t(n + 1, std::vector<QPoly>(k + 1));
    t[1][1] = QPoly(1);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) t[i][j] = t[i - 1][j - 1] + q_int(j) * t[i - 1][j];
    return t[n][k];
}

// Generating function of coinv on OP_{n,k}.
inline QPoly mahonian_target(int n, int k)
{
    if (k < 1 || k > n) throw std::invalid_argument("mahonian_target: need 1 <= k <= n");
    return (q_factorial(k) * q_stirling(n, k)).reversed(osp_max_stat(n, k));
}

// Number of functions [n] -> [k] whose image contains [s].
inline long long difference_count(int n, int k, int s)
{
    if (s < 0 || s > k || n < 0) throw std::invalid_argument("difference_count: need 0 <= s <= k and n >= 0");
    long long total = 0;
    for (int m = 0; m <= n; ++m)
        total += binomial(n, m) * factorial(s) * stirling2(m, s) * ipow(k - s, n - m);
    return total;
}

}  // namespace coinv
