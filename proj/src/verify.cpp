#include "coinv/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coinv/delta.hpp"
#include "coinv/demazure.hpp"
#include "coinv/quotient.hpp"

namespace coinv {

namespace {

void add(VerifyReport& r, const std::string& theorem, json params, bool pass, std::string detail = {})
{
    r.entries.push_back({theorem, std::move(params), pass, pass ? std::string() : std::move(detail)});
}

json nks(int n, int k, int s) { return json{{"n", n}, {"k", k}, {"s", s}}; }
json nk(int n, int k) { return json{{"n", n}, {"k", k}}; }

std::string mismatch(const std::string& a, const std::string& b) { return a + " != " + b; }

}  // namespace

std::vector<std::string> VerifyReport::theorems() const
{
    std::vector<std::string> out;
    for (auto& e : entries)
        if (std::find(out.begin(), out.end(), e.theorem) == out.end()) out.push_back(e.theorem);
    return out;
}

json VerifyReport::to_json() const
{
    json list = json::array();
    for (auto& e : entries) {
        json j{{"theorem", e.theorem}, {"params", e.params}, {"pass", e.pass}};
        if (!e.pass) j["detail"] = e.detail;
        list.push_back(j);
    }
    json summary = json::object();
    for (auto& t : theorems()) {
        int pass = 0, fail = 0;
        for (auto& e : entries)
            if (e.theorem == t) (e.pass ? pass : fail)++;
        summary[t] = {{"pass", pass}, {"fail", fail}};
    }
    return json{{"max_n", max_n}, {"all_pass", all_pass()}, {"summary", summary}, {"entries", list}};
}

std::string VerifyReport::text() const
{
    std::ostringstream os;
    for (auto& t : theorems()) {
        int pass = 0, fail = 0;
        for (auto& e : entries)
            if (e.theorem == t) (e.pass ? pass : fail)++;
        os << (fail ? "FAIL " : "ok   ") << t << "  (" << pass << " passed, " << fail << " failed)\n";
        for (auto& e : entries)
            if (e.theorem == t && !e.pass) os << "     " << e.params.dump() << ": " << e.detail << "\n";
    }
    os << (all_pass() ? "all checks passed" : "some checks FAILED") << " (max n = " << max_n << ")\n";
    return os.str();
}

void verify_hilbert_series(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            QPoly h = hilbert_series(n, k), t = mahonian_target(n, k);
            add(r, "hilbert-series", nk(n, k), h == t, mismatch(h.str(), t.str()));
        }
}

void verify_difference_count(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            for (int s = 1; s <= k; ++s) {
                long long got = static_cast<long long>(nonskip_monomials(n, k, s).size());
                long long want = difference_count(n, k, s);
                long long pinned = static_cast<long long>(enumerate_pinned_osps(n, k, s).size());
                add(r, "difference-count", nks(n, k, s), got == want && got == pinned,
                    std::to_string(got) + " standard monomials, " + std::to_string(want) + " predicted, " +
                        std::to_string(pinned) + " pinned partitions");
            }
}

void verify_pascal_recursion(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        for (int k = 2; k <= n; ++k)
            for (int s = 1; s < k; ++s) {
                QPoly lhs = hilbert_series(n, k, s);
                QPoly rhs = hilbert_series(n, k, s + 1) + hilbert_series(n, k - 1, s).shift(n - s);
                add(r, "pascal-recursion", nks(n, k, s), lhs == rhs, mismatch(lhs.str(), rhs.str()));
            }
}

void verify_artin_basis(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            auto A = artin_monomials(n, k);
            auto M = nonskip_monomials(n, k, k);
            bool ok = std::set<Monomial>(A.begin(), A.end()) == std::set<Monomial>(M.begin(), M.end());
            add(r, "artin-basis", nk(n, k), ok,
                std::to_string(A.size()) + " staircase monomials vs " + std::to_string(M.size()) + " nonskip");
        }
}

void verify_groebner(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        for (int k = 1; k <= n; ++k)
            for (int s = 1; s <= k; ++s) {
                auto G = predicted_groebner(n, k, s);
                auto chk = check_groebner(G);
                std::string why = std::to_string(chk.failures.size()) + " of " + std::to_string(chk.pairs) +
                                  " S-polynomials do not reduce to 0";
                bool ok = chk.ok;
                if (ok && s == k) {
                    bool red = is_reduced_gb(reduced_groebner(n, k));
                    if (k < n) red = red && is_reduced_gb(G);
                    if (!red) why = "not reduced";
                    ok = red;
                }
                add(r, "groebner", nks(n, k, s), ok, why);
            }
}

void verify_reduced_demazure(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        for (int size = 1; size <= n; ++size) {
            int k = n - size + 1;
            auto subsets = subsets_of_size(n, size);
            std::vector<RationalPolynomial> polys;
            for (auto& S : subsets) polys.push_back(reverse_skip_demazure(S, n));
            bool ok = true;
            std::string why;
            for (std::size_t a = 0; a < subsets.size() && ok; ++a) {
                const auto& S = subsets[a];
                Monomial xs = skip_monomial(S, n);
                if (!(polys[a].leading_monomial() == xs)) {
                    ok = false;
                    why = "leading term differs from the skip monomial";
                    break;
                }
                int bound = S.back() - n + k + 1;
                for (auto& [m, c] : polys[a].terms())
                    for (int i = 1; i <= n; ++i)
                        if (m[i] >= bound) {
                            ok = false;
                            why = "a monomial is divisible by x_" + std::to_string(i) + "^" + std::to_string(bound);
                        }
                for (std::size_t b = 0; b < subsets.size() && ok; ++b) {
                    if (a == b) continue;
                    for (auto& [m, c] : polys[b].terms())
                        if (xs.divides(m)) {
                            ok = false;
                            why = "a skip monomial divides a term of another generator";
                            break;
                        }
                }
            }
            add(r, "reduced-demazure", nk(n, k), ok, why);
        }
}

void verify_gs_basis(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        for (int k = 1; k <= n; ++k) {
            auto gs = gs_monomials(n, k);
            QPoly h = hilbert_series(n, k);
            std::set<Monomial> distinct(gs.begin(), gs.end());
            bool count = distinct.size() == gs.size() && static_cast<long long>(gs.size()) == factorial(k) * stirling2(n, k);
            bool degrees = degree_series(gs) == h;
            QPoly rank = rank_series(Quotient(n, k), gs);
            bool independent = rank == h;
            std::string why = !count ? "wrong count" : !degrees ? "degree distribution differs" : "rank " + rank.str();
            add(r, "gs-basis", nk(n, k), count && degrees && independent, why);
        }
}

void verify_psi_bijection(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            auto osps = enumerate_osps(n, k);
            auto M = nonskip_monomials(n, k, k);
            std::vector<Monomial> img(osps.size());
            std::vector<char> good(osps.size(), 1);
            parallel_for(osps.size(), [&](std::size_t i) {
                img[i] = psi(osps[i]);
                good[i] = img[i].degree() == coinv_osp(osps[i]) && is_nonskip(img[i], k, k) && phi(img[i], k) == osps[i];
            });
            std::set<Monomial> seen(img.begin(), img.end());
            bool ok = std::all_of(good.begin(), good.end(), [](char c) { return c; }) && seen.size() == M.size() &&
                      seen.size() == osps.size();
            add(r, "psi-bijection", nk(n, k), ok,
                std::to_string(seen.size()) + " images for " + std::to_string(osps.size()) + " partitions");
        }
}

void verify_demazure_identity(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        for (int k = 1; k <= n; ++k) {
            auto subsets = subsets_of_size(n, n - k + 1);
            std::vector<char> ok(subsets.size(), 1);
            parallel_for(subsets.size(), [&](std::size_t i) { ok[i] = demazure_identity_check(subsets[i], n, k).equal(); });
            int bad = static_cast<int>(std::count(ok.begin(), ok.end(), 0));
            add(r, "demazure-identity", nk(n, k), bad == 0, std::to_string(bad) + " subsets fail");
        }
}

// Compositions with 1..4 parts and size <= max_size, d <= min(3, parts).
void verify_dual_pieri(VerifyReport& r, int max_size)
{
    for (int parts = 1; parts <= 4; ++parts)
        for (int d = 1; d <= std::min(3, parts); ++d) {
            std::vector<Composition> gammas;
            for (int size = 0; size <= max_size; ++size)
                for (auto& g : weak_compositions(size, parts)) gammas.push_back(g);
            std::vector<char> ok(gammas.size(), 1);
            parallel_for(gammas.size(), [&](std::size_t i) { ok[i] = dual_pieri(gammas[i], d).equal(); });
            int bad = static_cast<int>(std::count(ok.begin(), ok.end(), 0));
            add(r, "dual-pieri", json{{"parts", parts}, {"d", d}, {"max_size", max_size}}, bad == 0,
                std::to_string(bad) + " compositions fail");
        }
}

void verify_graded_frobenius(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<std::string> routes{"delta", "fundamental", "syt", "hl"};
            if (n <= 5) routes.push_back("bruteforce");
            auto res = delta_result(n, k, routes);
            std::string why;
            for (auto& [name, f] : res.routes)
                if (!(f == res.d_nk)) why += name + " disagrees; ";
            if (!res.consistent) why += "character is not a genuine representation; ";
            if (!res.d_nk.nonnegative()) why += "negative coefficient; ";
            if (!(to_schur(ungraded_frob(n, k)) == res.d_nk.at_q_one())) why += "ungraded image differs; ";
            add(r, "graded-frobenius", nk(n, k), why.empty(), why);
        }
}

void verify_e_perp_recursion(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= n; ++j) {
                auto p = e_perp_recursion_check(n, k, j);
                add(r, "e-perp-recursion", json{{"n", n}, {"k", k}, {"j", j}}, p.equal(),
                    mismatch(p.lhs.str(), p.rhs.str()));
            }
}

void verify_antisymmetrization(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        for (int k = 1; k <= n; ++k) {
            Quotient q(n, k);
            for (int j = 1; j <= n; ++j) {
                QPoly a = antisymmetrize_hilbert(q, j), b = antisymmetrize_target(n, k, j);
                add(r, "antisymmetrization", json{{"n", n}, {"k", k}, {"j", j}}, a == b, mismatch(a.str(), b.str()));
            }
        }
}

void verify_mahonian(VerifyReport& r, int max_n)
{
    for (int n = 1; n <= max_n + 1 && n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            QPoly inv, maj;
            bool pairs = true;
            for (auto& s : enumerate_osps(n, k)) {
                inv += QPoly::monomial(inv_osp(s));
                maj += QPoly::monomial(maj_osp(s));
                pairs = pairs && coinv_pairs(s) == coinv_osp(s);
            }
            QPoly t = q_factorial(k) * q_stirling(n, k);
            add(r, "mahonian", nk(n, k), inv == t && maj == t && pairs,
                "inv " + inv.str() + ", maj " + maj.str() + ", target " + t.str());
        }
}

void verify_straightening(VerifyReport& r, int max_n)
{
    int vars = std::min(max_n, 4);
    int bad = 0, total = 0;
    for (int d = 0; d <= 4; ++d)
        for (auto& c : weak_compositions(d, vars)) {
            ++total;
            if (!straighten_check(Monomial(c))) ++bad;
        }
    add(r, "straightening", json{{"vars", vars}, {"max_degree", 4}}, bad == 0,
        std::to_string(bad) + " of " + std::to_string(total) + " monomials fail");
}

VerifyReport verify_suite(int max_n)
{
    if (max_n < 1 || max_n > 6) throw std::invalid_argument("verify_suite: max_n must lie in 1..6");
    VerifyReport r;
    r.max_n = max_n;
    verify_hilbert_series(r, max_n);
    verify_artin_basis(r, max_n);
    verify_groebner(r, max_n);
    verify_reduced_demazure(r, max_n);
    verify_gs_basis(r, max_n);
    verify_psi_bijection(r, max_n);
    verify_demazure_identity(r, max_n);
    verify_dual_pieri(r, std::min(max_n + 1, 6));
    verify_graded_frobenius(r, max_n);
    verify_e_perp_recursion(r, max_n);
    verify_pascal_recursion(r, max_n);
    verify_difference_count(r, max_n);
    verify_antisymmetrization(r, max_n);
    verify_mahonian(r, max_n);
    verify_straightening(r, max_n);
    return r;
}

}  // namespace coinv
