// coinv: command-line front end. Exit codes: 0 ok, 1 a verification failed,
// 2 bad arguments.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coinv/delta.hpp"
#include "coinv/demazure.hpp"
#include "coinv/io.hpp"
#include "coinv/quotient.hpp"
#include "coinv/verify.hpp"

using namespace coinv;

namespace {

struct BadArgs : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Output {
    json data;
    std::string text;
    bool failed = false;  // a verification inside the command did not hold
};

void need(bool cond, const std::string& what)
{
    if (!cond) throw BadArgs(what);
}

void check_range(int n, int k, int s, int max_n)
{
    need(1 <= s && s <= k && k <= n, "need 1 <= s <= k <= n");
    need(n <= max_n, "n must be at most " + std::to_string(max_n) + " for this command");
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            need(used == item.size() && v >= 0, "bad entry '" + item + "' in list '" + text + "'");
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw BadArgs("bad entry '" + item + "' in list '" + text + "'");
        }
    }
    need(!out.empty(), "empty list");
    return out;
}

std::string monomial_lines(const std::vector<Monomial>& ms)
{
    std::string s;
    for (auto& m : ms) s += m.str() + "\n";
    return s;
}

// ---- verbs ----------------------------------------------------------------

Output run_hilb(int n, int k, std::optional<int> s_opt)
{
    int s = s_opt.value_or(k);
    check_range(n, k, s, 9);
    QPoly h = hilbert_series(n, k, s);
    return {to_json(h), h.str() + "\n"};
}

Output run_basis(int n, int k, std::optional<int> s_opt, const std::string& kind)
{
    int s = s_opt.value_or(k);
    check_range(n, k, s, 8);
    std::vector<Monomial> ms;
    if (kind == "nonskip") {
        ms = nonskip_monomials(n, k, s);
    } else {
        need(s == k, "--s only applies to --kind nonskip");
        ms = kind == "artin" ? artin_monomials(n, k) : gs_monomials(n, k);
    }
    json j{{"kind", kind}, {"n", n}, {"k", k}, {"s", s}, {"count", ms.size()}, {"monomials", to_json(ms)}};
    return {j, monomial_lines(ms)};
}

Output run_groebner(int n, int k, std::optional<int> s_opt, bool check, bool reduced)
{
    int s = s_opt.value_or(k);
    check_range(n, k, s, 6);
    need(!reduced || s == k, "--reduced needs s = k");
    auto gens = reduced ? reduced_groebner_labeled(n, k) : predicted_groebner_labeled(n, k, s);
    json arr = json::array();
    std::string text;
    std::vector<RationalPolynomial> G;
    for (auto& g : gens) {
        json e{{"polynomial", to_json(g.poly)}, {"text", to_text(g.poly)}};
        if (g.power_index) {
            e["kind"] = "power";
            e["variable"] = g.power_index;
            text += "x" + std::to_string(g.power_index) + "^" + std::to_string(k) + "\n";
        } else {
            e["kind"] = "demazure";
            e["subset"] = g.S;
            e["label"] = g.label;
            std::string lab;
            for (int x : g.label) lab += std::to_string(x);
            text += "kappa_" + lab + "(reversed): " + to_text(g.poly) + "\n";
        }
        arr.push_back(e);
        G.push_back(g.poly);
    }
    Output out{json{{"n", n}, {"k", k}, {"s", s}, {"generators", arr}}, text};
    if (check) {
        auto c = check_groebner(G);
        bool red = is_reduced_gb(G);
        out.data["check"] = {{"groebner", c.ok}, {"pairs", c.pairs}, {"failures", c.failures.size()}, {"reduced", red}};
        out.text += std::string("S-polynomials: ") + (c.ok ? "all reduce to 0" : "FAIL") + " (" +
                    std::to_string(c.pairs) + " pairs)\nreduced: " + (red ? "yes" : "no") + "\n";
        out.failed = !c.ok;
    }
    return out;
}

Output run_frobenius(int n, int k, const std::string& route)
{
    check_range(n, k, k, 6);
    std::vector<std::string> routes;
    if (route == "all") routes = route_names();
    else routes = {route};
    auto res = delta_result(n, k, routes);
    json rj = json::object();
    std::string text;
    for (auto& name : routes) {
        rj[name] = to_json(res.routes.at(name));
        text += name + ": " + res.routes.at(name).str() + "\n";
    }
    json agree = json::object();
    bool all = true;
    for (auto& a : routes)
        for (auto& b : routes) {
            bool eq = res.routes.at(a) == res.routes.at(b);
            agree[a][b] = eq;
            all = all && eq;
        }
    all = all && res.routes.begin()->second == res.d_nk && res.consistent;
    json j{{"n", n}, {"k", k}, {"routes", rj}, {"agreement", agree}, {"all_agree", all}};
    text += std::string("agreement: ") + (all ? "yes" : "NO") + "\n";
    return {j, text, !all};
}

json step_json(const PsiStep& st)
{
    return json{{"letter", st.letter}, {"insertion", st.bar ? "bar" : "star"}, {"block", st.block + 1},
                {"skip_set", st.S}, {"monomial", to_json(st.monomial)}, {"text", st.monomial.str()}};
}

Output run_bijection(int n, int k, const std::string& osp_text, const std::string& mono_text)
{
    need(1 <= k && k <= n && n <= kMaxVars, "need 1 <= k <= n <= " + std::to_string(kMaxVars));
    need(osp_text.empty() || mono_text.empty(), "give at most one of --osp and --monomial");
    if (!osp_text.empty()) {
        OrderedSetPartition sigma;
        try {
            sigma = OrderedSetPartition::parse(osp_text);
        } catch (const std::invalid_argument& e) {
            throw BadArgs(e.what());
        }
        need(sigma.n() == n && sigma.k() == k, "--osp is not in OP_{n,k} for the given n and k");
        auto steps = psi_trace(sigma);
        Monomial m = steps.back().monomial;
        OrderedSetPartition back = phi(m, k);
        json sj = json::array();
        std::string text;
        for (auto& st : steps) {
            sj.push_back(step_json(st));
            text += std::to_string(st.letter) + (st.bar ? " bar " : " star ") + "block " + std::to_string(st.block + 1);
            if (st.bar) {
                text += " S={";
                for (std::size_t i = 0; i < st.S.size(); ++i) text += (i ? "," : "") + std::to_string(st.S[i]);
                text += "}";
            }
            text += "  " + st.monomial.str() + "\n";
        }
        bool ok = back == sigma && m.degree() == coinv_osp(sigma);
        text += "psi = " + m.str() + "\nphi(psi) = " + back.str() + "\n";
        json j{{"osp", sigma.str()},   {"coinv", coinv_osp(sigma)}, {"monomial", to_json(m)},
               {"text", m.str()},      {"steps", sj},                {"inverse", back.str()},
               {"round_trip", ok}};
        return {j, text, !ok};
    }
    if (!mono_text.empty()) {
        auto e = parse_int_list(mono_text);
        need(static_cast<int>(e.size()) == n, "--monomial needs n exponents");
        Monomial m(e);
        need(is_nonskip(m, k, k), "--monomial is not a standard monomial of R_{n,k}");
        OrderedSetPartition sigma = phi(m, k);
        bool ok = psi(sigma) == m;
        json j{{"monomial", to_json(m)}, {"osp", sigma.str()}, {"round_trip", ok}};
        return {j, "phi = " + sigma.str() + "\n", !ok};
    }
    need(n <= 7, "listing the whole bijection needs n <= 7");
    json arr = json::array();
    std::string text;
    bool ok = true;
    for (auto& sigma : enumerate_osps(n, k)) {
        Monomial m = psi(sigma);
        ok = ok && phi(m, k) == sigma && m.degree() == coinv_osp(sigma);
        arr.push_back({{"osp", sigma.str()}, {"monomial", to_json(m)}});
        text += sigma.str() + " -> " + m.str() + "\n";
    }
    return {json{{"n", n}, {"k", k}, {"pairs", arr}, {"round_trip", ok}}, text, !ok};
}

Output run_demazure(const std::string& gamma_text, bool reversed)
{
    Composition g = parse_int_list(gamma_text);
    need(static_cast<int>(g.size()) <= kMaxVars, "too many parts");
    need(size_of(g) <= 12, "composition too large");
    // reversed: kappa_{gamma*}(x_n^*), the Groebner generator when gamma = gamma(S)
    RationalPolynomial f = reversed ? reverse_vars(demazure_char(reverse_composition(g))) : demazure_char(g);
    json j{{"gamma", g}, {"reversed", reversed}, {"polynomial", to_json(f)}, {"text", to_text(f)}};
    return {j, to_text(f) + "\n"};
}

Output run_verify(const std::string& suite, int max_n)
{
    need(suite == "all", "only --suite all is available");
    need(1 <= max_n && max_n <= 6, "--max-n must lie in 1..6");
    auto r = verify_suite(max_n);
    return {r.to_json(), r.text(), !r.all_pass()};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coinvariant-type quotient rings: bases, Groebner bases, Frobenius images"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json", out_path;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write output to this file");

    int n = 0, k = 0, max_n = 5;
    std::optional<int> s;
    std::string kind = "nonskip", route = "all", osp, mono, gamma, suite = "all";
    bool check = false, reduced = false, rev = false;

    auto* hilb = app.add_subcommand("hilb", "Hilbert series of R_{n,k,s}");
    auto* basis = app.add_subcommand("basis", "monomial bases");
    auto* groeb = app.add_subcommand("groebner", "predicted Groebner basis");
    auto* frob = app.add_subcommand("frobenius", "graded Frobenius image by route");
    auto* bij = app.add_subcommand("bijection", "insertion bijection and its inverse");
    auto* dem = app.add_subcommand("demazure", "Demazure character");
    auto* ver = app.add_subcommand("verify", "run the identity checks");

    for (auto* sc : {hilb, basis, groeb, frob, bij}) {
        sc->add_option("--n", n)->required();
        sc->add_option("--k", k)->required();
    }
    for (auto* sc : {hilb, basis, groeb}) sc->add_option("--s", s);
    basis->add_option("--kind", kind)->check(CLI::IsMember({"artin", "gs", "nonskip"}));
    groeb->add_flag("--check", check, "verify every S-polynomial reduces to 0");
    groeb->add_flag("--reduced", reduced, "drop redundant variable powers (k = n)");
    frob->add_option("--route", route)->check(CLI::IsMember({"syt", "hl", "delta", "fundamental", "bruteforce", "all"}));
    bij->add_option("--osp", osp, "ordered set partition such as 5|146|8|23|7");
    bij->add_option("--monomial", mono, "exponent vector such as 2,4,4,0,0,1,3,2");
    dem->add_option("--gamma", gamma, "weak composition such as 0,2,2,0,3")->required();
    dem->add_flag("--reversed", rev, "kappa of the reversed composition in reversed variables");
    ver->add_option("--suite", suite);
    ver->add_option("--max-n", max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    try {
        if (*hilb) out = run_hilb(n, k, s);
        else if (*basis) out = run_basis(n, k, s, kind);
        else if (*groeb) out = run_groebner(n, k, s, check, reduced);
        else if (*frob) out = run_frobenius(n, k, route);
        else if (*bij) out = run_bijection(n, k, osp, mono);
        else if (*dem) out = run_demazure(gamma, rev);
        else if (*ver) out = run_verify(suite, max_n);
    } catch (const BadArgs& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string body = format == "json" ? out.data.dump() + "\n" : out.text;
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        f << body;
    } else {
        std::cout << body;
    }
    if (out.failed) {
        if (format == "json" && !out_path.empty()) std::cerr << out.data.dump() << "\n";
        return 1;
    }
    return 0;
}
