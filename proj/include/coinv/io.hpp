#pragma once
// JSON and text forms for everything the CLI prints. Variable indices and
// letters are 1-based on the outside, as they are internally.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "combinat.hpp"
#include "polyring.hpp"
#include "qseries.hpp"
#include "symfunc.hpp"

namespace coinv {

using json = nlohmann::json;

struct ParseError : std::invalid_argument {
    int line, column;
    ParseError(const std::string& what, int l, int c)
        : std::invalid_argument("parse error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what),
          line(l), column(c)
    {
    }
};

// nlohmann reports a byte offset; turn it into line/column.
inline json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 1, col = 1;
        std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(e.what(), line, col);
    }
}

// ---- QPoly ------------------------------------------------------------------

inline json to_json(const QPoly& p) { return json{{"coeffs", p.coeffs()}}; }

inline QPoly qpoly_from_json(const json& j)
{
    const json& arr = j.is_object() ? j.at("coeffs") : j;
    return QPoly(arr.get<std::vector<long long>>());
}

// Accepts what QPoly::str prints: "2*q^2+3*q+1", "-q", "0".
inline QPoly parse_qpoly(const std::string& text)
{
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void { throw ParseError(what, 1, static_cast<int>(pos) + 1); };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> long long {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoll(text.substr(start, pos - start));
    };
    QPoly out;
    skip();
    if (pos == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        long long c = 1;
        int d = 0;
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = number();
            have_coeff = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            } else {
                out += QPoly(sign * c);
                continue;
            }
        }
        if (pos >= text.size() || text[pos] != 'q') fail(have_coeff ? "expected 'q' after '*'" : "expected a term");
        ++pos;
        d = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            d = static_cast<int>(number());
        }
        out += QPoly::monomial(d, sign * c);
    }
    return out;
}

// ---- monomials and polynomials ---------------------------------------------

// Monomials travel as bare exponent vectors.
inline json to_json(const Monomial& m) { return m.exponents(); }

inline Monomial monomial_from_json(const json& j) { return Monomial(j.get<std::vector<int>>()); }

inline json to_json(const std::vector<Monomial>& ms)
{
    json arr = json::array();
    for (auto& m : ms) arr.push_back(to_json(m));
    return arr;
}

inline std::vector<Monomial> monomials_from_json(const json& j)
{
    std::vector<Monomial> out;
    for (auto& x : j) out.push_back(monomial_from_json(x));
    return out;
}

// {"n":4,"terms":[{"exp":[2,0,0,0],"num":1,"den":1},...]}; num/den become
// strings once they leave the 64-bit range.
inline json to_json(const RationalPolynomial& f)
{
    auto integer = [](const mpz_class& z) -> json {
        if (z.fits_slong_p()) return z.get_si();
        return z.get_str();
    };
    json terms = json::array();
    for (auto& [m, c] : f.terms())
        terms.push_back({{"exp", m.exponents()}, {"num", integer(c.get_num())}, {"den", integer(c.get_den())}});
    return json{{"n", f.nvars()}, {"terms", terms}};
}

inline RationalPolynomial polynomial_from_json(const json& j)
{
    auto integer = [](const json& x) -> mpz_class {
        if (x.is_string()) return mpz_class(x.get<std::string>());
        return mpz_class(x.get<long>());
    };
    RationalPolynomial f(j.at("n").get<int>());
    for (auto& t : j.at("terms")) {
        Rational c(integer(t.at("num")), integer(t.at("den")));
        c.canonicalize();
        f.add_term(Monomial(t.at("exp").get<std::vector<int>>()), c);
    }
    return f;
}

// ---- ordered set partitions --------------------------------------------------

inline json to_json(const OrderedSetPartition& s) { return json{{"blocks", s.blocks()}, {"text", s.str()}}; }

inline OrderedSetPartition osp_from_json(const json& j)
{
    if (j.is_string()) return OrderedSetPartition::parse(j.get<std::string>());
    return OrderedSetPartition(j.at("blocks").get<std::vector<std::vector<int>>>());
}

// ---- symmetric functions and class functions -------------------------------

inline json to_json(const SymFunc& f)
{
    json terms = json::array();
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it)
        terms.push_back({{"partition", it->first}, {"coeffs", it->second.coeffs()}});
    return json{{"basis", basis_name(f.basis)}, {"degree", f.degree}, {"terms", terms}};
}

inline SymFunc symfunc_from_json(const json& j)
{
    SymFunc f(parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<int>());
    for (auto& t : j.at("terms")) f.add(t.at("partition").get<Partition>(), qpoly_from_json(t.at("coeffs")));
    return f;
}

inline std::string partition_key(const Partition& la)
{
    std::string s;
    for (std::size_t i = 0; i < la.size(); ++i) s += (i ? "," : "") + std::to_string(la[i]);
    return s;
}

inline Partition partition_from_key(const std::string& key)
{
    Partition la;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t next = key.find(',', pos);
        if (next == std::string::npos) next = key.size();
        la.push_back(std::stoi(key.substr(pos, next - pos)));
        pos = next + 1;
    }
    return la;
}

// {"2,1": [trace in degree 0, 1, ...], ...}
inline json to_json(const ClassFunction& chi)
{
    json out = json::object();
    for (auto& [la, v] : chi) out[partition_key(la)] = v.coeffs();
    return out;
}

inline ClassFunction class_function_from_json(const json& j)
{
    ClassFunction chi;
    for (auto& [key, v] : j.items()) chi[partition_from_key(key)] = QPoly(v.get<std::vector<long long>>());
    return chi;
}

}  // namespace coinv
