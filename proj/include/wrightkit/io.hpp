#pragma once

// JSON and text renderings of decompositions and polynomials.
//
// Decomposition schema (field names and order fixed):
//   {"a":"-1/2","b":"7/2","kind":"SecondType",
//    "terms":[{"r":0,"gamma_arg":"7/2","uppers":[...],"lowers":[...],
//              "arg":{"sign":-1,"scale":"1/4","zpow":2}}],
//    "poly":[{"exp":1,"coeff":"1/2"}]}
// "r" is the power of z in the term prefactor z^r/(r! Gamma(gamma_arg)).

#include <string>
#include <vector>

#include "json.hpp"

#include "wrightkit/decompose.hpp"
#include "wrightkit/errors.hpp"
#include "wrightkit/polynomial.hpp"
#include "wrightkit/rational.hpp"

namespace wrightkit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const QPolynomial& p) {
    ordered_json out = ordered_json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"coeff", c.str()}});
    return out;
}

inline QPolynomial polynomial_from_json(const ordered_json& j) {
    QPolynomial p;
    for (const auto& m : j) p.add_term(m.at("exp").get<int>(), parse_rational(m.at("coeff").get<std::string>()));
    return p;
}

inline ordered_json to_json(const Decomposition& d) {
    auto strs = [](const std::vector<Rational>& v) {
        ordered_json a = ordered_json::array();
        for (const Rational& r : v) a.push_back(r.str());
        return a;
    };
    ordered_json terms = ordered_json::array();
    for (const HGTerm& t : d.terms) {
        terms.push_back({{"r", t.z_power},
                         {"gamma_arg", t.gamma_arg.str()},
                         {"uppers", strs(t.pfq.upper)},
                         {"lowers", strs(t.pfq.lower)},
                         {"arg", {{"sign", t.arg_sign}, {"scale", t.arg_scale.str()}, {"zpow", t.arg_zpower}}}});
    }
    return {{"a", d.spec.a.str()},
            {"b", d.spec.b.str()},
            {"kind", std::string(kind_name(d.spec.kind))},
            {"terms", terms},
            {"poly", to_json(d.poly)}};
}

inline Decomposition decomposition_from_json(const ordered_json& j) {
    auto rats = [](const ordered_json& arr) {
        std::vector<Rational> v;
        for (const auto& s : arr) v.push_back(parse_rational(s.get<std::string>()));
        return v;
    };
    Decomposition d;
    d.spec = classify(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()));
    if (std::string(kind_name(d.spec.kind)) != j.at("kind").get<std::string>())
        throw DomainError("decomposition kind does not match its parameters");
    const int m = d.spec.a.is_zero() ? 1 : static_cast<int>(d.spec.a.den());
    for (const auto& jt : j.at("terms")) {
        HGTerm t;
        t.z_power = jt.at("r").get<int>();
        t.r = t.z_power % m;
        t.gamma_arg = parse_rational(jt.at("gamma_arg").get<std::string>());
        t.pfq = PFQSpec{rats(jt.at("uppers")), rats(jt.at("lowers"))};
        const auto& arg = jt.at("arg");
        t.arg_sign = arg.at("sign").get<int>();
        t.arg_scale = parse_rational(arg.at("scale").get<std::string>());
        t.arg_zpower = arg.at("zpow").get<int>();
        d.terms.push_back(std::move(t));
    }
    d.poly = polynomial_from_json(j.at("poly"));
    return d;
}

inline std::string render_term(const HGTerm& t) {
    std::string s = "z^" + std::to_string(t.z_power) + "/(" + std::to_string(t.z_power) + "!·Γ(" + t.gamma_arg.str() +
                    "))·" + pfq_label(t.pfq) + "(";
    if (t.arg_sign < 0) s += "-";
    s += t.arg_scale.str() + "·z^" + std::to_string(t.arg_zpower) + ")";
    return s;
}

/// Multi-line text form: one term per line, then the polynomial part.
inline std::string render_text(const Decomposition& d) {
    std::string head = "W(" + d.spec.a.str() + ", " + d.spec.b.str() + " | z) = ";
    if (d.is_zero()) return head + "0 (identically zero)\n";
    std::string out = head + "\n";
    bool first = true;
    for (const HGTerm& t : d.terms) {
        out += (first ? "    " : "  + ") + render_term(t) + "\n";
        first = false;
    }
    if (!d.poly.is_zero()) out += std::string(first ? "    " : "  + ") + "P(z) = " + d.poly.str() + "\n";
    return out;
}

}  // namespace wrightkit
