#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "wrightkit/kernel.hpp"
#include "wrightkit/rational.hpp"

namespace wrightkit {

/// Sparse polynomial in z with exact rational coefficients. Zero coefficients are never stored.
class QPolynomial {
public:
    using exponent_type = int;

    QPolynomial() = default;

    static QPolynomial constant(const Rational& c) { return monomial(0, c); }
    static QPolynomial monomial(exponent_type e, const Rational& c) {
        QPolynomial p;
        p.add_term(e, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    const std::map<exponent_type, Rational>& terms() const { return terms_; }

    Rational coefficient(exponent_type e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(exponent_type e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend QPolynomial operator+(QPolynomial x, const QPolynomial& y) { return x += y; }
    friend QPolynomial operator-(QPolynomial x, const QPolynomial& y) { return x -= y; }

    friend QPolynomial operator*(const QPolynomial& x, const QPolynomial& y) {
        QPolynomial out;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) out.add_term(ex + ey, cx * cy);
        return out;
    }
    friend QPolynomial operator*(const Rational& s, const QPolynomial& p) {
        QPolynomial out;
        for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
        return out;
    }

    /// Antiderivative vanishing at z = 0.
    QPolynomial integral() const {
        QPolynomial out;
        for (const auto& [e, c] : terms_) out.add_term(e + 1, c / Rational(e + 1));
        return out;
    }

    QPolynomial derivative() const {
        QPolynomial out;
        for (const auto& [e, c] : terms_)
            if (e > 0) out.add_term(e - 1, c * Rational(e));
        return out;
    }

    double eval(double z) const {
        if (z == 0.0) return coefficient(0).to_double();
        CompensatedSum s;
        for (const auto& [e, c] : terms_) s.add(c.to_double() * std::pow(z, e));
        return s.value();
    }

    /// Canonical ascending rendering, e.g. "1/6 + z/2 + z^2/2 + z^3/6"; "0" when empty.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c.is_negative();
            const Rational mag = abs(c);
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            if (e == 0) {
                out += mag.str();
                continue;
            }
            const std::string z = e == 1 ? "z" : "z^" + std::to_string(e);
            if (mag.num() != 1) out += std::to_string(mag.num()) + "*";
            out += z;
            if (mag.den() != 1) out += "/" + std::to_string(mag.den());
        }
        return out;
    }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    std::map<exponent_type, Rational> terms_;
};

}  // namespace wrightkit
