#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "untwist/core.hpp"

namespace untwist {

// Element of R[t, t^-1] as a finite exponent -> coefficient map. Zero
// coefficients are never stored, so structural equality is ring equality.
template <typename Coeff>
class BasicLaurent {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Coeff>;

    BasicLaurent() = default;
    BasicLaurent(int c) { set(0, Coeff(c)); }
    BasicLaurent(const Coeff& c) { set(0, c); }

    static BasicLaurent monomial(const Coeff& c, Exponent e) {
        BasicLaurent p;
        p.set(e, c);
        return p;
    }

    // t^e
    static BasicLaurent power(Exponent e) { return monomial(Coeff(1), e); }

    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    const Terms& terms() const { return terms_; }

    Exponent min_exp() const {
        if (is_zero()) throw Error("zero polynomial has no exponent range");
        return terms_.begin()->first;
    }

    Exponent max_exp() const {
        if (is_zero()) throw Error("zero polynomial has no exponent range");
        return terms_.rbegin()->first;
    }

    void set(Exponent e, const Coeff& c) {
        if (c == Coeff(0)) {
            terms_.erase(e);
        } else {
            terms_[e] = c;
        }
    }

    void add_term(Exponent e, const Coeff& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != Coeff(0)) terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second == Coeff(0)) terms_.erase(it);
    }

    BasicLaurent& operator+=(const BasicLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    BasicLaurent& operator-=(const BasicLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, Coeff(0) - c);
        return *this;
    }

    friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) {
        a += b;
        return a;
    }

    friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) {
        a -= b;
        return a;
    }

    BasicLaurent operator-() const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Coeff(0) - c);
        return r;
    }

    friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
        BasicLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    BasicLaurent& operator*=(const BasicLaurent& o) {
        *this = *this * o;
        return *this;
    }

    // t -> t^-1; a ring involution.
    BasicLaurent involute() const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    // p * t^m
    BasicLaurent shifted(Exponent m) const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + m, c);
        return r;
    }

    bool is_symmetric() const { return *this == involute(); }

    // Substitute t = x, x nonzero.
    Rational eval(const Rational& x) const {
        if (x == 0) throw Error("cannot evaluate a Laurent polynomial at t = 0");
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += Rational(c) * rational_pow(x, e);
        return acc;
    }

    friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

using LaurentPoly = BasicLaurent<Int>;
using RationalLaurentPoly = BasicLaurent<Rational>;

inline RationalLaurentPoly to_rational(const LaurentPoly& p) {
    RationalLaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.set(e, Rational(c));
    return r;
}

// Evaluate at an integer point; exact rational result.
inline Rational eval_at(const LaurentPoly& p, const Int& x) {
    return p.eval(Rational(x));
}

// Integer evaluation at t = +-1 (always an integer for integer coefficients).
inline Int eval_at_unit(const LaurentPoly& p, int x) {
    Rational v = p.eval(Rational(x));
    return numerator(v);
}

// The unique unit multiple eps * t^m * p that is fixed by t -> t^-1 and takes
// the value +1 at t = 1. Exists iff the exponent span is even, the shifted
// polynomial is symmetric, and p(1) = +-1.
inline LaurentPoly normalize_symmetric(const LaurentPoly& p) {
    if (p.is_zero())
        throw Error("cannot symmetric-normalize the zero polynomial");
    const auto span = p.min_exp() + p.max_exp();
    if (span % 2 != 0)
        throw Error("no symmetric unit multiple: odd exponent span");
    LaurentPoly q = p.shifted(-span / 2);
    if (!q.is_symmetric())
        throw Error("no symmetric unit multiple: coefficients are asymmetric");
    Int v = eval_at_unit(q, 1);
    if (v != 1 && v != -1)
        throw Error("value at t = 1 is " + v.str() + ", not a unit");
    return v == 1 ? q : -q;
}

// Coefficientwise exact division by k; nullopt when some coefficient is not
// divisible.
inline std::optional<LaurentPoly> div_exact(const LaurentPoly& p, const Int& k) {
    if (k == 0) throw Error("division by zero");
    LaurentPoly q;
    for (const auto& [e, c] : p.terms()) {
        if (c % k != 0) return std::nullopt;
        q.set(e, c / k);
    }
    return q;
}

namespace detail {

template <typename Coeff>
std::string coeff_string(const Coeff& c);

template <>
inline std::string coeff_string<Int>(const Int& c) { return c.str(); }

template <>
inline std::string coeff_string<Rational>(const Rational& c) {
    return to_string(c);
}

}  // namespace detail

// Renders terms in ascending exponent order: "t^-1 - 1 + t", "-2*t^-1 + 5 - 2*t".
template <typename Coeff>
std::string to_string(const BasicLaurent<Coeff>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < Coeff(0);
        Coeff mag = neg ? Coeff(Coeff(0) - c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string body;
        if (e == 0) {
            body = detail::coeff_string(mag);
        } else {
            std::string pow = e == 1 ? "t" : "t^" + std::to_string(e);
            body = mag == Coeff(1) ? pow : detail::coeff_string(mag) + "*" + pow;
        }
        out += body;
    }
    return out;
}

// Parses the grammar emitted by to_string, plus bare "t^k" / "t" shorthands
// and optional '*' between coefficient and power.
inline LaurentPoly parse_laurent(std::string_view text) {
    LaurentPoly result;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&](const char* what) {
        std::string digits;
        if (i < n && (text[i] == '+' || text[i] == '-')) digits += text[i++];
        std::size_t start = digits.size();
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        if (digits.size() == start)
            throw ParseError(std::string("expected ") + what +
                             " in polynomial at offset " + std::to_string(i));
        return digits;
    };

    skip_ws();
    if (i == n) throw ParseError("empty polynomial text");
    bool term_negative = false;
    if (text[i] == '+' || text[i] == '-') {
        term_negative = text[i] == '-';
        ++i;
    }
    while (true) {
        skip_ws();
        Int coeff(1);
        bool saw_coeff = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = Int(parse_int("coefficient"));
            saw_coeff = true;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        std::int64_t exponent = 0;
        if (i < n && text[i] == 't') {
            ++i;
            exponent = 1;
            if (i < n && text[i] == '^') {
                ++i;
                exponent = std::stoll(parse_int("exponent"));
            }
        } else if (!saw_coeff) {
            throw ParseError("expected term in polynomial at offset " +
                             std::to_string(i));
        }
        result.add_term(exponent, term_negative ? -coeff : coeff);

        skip_ws();
        if (i == n) break;
        if (text[i] == '+' || text[i] == '-') {
            term_negative = text[i] == '-';
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, text[i]) +
                             "' in polynomial at offset " + std::to_string(i));
        }
    }
    return result;
}

}  // namespace untwist
