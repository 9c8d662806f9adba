#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace untwist {

// Exact arithmetic everywhere: cokernel orders and determinant coefficients
// outgrow machine integers for user-supplied matrices.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (polynomial grammar, catalog lines).
struct ParseError : Error {
    using Error::Error;
};

// A domain-type invariant does not hold for the given data.
struct ValidationError : Error {
    using Error::Error;
};

// Input exceeds a documented size bound.
struct CapacityError : Error {
    using Error::Error;
};

inline bool is_odd(const Int& v) { return (v % 2) != 0; }
inline bool is_even(const Int& v) { return (v % 2) == 0; }

inline std::int64_t to_int64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw Error("integer value " + v.str() + " does not fit in 64 bits");
    }
    return v.convert_to<std::int64_t>();
}

// Canonical representative of q mod 1 in [0, 1).
inline Rational mod1(const Rational& q) {
    Int num = numerator(q);
    Int den = denominator(q);  // den > 0 in canonical form
    Int r = num % den;
    if (r < 0) r += den;
    return Rational(r, den);
}

inline Rational rational_pow(const Rational& base, std::int64_t e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw Error("zero base with negative exponent");
        return Rational(0);
    }
    Rational b = base;
    if (e < 0) {
        Int num = numerator(base), den = denominator(base);
        b = num > 0 ? Rational(den, num) : Rational(-den, -num);
    }
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                            : static_cast<std::uint64_t>(e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace untwist
