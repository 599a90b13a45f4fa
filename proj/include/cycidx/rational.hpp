#pragma once

#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace cycidx {

// Exact rationals. mpq_class keeps values canonical as long as every
// value built from raw parts goes through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer &num, const Integer &den = 1)
{
    if (den == 0) {
        throw Error(ErrorKind::InvalidParams, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

// "n" when the denominator is 1, "n/d" otherwise.
inline std::string to_string(const Rational &r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "n", "-n" and "n/d".
inline Rational parse_rational(const std::string &text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return make_rational(Integer(text));
        }
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument &) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    }
}

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace cycidx
