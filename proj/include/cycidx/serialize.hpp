#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "laurent.hpp"
#include "monomial.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "series.hpp"

// JSON layout of a series:
//   {"trunc": N,
//    "terms": [{"p": {"1": e1, ...},
//               "coeff": [{"q": a, "u": b, "w": c, "num": "s", "den": "t"}, ...]}, ...]}
// Terms follow the canonical monomial order and coefficient entries are
// sorted by (q, u, w). Numerators and denominators are decimal strings.

namespace cycidx::io {

using json = nlohmann::json;

inline json to_json(const LaurentCoeff &c)
{
    json arr = json::array();
    for (const auto &[e, v] : c.terms()) {
        arr.push_back({{"q", e[0]}, {"u", e[1]}, {"w", e[2]}, {"num", v.get_num().get_str()},
                       {"den", v.get_den().get_str()}});
    }
    return arr;
}

inline json to_json(const PMonomial &m)
{
    json obj = json::object();
    const auto &exps = m.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] != 0) {
            obj[std::to_string(i + 1)] = exps[i];
        }
    }
    return obj;
}

inline json to_json(const CycleIndexSeries &a)
{
    json terms = json::array();
    for (const auto &[m, c] : a.terms()) {
        terms.push_back({{"p", to_json(m)}, {"coeff", to_json(c)}});
    }
    return {{"trunc", a.trunc()}, {"terms", terms}};
}

inline LaurentCoeff laurent_from_json(const json &arr)
{
    try {
        LaurentCoeff c;
        for (const auto &entry : arr) {
            const auto num = Integer(entry.at("num").get<std::string>());
            const auto den = Integer(entry.at("den").get<std::string>());
            c.add_term({entry.at("q").get<int>(), entry.at("u").get<int>(), entry.at("w").get<int>()},
                       make_rational(num, den));
        }
        return c;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const std::invalid_argument &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

inline CycleIndexSeries series_from_json(const json &j)
{
    try {
        CycleIndexSeries a(j.at("trunc").get<int>());
        for (const auto &term : j.at("terms")) {
            PMonomial m;
            for (const auto &[idx, e] : term.at("p").items()) {
                m.multiply_power(std::stoi(idx), e.get<int>());
            }
            if (m.cardinality() > a.trunc()) {
                throw Error(ErrorKind::ParseError, "monomial " + m.to_string() + " above truncation");
            }
            a.add_term(m, laurent_from_json(term.at("coeff")));
        }
        return a;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

inline json to_json(const oracle::GradedCharacter &chi)
{
    json classes = json::array();
    for (const auto &[c, v] : chi.values) {
        classes.push_back({{"class", c.parts}, {"value", to_json(v)}});
    }
    return {{"n", chi.n}, {"classes", classes}};
}

inline json to_json(const oracle::Decomposition &dec)
{
    json arr = json::array();
    for (const auto &[key, mult] : dec) {
        const auto &[shape, e] = key;
        arr.push_back({{"shape", shape.parts}, {"q", e[0]}, {"u", e[1]}, {"w", e[2]},
                       {"multiplicity", mult.get_str()}});
    }
    return arr;
}

/// Polynomial in q rendered as "1 + 4*q^3 + 3*q^4"; other variables are
/// rendered by to_string(LaurentCoeff) instead.
inline std::string q_polynomial_string(const LaurentCoeff &c)
{
    if (c.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto &[e, v] : c.terms()) {
        if (e[1] != 0 || e[2] != 0) {
            return to_string(c);
        }
        const bool neg = v < 0;
        const Rational mag = neg ? Rational(-v) : v;
        if (s.empty()) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        const bool bare = e[0] != 0 && mag == 1;
        if (!bare) {
            s += to_string(mag);
        }
        if (e[0] != 0) {
            s += bare ? "q" : "*q";
            if (e[0] != 1) {
                s += "^" + std::to_string(e[0]);
            }
        }
    }
    return s;
}

} // namespace cycidx::io
