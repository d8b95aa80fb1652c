#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "sjp/error.hpp"

namespace sjp {

using Integer = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction, always in lowest terms with positive
// denominator (maintained by the backend). No operation ever rounds.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

// Accepts "p" or "p/q" with an optional leading minus, no whitespace, q > 0.
inline Rational parse_rational(std::string_view s) {
    const std::string_view input = s;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    auto take_digits = [&](std::string_view& v) -> std::string {
        std::size_t i = 0;
        while (i < v.size() && std::isdigit(static_cast<unsigned char>(v[i]))) ++i;
        std::string digits(v.substr(0, i));
        v.remove_prefix(i);
        return digits;
    };
    const std::string num = take_digits(s);
    if (num.empty()) throw ParseError("expected rational literal, got \"" + std::string(input) + "\"");
    Integer p(num);
    Integer q(1);
    if (!s.empty()) {
        if (s.front() != '/') throw ParseError("unexpected character in rational \"" + std::string(input) + "\"");
        s.remove_prefix(1);
        const std::string den = take_digits(s);
        if (den.empty() || !s.empty())
            throw ParseError("malformed denominator in rational \"" + std::string(input) + "\"");
        q = Integer(den);
        if (q == 0) throw ParseError("zero denominator in rational \"" + std::string(input) + "\"");
    }
    Rational r = Rational(p) / Rational(q);
    return negative ? Rational(-r) : r;
}

// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) {
        s += '/';
        s += rat_den(r).str();
    }
    return s;
}

}  // namespace sjp
