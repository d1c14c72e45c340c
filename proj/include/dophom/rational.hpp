#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "dophom/error.hpp"

namespace dophom {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// cpp_rational keeps values in lowest terms with positive denominator, which
// is the canonical form every module relies on for structural equality.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Prints "p/q", omitting "/q" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

/// Falling factorial x(x-1)...(x-k+1); valid for negative x as well.
inline Int falling(std::int64_t x, unsigned k) {
    Int f = 1;
    for (unsigned i = 0; i < k; ++i) f *= Int(x) - i;
    return f;
}

namespace detail {
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
}  // namespace detail

/// Parses "p", "-p" or "p/q" starting at `pos` in `text`; advances `pos` past
/// the consumed characters. Throws ParseError on malformed input.
inline Rational parse_rational_at(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !detail::is_digit(text[pos]))
        throw ParseError(start, "expected a rational number");
    Int num = 0;
    while (pos < text.size() && detail::is_digit(text[pos])) {
        num = num * 10 + (text[pos] - '0');
        ++pos;
    }
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (pos >= text.size() || !detail::is_digit(text[pos]))
            throw ParseError(pos, "expected a denominator");
        den = 0;
        while (pos < text.size() && detail::is_digit(text[pos])) {
            den = den * 10 + (text[pos] - '0');
            ++pos;
        }
        if (den == 0) throw ParseError(start, "zero denominator");
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

/// Parses a whole string as a rational; the entire input must be consumed.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    Rational r = parse_rational_at(text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size()) throw ParseError(pos, "trailing characters after rational");
    return r;
}

}  // namespace dophom
