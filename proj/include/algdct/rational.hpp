#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace algdct {

// Exact arbitrary-precision arithmetic.  GMP-backed so that coefficient
// growth in deep towers is a performance question, never a correctness one.
// Expression templates are disabled: every operation yields a concrete,
// canonically reduced value (denominator > 0, gcd(num, den) = 1, zero is 0/1).
using Integer  = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                               boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Build a reduced rational from an integer pair.  Throws on zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    return Rational(num, den); // GMP canonicalizes sign and gcd
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(Integer(num), Integer(den));
}

namespace detail {

/// Parse a base-10 integer literal ([+-]?digits).  GMP's own string
/// constructor auto-detects the base, so a leading zero ("025") would be
/// read as octal; parsing digit by digit keeps decimal semantics.
inline Integer parse_decimal_integer(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = (text[pos] == '-');
        ++pos;
    }
    if (pos == text.size())
        throw std::invalid_argument("rational: malformed integer '" + text + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9')
            throw std::invalid_argument("rational: malformed integer '" + text + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

} // namespace detail

/// Parse "a/b", "a", or a plain decimal like "-0.125" into an exact rational.
/// (Decimal text is exact: the digits after the point give a power-of-ten
/// denominator.)  Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const Integer num = detail::parse_decimal_integer(text.substr(0, slash));
            const Integer den = detail::parse_decimal_integer(text.substr(slash + 1));
            return make_rational(num, den);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(detail::parse_decimal_integer(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("rational: malformed decimal");
        Integer den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return make_rational(detail::parse_decimal_integer(digits), den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("rational: cannot parse '" + text + "': " + e.what());
    }
}

/// Canonical "num/den" text form (always includes the denominator: "3/1").
inline std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Compact text form: integers print bare, others as "num/den".
inline std::string rational_to_short_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return rational_to_string(q);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Exact reciprocal; division by zero is an error, not a value.
inline Rational reciprocal(const Rational& q) {
    if (q == 0) throw std::domain_error("rational: division by zero");
    return Rational(1) / q;
}

} // namespace algdct
