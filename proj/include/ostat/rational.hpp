#pragma once

// Exact rational arithmetic and decimal rendering helpers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ostat {

using BigInt = boost::multiprecision::cpp_int;

// Always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_fraction_string(const Rational& q) {
    auto d = denom(q);
    if (d == 1) return numer(q).str();
    return numer(q).str() + "/" + d.str();
}

namespace detail {

// Base-10 only: cpp_int's own string constructor treats a leading 0 as octal.
inline BigInt parse_decimal_integer(const std::string& text) {
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("missing digits");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("non-digit character");
        value = value * 10 + (text[i] - '0');
    }
    return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "a", "a/b", or a plain decimal literal such as "-0.125" exactly.
inline Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            BigInt num = detail::parse_decimal_integer(text.substr(0, slash));
            BigInt den = detail::parse_decimal_integer(text.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(detail::parse_decimal_integer(text));
        const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("missing fraction digits");
        if (frac[0] == '-' || frac[0] == '+') throw std::invalid_argument("sign after the point");
        const bool negative = !whole.empty() && whole[0] == '-';
        std::string magnitude = !whole.empty() && (whole[0] == '-' || whole[0] == '+') ? whole.substr(1) : whole;
        if (magnitude.empty()) magnitude = "0";
        if (magnitude[0] == '-' || magnitude[0] == '+') throw std::invalid_argument("repeated sign");
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        Rational q(detail::parse_decimal_integer(magnitude + frac), scale);
        return negative ? Rational(-q) : q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
}

namespace detail {

inline BigInt pow10(int places) {
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(places));
}

// Formats |scaled| / 10^places with a sign prefix.
inline std::string place_point(bool negative, const BigInt& scaled, int places) {
    std::string digits = scaled.str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (negative && scaled != 0) digits.insert(0, "-");
    return digits;
}

}  // namespace detail

/// Rounds half away from zero to `places` decimals, exactly.
inline std::string to_decimal(const Rational& q, int places) {
    if (places < 0) throw std::invalid_argument("negative decimal places");
    bool negative = q < 0;
    Rational a = negative ? Rational(-q) : q;
    Rational shifted = a * Rational(detail::pow10(places)) + Rational(1, 2);
    BigInt scaled = numer(shifted) / denom(shifted);
    return detail::place_point(negative, scaled, places);
}

/// Renders sqrt(q) rounded half away from zero to `places` decimals, exactly.
///
/// With s = sqrt(q) * 10^places the result is the largest N satisfying
/// (2N - 1)^2 <= 4 q 100^places, and the left side is an integer.
inline std::string sqrt_to_decimal(const Rational& q, int places) {
    if (q < 0) throw std::domain_error("square root of a negative rational");
    if (places < 0) throw std::invalid_argument("negative decimal places");
    Rational x = q * Rational(4) * Rational(detail::pow10(2 * places));
    BigInt floor_x = numer(x) / denom(x);
    BigInt root = boost::multiprecision::sqrt(floor_x);
    BigInt scaled = (root + 1) / 2;
    return detail::place_point(false, scaled, places);
}

}  // namespace ostat
