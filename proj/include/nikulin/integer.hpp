#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nikulin {

// Expression templates are disabled so the types compose cleanly with Eigen.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                  boost::multiprecision::et_off>;

/// Floor of the square root of a non-negative integer.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("is_square: negative argument");
    const BigInt r = isqrt(n);
    return r * r == n;
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline bool is_even(const BigInt& n) { return !boost::multiprecision::bit_test(abs(n), 0); }

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Parses an optionally signed decimal integer; the whole string must be consumed.
inline BigInt parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("empty integer literal");
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
    const BigInt value{std::string(digits)};
    return text.front() == '-' ? BigInt(-value) : value;
}

}  // namespace nikulin
