#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace setsys {

// Exact integer / rational arithmetic for counts that overflow any fixed width
// (bell(500) has ~844 decimal digits). Header-only backing keeps the build simple.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Nearest-double conversion that stays accurate for values far beyond the
// naive convert_to<double>() path: take a 61-bit window below the top bit and
// scale back with ldexp. Overflows to +/-inf past the double range, which is
// the honest answer there.
inline double to_double(const BigInt& x) {
    if (x == 0) return 0.0;
    BigInt a = x < 0 ? BigInt(-x) : x;
    const unsigned top = boost::multiprecision::msb(a);  // index of highest set bit
    double out;
    if (top <= 60) {
        out = a.convert_to<double>();
    } else {
        const unsigned shift = top - 60;
        BigInt window = a >> shift;
        out = std::ldexp(window.convert_to<double>(), static_cast<int>(shift));
    }
    return x < 0 ? -out : out;
}

inline double to_double(const BigRat& q) {
    BigInt num = boost::multiprecision::numerator(q);
    const BigInt& den = boost::multiprecision::denominator(q);
    if (num == 0) return 0.0;
    const bool neg = num < 0;
    if (neg) num = -num;
    // Shift so the integer quotient keeps ~80 significant bits whatever the
    // relative magnitudes are, then scale back.
    const long bn = static_cast<long>(boost::multiprecision::msb(num));
    const long bd = static_cast<long>(boost::multiprecision::msb(den));
    long shift = bd - bn + 80;
    if (shift < 0) shift = 0;
    BigInt quot = (num << static_cast<unsigned>(shift)) / den;
    const double d = std::ldexp(to_double(quot), -static_cast<int>(shift));
    return neg ? -d : d;
}

// Natural log of a positive BigInt, exact to double precision even when the
// value itself cannot be represented as a double.
inline double log_of(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("log_of: argument must be positive");
    const unsigned top = boost::multiprecision::msb(x);
    if (top <= 60) return std::log(x.convert_to<double>());
    const unsigned shift = top - 60;
    BigInt window = x >> shift;
    return std::log(window.convert_to<double>()) +
           static_cast<double>(shift) * std::numbers::ln2;
}

inline double log_of(const BigRat& q) {
    const BigInt& num = boost::multiprecision::numerator(q);
    const BigInt& den = boost::multiprecision::denominator(q);
    if (num <= 0) throw std::invalid_argument("log_of: argument must be positive");
    return log_of(num) - log_of(den);
}

// "p/q" (or plain "p" when q == 1); also the exact decimal string for integers.
inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const BigRat& q) { return q.str(); }

}  // namespace setsys
