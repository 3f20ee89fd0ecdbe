#pragma once

// Exact scalar types. Everything downstream is built on these; no floating
// point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace msec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// Always reduced, denominator > 0 (boost normalizes on division).
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return BigRational(num) / BigRational(den);
}

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

inline BigInt to_integer(const BigRational& q) {
    if (!is_integer(q)) throw std::domain_error("rational is not an integer: " + q.str());
    return numerator(q);
}

inline std::string to_string(const BigInt& a) { return a.str(); }
inline std::string to_string(const BigRational& q) { return q.str(); }

}  // namespace msec
