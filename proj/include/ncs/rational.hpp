#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ncs {

// Exact arbitrary-precision rationals. Exponents of q grow quadratically in
// intermediate reductions, so fixed-width integers are not an option.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// gcd of two rationals as fractions: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d).
// Used to extract the rational content of a polynomial.
inline Rational rat_content_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return b < 0 ? Rational(-b) : b;
    if (b == 0) return a < 0 ? Rational(-a) : a;
    Integer n = gcd(rat_num(a), rat_num(b));
    Integer d = lcm(rat_den(a), rat_den(b));
    Rational g(n, d);
    return g < 0 ? Rational(-g) : g;
}

} // namespace ncs
