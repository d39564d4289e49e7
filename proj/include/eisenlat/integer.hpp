#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eisenlat {

// Arbitrary precision: intermediate SNF multipliers routinely leave 64 bits.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

Integer abs(const Integer& x);
Integer gcd(const Integer& a, const Integer& b);

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a,
                                                   const Integer& b);

// Floor division and the matching non-negative remainder (m != 0).
Integer floor_div(const Integer& a, const Integer& m);
Integer floor_mod(const Integer& a, const Integer& m);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Integer round_nearest(const Rational& x);  // ties toward +infinity

// x reduced into [0, m) for a positive integer modulus m.
Rational mod(const Rational& x, const Integer& m);

bool is_integral(const Rational& x);

// Checked narrowing; throws Error(Overflow) when x does not fit.
std::int64_t to_int64(const Integer& x);

std::string to_string(const Integer& x);
// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);

// Lexicographic comparison of integer vectors (first coordinate most
// significant).
bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace eisenlat
