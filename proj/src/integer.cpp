#include "eisenlat/integer.hpp"

#include <limits>
#include <sstream>

#include "eisenlat/error.hpp"

namespace eisenlat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NonIntegralScale: return "NonIntegralScale";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::DependentInput: return "DependentInput";
    case ErrorCode::IndefiniteLattice: return "IndefiniteLattice";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvalidIsometry: return "InvalidIsometry";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::HasFixedVectors: return "HasFixedVectors";
    case ErrorCode::OddRank: return "OddRank";
    case ErrorCode::NonIntegralHermitian: return "NonIntegralHermitian";
    case ErrorCode::NotInTable: return "NotInTable";
    case ErrorCode::OutsideFamily: return "OutsideFamily";
    case ErrorCode::DegenerateSection: return "DegenerateSection";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a,
                                                   const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& a, const Integer& m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "division by zero");
  Integer q = a / m;  // truncates toward zero
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a - floor_div(a, m) * m;
  if (r < 0) r += abs(m);
  return r;
}

Integer floor(const Rational& x) {
  return floor_div(numerator(x), denominator(x));
}

Integer ceil(const Rational& x) { return -floor(Rational(-x)); }

Integer round_nearest(const Rational& x) {
  return floor(Rational(x + Rational(1, 2)));
}

Rational mod(const Rational& x, const Integer& m) {
  if (m <= 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  Rational q = x / Rational(m);
  return x - Rational(floor(q)) * Rational(m);
}

bool is_integral(const Rational& x) { return denominator(x) == 1; }

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorCode::Overflow, "value " + x.str() + " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in " + text);
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace eisenlat
