#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace monosym {

using Integer = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Renders "num/den", or just "num" when den == 1.
inline std::string rat_to_string(const Rational& r) {
  return r.str();
}

// Accepts "a/b" or "a", optional leading sign.
inline Rational rat_from_string(const std::string& s) {
  try {
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

// Rough size measure used for pivot selection: bits of numerator plus
// bits of denominator.
inline std::size_t rat_bit_size(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  std::size_t bits = 1;
  if (num != 0) bits += boost::multiprecision::msb(abs(num)) + 1;
  if (den != 1) bits += boost::multiprecision::msb(den) + 1;
  return bits;
}

}  // namespace monosym
