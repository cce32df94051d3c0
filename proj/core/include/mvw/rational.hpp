#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvw {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(Rational const& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace mvw
