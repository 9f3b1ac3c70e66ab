#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mjc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coefficients of a power series in x, index = exponent.
using XSeries = std::vector<BigInt>;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// "p/q" or "p" when the denominator is 1.
inline std::string to_decimal(const BigRational& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    return boost::multiprecision::numerator(v).str();
  }
  return v.str();
}

std::vector<std::string> to_decimal_strings(const XSeries& s);

}  // namespace mjc
