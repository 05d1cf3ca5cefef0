#ifndef LIEDIM_BIGNAT_HPP
#define LIEDIM_BIGNAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "liedim/permutation.hpp"

namespace liedim {

/// Arbitrary-precision non-negative integer.  All table arithmetic is exact;
/// the only rounding anywhere is the decimal ratio string below.
using BigNat = boost::multiprecision::cpp_int;

inline BigNat factorial(int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigNat r = 1;
  for (int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigNat bignat_pow(const BigNat& base, int64_t exp) {
  if (exp < 0) throw std::invalid_argument("bignat_pow: negative exponent");
  if (exp > 2000000) throw BudgetExceeded("bignat_pow: exponent too large");
  BigNat r = 1;
  BigNat b = base;
  int64_t e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// Decimal string of num/den, floor-rounded to sig significant digits.
/// Plain decimal, never scientific notation.
inline std::string ratio_decimal(const BigNat& num, const BigNat& den, int sig = 30) {
  if (den == 0) throw std::invalid_argument("ratio_decimal: zero denominator");
  if (sig < 1) throw std::invalid_argument("ratio_decimal: need at least one digit");
  if (num == 0) return "0";
  const BigNat ipart = num / den;
  if (ipart > 0) {
    std::string is = ipart.str();
    const int frac_digits = std::max(0, sig - static_cast<int>(is.size()));
    if (frac_digits == 0) return is;
    BigNat scaled = (num - ipart * den) * bignat_pow(10, frac_digits) / den;
    std::string fs = scaled.str();
    fs.insert(fs.begin(), static_cast<size_t>(frac_digits) - fs.size(), '0');
    return is + "." + fs;
  }
  // 0 < num/den < 1: count leading zeros after the point.
  int zeros = 0;
  BigNat probe = num * 10;
  while (probe < den) {
    probe *= 10;
    ++zeros;
  }
  BigNat scaled = num * bignat_pow(10, zeros + sig) / den;
  std::string ds = scaled.str();
  ds.insert(ds.begin(), static_cast<size_t>(zeros + sig) - ds.size(), '0');
  return "0." + ds;
}

/// Natural logarithm of a positive BigNat, to double precision.
inline double bignat_log(const BigNat& v) {
  if (v <= 0) throw std::invalid_argument("bignat_log: need a positive value");
  const auto bits = boost::multiprecision::msb(v);
  if (bits < 52) return std::log(v.convert_to<double>());
  const BigNat top = v >> (bits - 52);
  return std::log(top.convert_to<double>()) + static_cast<double>(bits - 52) * std::log(2.0);
}

}  // namespace liedim

#endif
