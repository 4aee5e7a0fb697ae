#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace kdirac {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
// There is no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr const char* kVersion = "0.1.0";

// Requested rank exceeds what exhaustive enumeration supports.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Int to_int(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("to_int: not an integer");
  return numerator(q);
}

// C(n, r), multiplicative; 0 outside the Pascal triangle.
Int binomial(long n, long r);

// dim S^power of a space of dimension dim, i.e. C(dim+power-1, power).
Int sym_power_dim(long dim, long power);

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace kdirac
