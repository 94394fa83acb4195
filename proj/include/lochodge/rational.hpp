#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace lochodge {

// All arithmetic in the library is exact. Integers are arbitrary precision,
// rationals are kept normalized by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Canonical text form used in reports: "3", "-1/2".
inline std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << num(q);
  if (den(q) != 1) os << '/' << den(q);
  return os.str();
}

}  // namespace lochodge
