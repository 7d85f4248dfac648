#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace neron {

// All exact arithmetic runs on arbitrary-precision integers.  Smith normal
// form pivots blow past 64 bits even on small inputs, so fixed width is not
// an option for the public matrix type.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

struct Xgcd {
  Int g;  // gcd(a, b) >= 0
  Int x;  // a*x + b*y == g
  Int y;
};

// Deterministic extended gcd (classic iterative scheme, canonical for fixed
// inputs).
Xgcd xgcd(Int a, Int b);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

// Fits in a JSON number without precision loss.
inline bool fits_double_exact(const Int& v) {
  static const Int bound = (Int(1) << 53);
  return v > -bound && v < bound;
}

}  // namespace neron
