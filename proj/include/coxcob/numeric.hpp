#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coxcob {

// Exact arithmetic everywhere.  Fan and polytope computations are
// degenerate-prone, so no floating point appears in this library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
inline int sign(const Rat& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// Ceiling of a/b for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: denominator must be positive");
  Int q = a / b;
  if (q * b < a) ++q;
  return q;
}

inline bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long long to_ll(const Int& a) {
  if (a > Int(std::numeric_limits<long long>::max()) ||
      a < Int(std::numeric_limits<long long>::min()))
    throw std::overflow_error("integer does not fit in 64 bits: " + a.str());
  return static_cast<long long>(a);
}

}  // namespace coxcob
