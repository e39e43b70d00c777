#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcob/numeric.hpp"

namespace coxcob {

// Integer points of the cocharacter lattice N and exponent vectors of
// monomials share this representation.
using LatticeVector = std::vector<Int>;

inline bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int content(const LatticeVector& v) {
  Int g = 0;
  for (const Int& c : v) g = gcd(g, c);
  return g;
}

// The integral vector with relatively coprime coordinates spanning the same
// ray.  Signs are preserved: (0,-3) -> (0,-1).
inline LatticeVector primitive(const LatticeVector& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("zero vector has no primitive representative");
  LatticeVector r(v);
  for (Int& c : r) c /= g;
  return r;
}

inline bool is_primitive(const LatticeVector& v) {
  return !is_zero(v) && content(v) == 1;
}

inline LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  LatticeVector r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  LatticeVector r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

inline LatticeVector scale(const Int& c, const LatticeVector& a) {
  LatticeVector r(a);
  for (Int& x : r) x *= c;
  return r;
}

inline LatticeVector negate(const LatticeVector& a) { return scale(Int(-1), a); }

// p*c1 + q*c2, used for double-description combinations.
inline LatticeVector combine(const Int& p, const LatticeVector& a,
                             const Int& q, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("combine: dimension mismatch");
  LatticeVector r(a.size(), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = p * a[i] + q * b[i];
  return r;
}

inline bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline LatticeVector unit_vector(std::size_t n, std::size_t i) {
  LatticeVector e(n, Int(0));
  e[i] = 1;
  return e;
}

inline bool is_unit_vector(const LatticeVector& v) {
  int ones = 0;
  for (const Int& c : v) {
    if (c == 1) ++ones;
    else if (c != 0) return false;
  }
  return ones == 1;
}

inline std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

inline void sort_unique(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace coxcob
