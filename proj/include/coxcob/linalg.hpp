#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coxcob/lattice.hpp"
#include "coxcob/numeric.hpp"

namespace coxcob {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

inline RatMatrix to_rat_matrix(const std::vector<LatticeVector>& rows) {
  RatMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    RatVector q(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) q[j] = Rat(r[j]);
    m.push_back(std::move(q));
  }
  return m;
}

// Reduced row echelon form in place; returns (rank, pivot columns).
inline std::pair<std::size_t, std::vector<std::size_t>> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return {0, pivots};
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {r, pivots};
}

inline std::size_t rank_of(const std::vector<LatticeVector>& rows) {
  if (rows.empty()) return 0;
  RatMatrix m = to_rat_matrix(rows);
  return rref(m).first;
}

// Primitive integer basis of the right kernel {x : rows * x = 0}, in a
// canonical (echelon, sign-normalized, sorted) form.
inline std::vector<LatticeVector> kernel_basis(const std::vector<LatticeVector>& rows,
                                               std::size_t n) {
  RatMatrix m = to_rat_matrix(rows);
  if (m.empty()) m.push_back(RatVector(n, Rat(0)));
  auto [rank, pivots] = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<LatticeVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(n, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) x[pivots[i]] = -m[i][f];
    Int den = 1;
    for (const Rat& q : x) den = lcm(den, Int(denominator(q)));
    LatticeVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = Int(numerator(x[j])) * (den / Int(denominator(x[j])));
    v = primitive(v);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] < 0) v = negate(v);
    basis.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end(), lex_less);
  return basis;
}

inline Int det_bareiss(std::vector<LatticeVector> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sgn > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// gcd of all k x k minors of a k x n matrix of full row rank k; this is the
// index of the row lattice inside its saturation, so the rows extend to a
// Z-basis iff the result is 1.
inline Int lattice_index(const std::vector<LatticeVector>& rows) {
  std::size_t k = rows.size();
  if (k == 0) return 1;
  std::size_t n = rows[0].size();
  if (k > n) throw std::invalid_argument("lattice_index: more rows than columns");
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  Int g = 0;
  while (true) {
    std::vector<LatticeVector> sq(k, LatticeVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sq[i][j] = rows[i][idx[j]];
    g = gcd(g, det_bareiss(sq));
    if (g == 1) return 1;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return abs_int(g);
}

// Feasibility of {x >= 0 : A x = b} by phase-1 simplex with Bland's rule.
inline bool lp_feasible(RatMatrix A, RatVector b) {
  std::size_t m = A.size();
  if (m == 0) return true;
  std::size_t n = A[0].size();
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  }
  // Tableau columns: n structural, m artificial, 1 rhs.
  std::size_t cols = n + m + 1;
  RatMatrix t(m, RatVector(cols, Rat(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = b[i];
    basis[i] = n + i;
  }
  auto objective = [&]() {
    Rat z = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n) z += t[i][cols - 1];
    return z;
  };
  while (true) {
    // Reduced cost of structural column j: -sum of t[i][j] over rows with an
    // artificial basic variable.  Enter the lowest such j (Bland).
    std::size_t enter = cols;
    for (std::size_t j = 0; j < n; ++j) {
      Rat z = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) z += t[i][j];
      if (z > 0) { enter = j; break; }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rat best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded column cannot improve a feasibility LP
    Rat piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return objective() == 0;
}

// Is x a nonnegative combination of gens plus an arbitrary combination of
// lineality directions?
inline bool in_cone_span(const LatticeVector& x,
                         const std::vector<LatticeVector>& gens,
                         const std::vector<LatticeVector>& lineality) {
  std::size_t n = x.size();
  std::size_t cols = gens.size() + 2 * lineality.size();
  if (cols == 0) return is_zero(x);
  RatMatrix A(n, RatVector(cols, Rat(0)));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) A[i][j] = Rat(gens[j][i]);
  for (std::size_t j = 0; j < lineality.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      A[i][gens.size() + 2 * j] = Rat(lineality[j][i]);
      A[i][gens.size() + 2 * j + 1] = Rat(-lineality[j][i]);
    }
  RatVector b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = Rat(x[i]);
  return lp_feasible(std::move(A), std::move(b));
}

}  // namespace coxcob
