#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxcob/cone.hpp"
#include "coxcob/lattice.hpp"
#include "coxcob/linalg.hpp"
#include "coxcob/numeric.hpp"

namespace coxcob {

// Finite collection of strictly convex cones closed under faces, stored by
// its maximal cones; faces are generated on demand.
class Fan {
 public:
  Fan() : n_(0) {}

  Fan(std::size_t n, std::vector<Cone> cones) : n_(n) {
    for (const auto& c : cones) {
      if (c.ambient_dim() != n) throw std::invalid_argument("Fan: ambient dimension mismatch");
      if (!c.is_strictly_convex()) throw std::invalid_argument("Fan: cones must be strictly convex");
    }
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    for (std::size_t i = 0; i < cones.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < cones.size() && maximal; ++j)
        if (i != j && cones[j].contains_cone(cones[i]) && !(cones[j] == cones[i]))
          maximal = false;
      if (maximal) max_cones_.push_back(cones[i]);
    }
    std::sort(max_cones_.begin(), max_cones_.end());
  }

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  std::vector<Cone> all_cones() const {
    std::set<Cone> out;
    for (const auto& m : max_cones_)
      for (const auto& f : m.faces()) out.insert(f);
    return {out.begin(), out.end()};
  }

  std::vector<LatticeVector> vertices() const {
    std::vector<LatticeVector> vs;
    for (const auto& m : max_cones_)
      for (const auto& r : m.rays()) vs.push_back(r);
    sort_unique(vs);
    return vs;
  }

  bool contains_point(const LatticeVector& v) const {
    for (const auto& m : max_cones_)
      if (m.contains(v)) return true;
    return false;
  }

  bool operator==(const Fan& o) const { return n_ == o.n_ && max_cones_ == o.max_cones_; }
  bool operator!=(const Fan& o) const { return !(*this == o); }

  // Pairwise cones meet along common faces; test helper, not a hot path.
  bool validate() const {
    std::vector<Cone> cs = all_cones();
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const HRep& a = cs[i].hrep();
        const HRep& b = cs[j].hrep();
        std::vector<LatticeVector> in = a.ineqs, eq = a.eqs;
        in.insert(in.end(), b.ineqs.begin(), b.ineqs.end());
        eq.insert(eq.end(), b.eqs.begin(), b.eqs.end());
        Cone meet = Cone::from_inequalities(n_, in, eq);
        if (!meet.is_face_of(cs[i]) || !meet.is_face_of(cs[j])) return false;
      }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Cone> max_cones_;
};

inline Fan orthant_fan(std::size_t n) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(unit_vector(n, i));
  return Fan(n, {Cone::from_extremal(n, std::move(rays))});
}

inline bool is_simplicial(const Fan& f) {
  for (const auto& c : f.max_cones())
    if (rank_of(c.rays()) != c.rays().size()) return false;
  return true;
}

// Regular: every cone is generated by part of a Z-basis.
inline bool is_regular(const Fan& f) {
  for (const auto& c : f.max_cones()) {
    if (rank_of(c.rays()) != c.rays().size()) return false;
    if (lattice_index(c.rays()) != 1) return false;
  }
  return true;
}

namespace detail {

inline std::vector<std::vector<LatticeVector>> triangulate_cone(const Cone& c) {
  if (c.dim() == c.rays().size()) return {c.rays()};
  const LatticeVector& apex = c.rays().front();
  std::vector<std::vector<LatticeVector>> out;
  for (const auto& f : c.facets()) {
    bool has_apex =
        std::binary_search(f.rays().begin(), f.rays().end(), apex, lex_less);
    if (has_apex) continue;
    for (auto simplex : triangulate_cone(f)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

// d-dimensional volume of the truncation {x in cone : <ell,x> <= 1},
// measured in the coordinate projection given by cols (up to the common 1/d!
// factor, which cancels in comparisons within a fixed span).
inline Rat truncated_volume(const Cone& c, const LatticeVector& ell,
                            const std::vector<std::size_t>& cols) {
  Rat total = 0;
  for (const auto& simplex : triangulate_cone(c)) {
    std::vector<LatticeVector> m;
    Int den = 1;
    for (const auto& w : simplex) {
      LatticeVector row;
      for (std::size_t j : cols) row.push_back(w[j]);
      m.push_back(std::move(row));
      den *= dot(ell, w);
    }
    Rat v(abs_int(det_bareiss(m)), abs_int(den));
    total += v;
  }
  return total;
}

}  // namespace detail

// delta refines sigma: every cone of delta lies in a cone of sigma and the
// supports agree.  Support equality is checked per maximal cone of sigma by
// comparing exact truncated volumes against the delta-cones it contains.
inline bool is_subdivision(const Fan& delta, const Fan& sigma) {
  if (delta.ambient_dim() != sigma.ambient_dim())
    throw std::invalid_argument("is_subdivision: ambient dimension mismatch");
  for (const auto& d : delta.max_cones()) {
    bool inside = false;
    for (const auto& s : sigma.max_cones())
      if (s.contains_cone(d)) { inside = true; break; }
    if (!inside) return false;
  }
  for (const auto& s : sigma.max_cones()) {
    std::size_t d = s.dim();
    if (d == 0 || s.hrep().ineqs.empty()) continue;
    LatticeVector ell(s.ambient_dim(), Int(0));
    for (const auto& a : s.hrep().ineqs) ell = add(ell, a);
    RatMatrix rows = to_rat_matrix(s.rays());
    std::vector<std::size_t> cols = rref(rows).second;
    Rat whole = detail::truncated_volume(s, ell, cols);
    Rat covered = 0;
    for (const auto& dc : delta.max_cones())
      if (dc.dim() == d && s.contains_cone(dc))
        covered += detail::truncated_volume(dc, ell, cols);
    if (covered != whole) return false;
  }
  return true;
}

// Star subdivision v.Sigma at a primitive v in the support: the star of the
// unique cone tau with v in its relative interior is replaced by joins of v
// with the star's outer boundary faces.
inline Fan star_subdivision(const Fan& sigma, const LatticeVector& v) {
  if (v.size() != sigma.ambient_dim())
    throw std::invalid_argument("star_subdivision: dimension mismatch");
  if (is_zero(v) || !is_primitive(v))
    throw std::invalid_argument("star_subdivision: center must be a primitive vector");
  Cone tau;
  bool found = false;
  for (const auto& c : sigma.all_cones())
    if (c.relint_contains(v)) {
      tau = c;
      found = true;
      break;
    }
  if (!found)
    throw std::invalid_argument("star_subdivision: center lies outside the support of the fan");
  std::vector<Cone> out;
  for (const auto& m : sigma.max_cones()) {
    if (!m.contains_cone(tau)) {
      out.push_back(m);
      continue;
    }
    for (const auto& f : m.facets()) {
      if (f.contains_cone(tau)) continue;
      std::vector<LatticeVector> rays = f.rays();
      rays.push_back(v);
      out.push_back(Cone::from_extremal(sigma.ambient_dim(), std::move(rays)));
    }
  }
  return Fan(sigma.ambient_dim(), std::move(out));
}

// Simplicial subdivision with the same vertex set, by star subdivisions at
// the existing vertices; lexicographic order fixes the output.
inline Fan simplicialize(const Fan& delta) {
  Fan f = delta;
  for (const auto& v : delta.vertices()) f = star_subdivision(f, v);
  return f;
}

}  // namespace coxcob
