#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "coxcob/cone.hpp"
#include "coxcob/fan.hpp"
#include "coxcob/lattice.hpp"
#include "coxcob/linalg.hpp"
#include "coxcob/monomial.hpp"
#include "coxcob/numeric.hpp"

namespace coxcob {

struct Facet {
  LatticeVector normal;  // componentwise >= 0, primitive
  Int offset;            // <normal, x> >= offset on P
};

struct PolytopeFace {
  std::vector<Monomial> vertices;              // vertices of P lying on the face
  std::vector<LatticeVector> recession_rays;   // extreme rays of the recession cone
  std::vector<std::size_t> tight_facets;       // indices into NewtonPolytope::facets()
  std::vector<std::size_t> exceptional_tight;  // indices into exceptional_rays()
  std::size_t dim = 0;
  bool whole = false;  // the improper face P itself
};

// P = conv(generators) + positive orthant, with the dual (normal) fan and the
// facet description derived from it.
class NewtonPolytope {
 public:
  explicit NewtonPolytope(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
    std::size_t n = ideal_.ambient_dim();
    const auto& gens = ideal_.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (is_vertex(gens, i)) vertices_.push_back(gens[i]);

    std::vector<Cone> max_cones;
    for (const auto& alpha : vertices_) {
      std::vector<LatticeVector> ineqs;
      for (std::size_t j = 0; j < n; ++j) ineqs.push_back(unit_vector(n, j));
      for (const auto& beta : vertices_)
        if (beta != alpha) ineqs.push_back(sub(beta, alpha));
      max_cones.push_back(Cone::from_inequalities(n, ineqs));
    }
    fan_ = Fan(n, std::move(max_cones));

    for (const auto& v : fan_.vertices()) {
      Int c = dot(v, vertices_[0]);
      for (const auto& alpha : vertices_) c = std::min(c, dot(v, alpha));
      facets_.push_back(Facet{v, c});
    }
    for (std::size_t j = 0; j < facets_.size(); ++j)
      if (!is_unit_vector(facets_[j].normal)) exceptional_.push_back(j);
  }

  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t ambient_dim() const { return ideal_.ambient_dim(); }
  const std::vector<Monomial>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Fan& normal_fan() const { return fan_; }

  std::vector<LatticeVector> exceptional_rays() const {
    std::vector<LatticeVector> out;
    for (std::size_t j : exceptional_) out.push_back(facets_[j].normal);
    return out;
  }

  bool has_supporting_faces() const { return !exceptional_.empty(); }

  bool member(const LatticeVector& x) const {
    for (const auto& f : facets_)
      if (dot(f.normal, x) < f.offset) return false;
    return true;
  }

  // min over vertices of <alpha, v>; the piecewise linear function F_P.
  Int support_value(const LatticeVector& v) const {
    Int c = dot(v, vertices_[0]);
    for (const auto& alpha : vertices_) c = std::min(c, dot(v, alpha));
    return c;
  }

  PolytopeFace full_face() const {
    PolytopeFace f;
    f.vertices = vertices_;
    std::size_t n = ambient_dim();
    for (std::size_t j = 0; j < n; ++j) f.recession_rays.push_back(unit_vector(n, j));
    f.dim = n;
    f.whole = true;
    return f;
  }

  // All nonempty intersections of supporting facets (the facets dual to the
  // exceptional rays), the facets themselves included.
  std::vector<PolytopeFace> supporting_faces() const {
    std::size_t n = ambient_dim();
    std::size_t k = exceptional_.size();
    if (k > 20) throw std::invalid_argument("supporting_faces: too many exceptional rays");
    std::map<std::pair<std::vector<Monomial>, std::vector<LatticeVector>>, PolytopeFace> found;
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t(1) << i)) chosen.push_back(i);
      std::vector<Monomial> verts;
      for (const auto& alpha : vertices_) {
        bool tight = true;
        for (std::size_t i : chosen) {
          const Facet& fc = facets_[exceptional_[i]];
          if (dot(fc.normal, alpha) != fc.offset) { tight = false; break; }
        }
        if (tight) verts.push_back(alpha);
      }
      if (verts.empty()) continue;
      std::vector<LatticeVector> ineqs, eqs;
      for (std::size_t j = 0; j < n; ++j) ineqs.push_back(unit_vector(n, j));
      for (std::size_t i : chosen) eqs.push_back(facets_[exceptional_[i]].normal);
      std::vector<LatticeVector> rec = dd_generators(n, ineqs, eqs).rays;
      auto key = std::make_pair(verts, rec);
      if (found.count(key)) continue;
      PolytopeFace face;
      face.vertices = std::move(verts);
      face.recession_rays = std::move(rec);
      fill_tight_sets(face);
      found.emplace(std::move(key), std::move(face));
    }
    std::vector<PolytopeFace> out;
    for (auto& [key, f] : found) out.push_back(std::move(f));
    std::stable_sort(out.begin(), out.end(), [](const PolytopeFace& a, const PolytopeFace& b) {
      if (a.dim != b.dim) return a.dim > b.dim;
      return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                          b.vertices.begin(), b.vertices.end(), lex_less);
    });
    return out;
  }

  bool is_valid_face(const PolytopeFace& f) const {
    if (f.whole) return true;
    for (const auto& v : f.vertices)
      if (std::find(vertices_.begin(), vertices_.end(), v) == vertices_.end()) return false;
    if (f.vertices.empty()) return false;
    for (std::size_t j : f.tight_facets) {
      if (j >= facets_.size()) return false;
      for (const auto& v : f.vertices)
        if (dot(facets_[j].normal, v) != facets_[j].offset) return false;
    }
    return true;
  }

 private:
  bool is_vertex(const std::vector<Monomial>& gens, std::size_t i) const {
    // alpha is a vertex iff it is not in conv(other generators) + orthant,
    // decided by exact LP feasibility.
    std::size_t n = ideal_.ambient_dim();
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(j);
    if (others.empty()) return true;
    std::size_t cols = others.size() + n;
    RatMatrix A(n + 1, RatVector(cols, Rat(0)));
    RatVector b(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < others.size(); ++c) A[r][c] = Rat(gens[others[c]][r]);
      A[r][others.size() + r] = 1;  // slack for the orthant shift
      b[r] = Rat(gens[i][r]);
    }
    for (std::size_t c = 0; c < others.size(); ++c) A[n][c] = 1;
    b[n] = 1;
    return !lp_feasible(std::move(A), std::move(b));
  }

  void fill_tight_sets(PolytopeFace& face) const {
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      bool tight = true;
      for (const auto& v : face.vertices)
        if (dot(facets_[j].normal, v) != facets_[j].offset) { tight = false; break; }
      for (const auto& r : face.recession_rays)
        if (tight && dot(facets_[j].normal, r) != 0) tight = false;
      if (tight) face.tight_facets.push_back(j);
    }
    for (std::size_t i = 0; i < exceptional_.size(); ++i)
      if (std::find(face.tight_facets.begin(), face.tight_facets.end(), exceptional_[i]) !=
          face.tight_facets.end())
        face.exceptional_tight.push_back(i);
    std::vector<LatticeVector> span;
    for (std::size_t i = 1; i < face.vertices.size(); ++i)
      span.push_back(sub(face.vertices[i], face.vertices[0]));
    span.insert(span.end(), face.recession_rays.begin(), face.recession_rays.end());
    face.dim = rank_of(span);
  }

  MonomialIdeal ideal_;
  std::vector<Monomial> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::size_t> exceptional_;  // indices of non-coordinate facets
  Fan fan_;
};

inline NewtonPolytope newton_polytope(const MonomialIdeal& ideal) {
  return NewtonPolytope(ideal);
}

inline Fan normal_fan(const NewtonPolytope& p) { return p.normal_fan(); }

struct ExceptionalRays {
  std::vector<MonomialValuation> valuations;
  bool principal_no_divisors = false;  // warning flag, not an error
};

// Primitive rays of the normal fan that are not coordinate directions, in
// lexicographic order; each is the valuation of an exceptional divisor of
// the normalized blow-up.
inline ExceptionalRays exceptional_rays(const MonomialIdeal& ideal) {
  NewtonPolytope p(ideal);
  ExceptionalRays out;
  for (const auto& v : p.exceptional_rays()) out.valuations.push_back(MonomialValuation(v));
  if (out.valuations.empty()) out.principal_no_divisors = true;
  return out;
}

// Generators of the ideal whose exponents lie on the face.
inline MonomialIdeal face_initial_ideal(const MonomialIdeal& ideal, const NewtonPolytope& p,
                                        const PolytopeFace& face) {
  if (ideal != p.ideal())
    throw std::invalid_argument("face_initial_ideal: face does not belong to this ideal's polytope");
  if (!p.is_valid_face(face))
    throw std::invalid_argument("face_initial_ideal: not a face of the Newton polytope");
  if (face.whole) return ideal;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    bool on_face = true;
    for (std::size_t j : face.tight_facets)
      if (dot(p.facets()[j].normal, g) != p.facets()[j].offset) { on_face = false; break; }
    if (on_face) gens.push_back(g);
  }
  if (gens.empty())
    throw std::invalid_argument("face_initial_ideal: face carries no generator");
  return MonomialIdeal(ideal.ambient_dim(), std::move(gens));
}

namespace detail {

template <typename Pred>
std::vector<Monomial> enumerate_box(const std::vector<Int>& bounds, Pred keep) {
  std::size_t n = bounds.size();
  Int cells = 1;
  for (const Int& b : bounds) {
    cells *= b + 1;
    if (cells > 4000000) throw std::invalid_argument("lattice enumeration box too large");
  }
  std::vector<Monomial> pts;
  Monomial cur(n, Int(0));
  while (true) {
    if (keep(cur)) pts.push_back(cur);
    std::size_t j = 0;
    while (j < n && cur[j] == bounds[j]) cur[j++] = 0;
    if (j == n) break;
    ++cur[j];
  }
  return pts;
}

}  // namespace detail

// Minimal monomial generators of the set of lattice points of P_I.  The
// enumeration box (componentwise max of the vertex coordinates) is complete:
// any lattice point of P with a coordinate above the box keeps a nonnegative
// orthant part after a unit decrement in that coordinate, so it is divisible
// by a box point of P.
inline MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  NewtonPolytope p(ideal);
  std::size_t n = ideal.ambient_dim();
  std::vector<Int> bounds(n, Int(0));
  for (const auto& v : p.vertices())
    for (std::size_t j = 0; j < n; ++j) bounds[j] = std::max(bounds[j], v[j]);
  auto pts = detail::enumerate_box(bounds, [&](const Monomial& m) { return p.member(m); });
  return MonomialIdeal(n, std::move(pts));
}

// Minimal generators of {x^m : <v_i, m> >= a_i for all i}.  Nonpositive
// bounds are dropped (I_{v,a} = O_X for a <= 0); a generator coordinate never
// exceeds max_i a_i, so the box enumeration is complete.
inline MonomialIdeal valuation_ideal(const std::vector<MonomialValuation>& vals,
                                     const std::vector<Int>& bounds, std::size_t n) {
  if (vals.size() != bounds.size())
    throw std::invalid_argument("valuation_ideal: lists of different length");
  Int top = 0;
  for (const Int& a : bounds) top = std::max(top, a);
  if (top == 0) return unit_ideal(n);
  std::vector<Int> box(n, top);
  auto pts = detail::enumerate_box(box, [&](const Monomial& m) {
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (bounds[i] > 0 && dot(vals[i].vec, m) < bounds[i]) return false;
    return true;
  });
  return MonomialIdeal(n, std::move(pts));
}

}  // namespace coxcob
