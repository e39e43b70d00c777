#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxcob/lattice.hpp"
#include "coxcob/linalg.hpp"
#include "coxcob/numeric.hpp"

namespace coxcob {

struct GeneratorPair {
  std::vector<LatticeVector> lineality;
  std::vector<LatticeVector> rays;
};

namespace detail {

inline void prune_to_extremal(std::vector<LatticeVector>& rays,
                              const std::vector<LatticeVector>& lineality) {
  for (auto& r : rays) r = primitive(r);
  sort_unique(rays);
  // A ray is redundant iff it is generated by the remaining ones; greedy
  // removal keeps exactly the extreme rays.
  for (std::size_t i = 0; i < rays.size();) {
    std::vector<LatticeVector> others;
    others.reserve(rays.size() - 1);
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (in_cone_span(rays[i], others, lineality))
      rays.erase(rays.begin() + i);
    else
      ++i;
  }
}

inline std::vector<LatticeVector> canonical_lineality(std::vector<LatticeVector> basis,
                                                      std::size_t n) {
  if (basis.empty()) return basis;
  // Echelonize so that equal subspaces get equal bases.
  return kernel_basis(kernel_basis(basis, n), n);
}

}  // namespace detail

// Generators of {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs},
// split into a lineality basis and the extreme rays of the pointed part.
// Incremental double-description: constraints are applied one at a time to
// the pair (lineality, rays), with extremality restored after each step.
inline GeneratorPair dd_generators(std::size_t n,
                                   const std::vector<LatticeVector>& ineqs,
                                   const std::vector<LatticeVector>& eqs = {}) {
  std::vector<LatticeVector> L;
  for (std::size_t i = 0; i < n; ++i) L.push_back(unit_vector(n, i));
  std::vector<LatticeVector> R;

  auto apply = [&](const LatticeVector& a, bool equality) {
    std::size_t l0 = L.size();
    for (std::size_t i = 0; i < L.size(); ++i)
      if (dot(a, L[i]) != 0) { l0 = i; break; }
    if (l0 != L.size()) {
      LatticeVector v = L[l0];
      if (dot(a, v) < 0) v = negate(v);
      Int c0 = dot(a, v);
      std::vector<LatticeVector> newL;
      for (std::size_t i = 0; i < L.size(); ++i) {
        if (i == l0) continue;
        Int ci = dot(a, L[i]);
        newL.push_back(ci == 0 ? L[i] : primitive(combine(c0, L[i], -ci, v)));
      }
      for (auto& r : R) {
        Int cr = dot(a, r);
        if (cr != 0) r = primitive(combine(c0, r, -cr, v));
      }
      L = std::move(newL);
      if (!equality) R.push_back(v);
    } else {
      std::vector<LatticeVector> pos, zero, neg;
      for (const auto& r : R) {
        int s = sign(dot(a, r));
        (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
      }
      if (neg.empty() && !equality) return;
      std::vector<LatticeVector> newR = zero;
      if (!equality)
        for (const auto& p : pos) newR.push_back(p);
      for (const auto& p : pos)
        for (const auto& q : neg)
          newR.push_back(primitive(combine(dot(a, p), q, -dot(a, q), p)));
      R = std::move(newR);
    }
    detail::prune_to_extremal(R, L);
  };

  for (const auto& e : eqs)
    if (!is_zero(e)) apply(e, true);
  for (const auto& a : ineqs)
    if (!is_zero(a)) apply(a, false);

  return {detail::canonical_lineality(std::move(L), n), std::move(R)};
}

struct HRep {
  std::vector<LatticeVector> ineqs;  // inward facet normals: <a,x> >= 0
  std::vector<LatticeVector> eqs;    // hyperplanes containing the cone
};

// Rational polyhedral cone, stored by primitive extreme rays (plus a
// lineality basis when the cone contains lines, e.g. duals of
// lower-dimensional cones).  Immutable after construction.
class Cone {
 public:
  Cone() : n_(0) {}

  explicit Cone(std::size_t n, std::vector<LatticeVector> gens = {},
                bool assume_extremal = false)
      : n_(n) {
    for (const auto& g : gens)
      if (g.size() != n) throw std::invalid_argument("Cone: generator dimension mismatch");
    std::vector<LatticeVector> clean;
    for (const auto& g : gens)
      if (!is_zero(g)) clean.push_back(primitive(g));
    sort_unique(clean);
    if (assume_extremal) {
      rays_ = std::move(clean);
      return;
    }
    if (clean.empty()) return;
    GeneratorPair dual = dd_generators(n_, clean);
    hrep_ = HRep{dual.rays, dual.lineality};
    have_hrep_ = true;
    std::vector<LatticeVector> all = hrep_.ineqs;
    all.insert(all.end(), hrep_.eqs.begin(), hrep_.eqs.end());
    lineality_ = kernel_basis(all, n_);
    if (lineality_.empty()) {
      rays_ = std::move(clean);
      detail::prune_to_extremal(rays_, lineality_);
    } else {
      std::vector<LatticeVector> eqs = hrep_.eqs;
      eqs.insert(eqs.end(), lineality_.begin(), lineality_.end());
      rays_ = dd_generators(n_, hrep_.ineqs, eqs).rays;
    }
  }

  static Cone from_inequalities(std::size_t n, const std::vector<LatticeVector>& ineqs,
                                const std::vector<LatticeVector>& eqs = {}) {
    GeneratorPair g = dd_generators(n, ineqs, eqs);
    Cone c(n);
    c.rays_ = std::move(g.rays);
    c.lineality_ = std::move(g.lineality);
    return c;
  }

  // Fast path for faces and product cones whose rays are already known to be
  // primitive and extremal.
  static Cone from_extremal(std::size_t n, std::vector<LatticeVector> rays,
                            std::vector<LatticeVector> lineality = {}) {
    Cone c(n);
    sort_unique(rays);
    c.rays_ = std::move(rays);
    c.lineality_ = detail::canonical_lineality(std::move(lineality), n);
    return c;
  }

  std::size_t ambient_dim() const { return n_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& lineality() const { return lineality_; }
  bool is_strictly_convex() const { return lineality_.empty(); }

  std::size_t dim() const {
    std::vector<LatticeVector> all = rays_;
    all.insert(all.end(), lineality_.begin(), lineality_.end());
    return rank_of(all);
  }

  const HRep& hrep() const {
    if (!have_hrep_) {
      std::vector<LatticeVector> gens = rays_;
      for (const auto& l : lineality_) {
        gens.push_back(l);
        gens.push_back(negate(l));
      }
      GeneratorPair dual = dd_generators(n_, gens);
      hrep_ = HRep{dual.rays, dual.lineality};
      have_hrep_ = true;
    }
    return hrep_;
  }

  Cone dual() const {
    const HRep& h = hrep();
    if (h.eqs.empty()) return from_extremal(n_, h.ineqs);
    // with lineality present, rebuild through the canonicalizing path so
    // that the pointed-part rays are reduced modulo the lineality space
    std::vector<LatticeVector> gens = h.ineqs;
    for (const auto& e : h.eqs) {
      gens.push_back(e);
      gens.push_back(negate(e));
    }
    return Cone(n_, gens);
  }

  bool contains(const LatticeVector& v) const {
    const HRep& h = hrep();
    for (const auto& a : h.ineqs)
      if (dot(a, v) < 0) return false;
    for (const auto& e : h.eqs)
      if (dot(e, v) != 0) return false;
    return true;
  }

  bool contains_cone(const Cone& c) const {
    for (const auto& r : c.rays())
      if (!contains(r)) return false;
    for (const auto& l : c.lineality())
      if (!contains(l) || !contains(negate(l))) return false;
    return true;
  }

  bool relint_contains(const LatticeVector& v) const {
    const HRep& h = hrep();
    for (const auto& e : h.eqs)
      if (dot(e, v) != 0) return false;
    for (const auto& a : h.ineqs)
      if (dot(a, v) <= 0) return false;
    return true;
  }

  bool operator==(const Cone& o) const {
    return n_ == o.n_ && rays_ == o.rays_ && lineality_ == o.lineality_;
  }
  bool operator!=(const Cone& o) const { return !(*this == o); }
  bool operator<(const Cone& o) const {
    if (rays_.size() != o.rays_.size()) return rays_.size() < o.rays_.size();
    if (rays_ != o.rays_)
      return std::lexicographical_compare(rays_.begin(), rays_.end(),
                                          o.rays_.begin(), o.rays_.end(), lex_less);
    return std::lexicographical_compare(lineality_.begin(), lineality_.end(),
                                        o.lineality_.begin(), o.lineality_.end(), lex_less);
  }

  // All faces, each a Cone; every face of a cone is spanned by the extreme
  // rays lying on it (plus the lineality), so faces are the intersection
  // closure of the facet ray-sets.
  std::vector<Cone> faces() const {
    const HRep& h = hrep();
    std::set<std::vector<LatticeVector>> sets;
    sets.insert(rays_);
    for (const auto& a : h.ineqs) {
      std::vector<LatticeVector> tight;
      for (const auto& r : rays_)
        if (dot(a, r) == 0) tight.push_back(r);
      sets.insert(tight);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<LatticeVector>> cur(sets.begin(), sets.end());
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          std::vector<LatticeVector> meet;
          std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                                cur[j].end(), std::back_inserter(meet), lex_less);
          if (sets.insert(meet).second) grew = true;
        }
    }
    std::vector<Cone> out;
    for (const auto& s : sets) out.push_back(from_extremal(n_, s, lineality_));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Facets: faces tight on exactly one irredundant inequality.
  std::vector<Cone> facets() const {
    std::vector<Cone> fs = faces();
    std::size_t d = dim();
    std::vector<Cone> out;
    for (const auto& f : fs)
      if (f.dim() + 1 == d) out.push_back(f);
    return out;
  }

  bool is_face_of(const Cone& c) const {
    std::vector<Cone> fs = c.faces();
    return std::find(fs.begin(), fs.end(), *this) != fs.end();
  }

 private:
  std::size_t n_;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lineality_;
  mutable HRep hrep_;
  mutable bool have_hrep_ = false;
};

inline Cone dual_cone(const Cone& c) { return c.dual(); }

// Per-cone face list with dimensions and covering relations.
struct FaceLattice {
  std::vector<Cone> faces;                    // sorted, minimal face first
  std::vector<std::size_t> dims;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (face, covered-by)
};

inline FaceLattice face_lattice(const Cone& c) {
  FaceLattice fl;
  fl.faces = c.faces();
  std::stable_sort(fl.faces.begin(), fl.faces.end(),
                   [](const Cone& a, const Cone& b) {
                     if (a.dim() != b.dim()) return a.dim() < b.dim();
                     return a < b;
                   });
  for (const auto& f : fl.faces) fl.dims.push_back(f.dim());
  for (std::size_t i = 0; i < fl.faces.size(); ++i)
    for (std::size_t j = 0; j < fl.faces.size(); ++j) {
      if (fl.dims[j] != fl.dims[i] + 1) continue;
      if (std::includes(fl.faces[j].rays().begin(), fl.faces[j].rays().end(),
                        fl.faces[i].rays().begin(), fl.faces[i].rays().end(), lex_less))
        fl.covers.emplace_back(i, j);
    }
  return fl;
}

}  // namespace coxcob
