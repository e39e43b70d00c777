#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcob/fan.hpp"
#include "coxcob/lattice.hpp"
#include "coxcob/monomial.hpp"
#include "coxcob/newton.hpp"
#include "coxcob/numeric.hpp"
#include "coxcob/polynomial.hpp"

namespace coxcob {

// Full cobordant blow-up presentation over a polynomial coordinate chart:
// B = Spec O_X[t_1^-1..t_k^-1, u_j t^(alpha_.j)], with fan_B / fan_Bplus in
// dimension n+k (base coordinates first, then the exceptional directions).
struct CobordPresentation {
  std::vector<std::string> vars;            // base variable names, length n
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<LatticeVector> valuations;    // primitive exceptional rays v_i
  std::vector<LatticeVector> alphas;        // k rows: alpha_ij = b_i * <v_i, e_j>
  std::vector<Int> scales;                  // b_i (torus variable t_i graded 1/b_i)
  MonomialIdeal weak_center_ideal;          // J
  std::vector<Int> weak_shift;              // a_i with sigma°(J) = t^a J
  Fan fan_B;                                // dim n+k
  Fan fan_Bplus;                            // subfan of fan_B
  Fan quotient_fan;                         // Delta (replaced by Delta^s after stable_locus)
  bool principal = false;                   // no exceptional divisors
};

namespace detail {

// Subfan of sigma x sigma_0 (the product orthant in n+k coordinates) of the
// faces whose projection e_i -> v_i, identity on the base, lands inside a
// single cone of the target fan.
inline Fan product_subfan(std::size_t n, std::size_t k,
                          const std::vector<LatticeVector>& valuations,
                          const Fan& target) {
  if (n + k > 12)
    throw std::invalid_argument("cobordization fans limited to n+k <= 12 coordinates");
  std::size_t total = n + k;
  std::vector<std::size_t> good;
  for (std::size_t mask = 0; mask < (std::size_t(1) << total); ++mask) {
    std::vector<LatticeVector> image;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t(1) << j)) image.push_back(unit_vector(n, j));
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t(1) << (n + i))) image.push_back(valuations[i]);
    bool inside = false;
    for (const auto& c : target.max_cones()) {
      bool all = true;
      for (const auto& g : image)
        if (!c.contains(g)) { all = false; break; }
      if (all) { inside = true; break; }
    }
    if (inside) good.push_back(mask);
  }
  std::vector<Cone> cones;
  for (std::size_t m : good) {
    bool maximal = true;
    for (std::size_t m2 : good)
      if (m2 != m && (m & m2) == m) { maximal = false; break; }
    if (!maximal) continue;
    std::vector<LatticeVector> rays;
    for (std::size_t b = 0; b < total; ++b)
      if (m & (std::size_t(1) << b)) rays.push_back(unit_vector(total, b));
    cones.push_back(Cone::from_extremal(total, std::move(rays)));
  }
  return Fan(total, std::move(cones));
}

inline std::vector<std::string> default_vars(std::size_t n) {
  static const char* xyz[] = {"x", "y", "z"};
  std::vector<std::string> vs;
  if (n <= 3) {
    for (std::size_t j = 0; j < n; ++j) vs.push_back(xyz[j]);
  } else {
    for (std::size_t j = 0; j < n; ++j) vs.push_back("u" + std::to_string(j + 1));
  }
  return vs;
}

}  // namespace detail

inline CobordPresentation full_cobordization(const MonomialIdeal& J,
                                             std::vector<std::string> vars = {}) {
  CobordPresentation P;
  P.n = J.ambient_dim();
  P.vars = vars.empty() ? detail::default_vars(P.n) : std::move(vars);
  if (P.vars.size() != P.n)
    throw std::invalid_argument("full_cobordization: variable list has wrong length");
  NewtonPolytope poly(J);
  std::vector<LatticeVector> rays = poly.exceptional_rays();
  P.k = rays.size();
  P.principal = rays.empty();
  P.valuations = rays;
  P.scales.assign(P.k, Int(1));
  P.alphas = rays;
  P.weak_center_ideal = J;
  for (const auto& v : rays) P.weak_shift.push_back(val_of(MonomialValuation(v), J));
  P.quotient_fan = poly.normal_fan();
  P.fan_B = detail::product_subfan(P.n, P.k, P.valuations, orthant_fan(P.n));
  P.fan_Bplus = detail::product_subfan(P.n, P.k, P.valuations, P.quotient_fan);
  return P;
}

// Weighted cobordant blow-up from a weight vector (zero entries mark unused
// variables): B = Spec O[t^-1, x_i t^(w_i)] for the primitive w.
inline CobordPresentation weighted_cobordant(const std::vector<Int>& weights,
                                             std::vector<std::string> vars = {}) {
  std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("weighted_cobordant: no weights given");
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < n; ++j) {
    if (weights[j] < 0) throw std::invalid_argument("weighted_cobordant: weights must be positive");
    if (weights[j] > 0) used.push_back(j);
  }
  if (used.empty()) throw std::invalid_argument("weighted_cobordant: weights must be positive");
  LatticeVector w = primitive(weights);
  Int L = 1;
  for (std::size_t j : used) L = lcm(L, w[j]);
  std::vector<Monomial> gens;
  for (std::size_t j : used) {
    Monomial m(n, Int(0));
    m[j] = L / w[j];
    gens.push_back(m);
  }
  CobordPresentation P;
  P.n = n;
  P.vars = vars.empty() ? detail::default_vars(n) : std::move(vars);
  if (P.vars.size() != n)
    throw std::invalid_argument("weighted_cobordant: variable list has wrong length");
  P.k = 1;
  P.valuations = {w};
  P.alphas = {w};
  P.scales = {Int(1)};
  P.weak_center_ideal = MonomialIdeal(n, std::move(gens));
  P.weak_shift = {L};
  P.quotient_fan = star_subdivision(orthant_fan(n), w);
  P.fan_B = detail::product_subfan(n, 1, P.valuations, orthant_fan(n));
  P.fan_Bplus = detail::product_subfan(n, 1, P.valuations, P.quotient_fan);
  return P;
}

// Same construction from a center (x_1^{a_1},...,x_k^{a_k}); solves
// w_1 a_1 = ... = w_k a_k with primitive w.  The input ideal is kept as the
// weak center.
inline CobordPresentation weighted_from_ideal(const MonomialIdeal& J,
                                              std::vector<std::string> vars = {}) {
  std::size_t n = J.ambient_dim();
  std::vector<Int> exponent_of(n, Int(0));
  std::vector<std::size_t> used;
  for (const auto& g : J.generators()) {
    std::size_t var = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (g[j] == 0) continue;
      if (var != n)
        throw std::invalid_argument("weighted center must have single-variable generators");
      var = j;
    }
    if (var == n) throw std::invalid_argument("weighted center generators must be nonconstant");
    if (exponent_of[var] != 0)
      throw std::invalid_argument("weighted center repeats a variable");
    exponent_of[var] = g[var];
    used.push_back(var);
  }
  Int A = 1;
  for (std::size_t j : used) A = lcm(A, exponent_of[j]);
  std::vector<Int> weights(n, Int(0));
  for (std::size_t j : used) weights[j] = A / exponent_of[j];
  CobordPresentation P = weighted_cobordant(weights, std::move(vars));
  P.weak_center_ideal = J;
  P.weak_shift = {val_of(MonomialValuation(P.valuations[0]), J)};
  return P;
}

// Multi-weighted variant: row i of the gradings scaled by
// b_i, torus variable t_i graded by 1/b_i.
inline CobordPresentation multi_weighted(const MonomialIdeal& J, const std::vector<Int>& b,
                                         std::vector<std::string> vars = {}) {
  CobordPresentation P = full_cobordization(J, std::move(vars));
  if (b.size() != P.k)
    throw std::invalid_argument("multi_weighted: b has length " + std::to_string(b.size()) +
                                " but there are " + std::to_string(P.k) +
                                " exceptional valuations");
  for (const Int& bi : b)
    if (bi <= 0) throw std::invalid_argument("multi_weighted: b entries must be positive");
  P.scales = b;
  for (std::size_t i = 0; i < P.k; ++i) {
    P.alphas[i] = scale(b[i], P.valuations[i]);
    P.weak_shift[i] *= b[i];
  }
  return P;
}

// Simple cobordant blow-up B = Spec O_X[t^-1, J t]^int (extended Rees
// algebra), with an optional Q-ideal exponent 1/qdenom.  The degree-m piece
// is the section ideal of (J^{1/qdenom})^m, i.e. the monomials with
// <v_i, beta> >= ceil(m a_i / qdenom) for all exceptional rays.
struct SimpleCobordant {
  std::vector<std::string> vars;
  MonomialIdeal center;
  Int qdenom = 1;
  std::vector<LatticeVector> rays;
  std::vector<Int> nu;                       // a_i = val(v_i)(J)
  int cutoff = 0;
  std::vector<MonomialIdeal> pieces;         // degree 1..cutoff
  std::vector<std::pair<Monomial, int>> algebra_generators;  // x^beta t^m
  bool principal = false;
};

inline SimpleCobordant simple_cobordant(const MonomialIdeal& J, int cutoff = 6,
                                        Int qdenom = Int(1),
                                        std::vector<std::string> vars = {}) {
  if (cutoff < 1) throw std::invalid_argument("simple_cobordant: cutoff must be >= 1");
  if (qdenom < 1) throw std::invalid_argument("simple_cobordant: Q-ideal denominator must be >= 1");
  SimpleCobordant S;
  S.vars = vars.empty() ? detail::default_vars(J.ambient_dim()) : std::move(vars);
  S.center = J;
  S.qdenom = qdenom;
  S.cutoff = cutoff;
  std::size_t n = J.ambient_dim();
  auto exc = exceptional_rays(J);
  S.principal = exc.principal_no_divisors;
  std::vector<MonomialValuation> vals;
  for (const auto& v : exc.valuations) {
    S.rays.push_back(v.vec);
    S.nu.push_back(val_of(v, J));
    vals.push_back(v);
  }
  std::vector<MonomialIdeal> pieces;  // one extra degree for redundancy tests
  for (int m = 1; m <= cutoff + 1; ++m) {
    if (S.principal) {
      // (J^m)^int = J^m for a principal monomial ideal.
      Monomial g = J.generators()[0];
      Monomial piece(n);
      for (std::size_t j = 0; j < n; ++j) piece[j] = ceil_div(Int(m) * g[j], qdenom);
      pieces.push_back(MonomialIdeal(n, {piece}));
    } else {
      std::vector<Int> bounds;
      for (const Int& a : S.nu) bounds.push_back(ceil_div(Int(m) * a, qdenom));
      pieces.push_back(valuation_ideal(vals, bounds, n));
    }
  }
  S.pieces.assign(pieces.begin(), pieces.begin() + cutoff);

  // Minimal algebra generators over O_X[t^-1]: x^beta t^m is redundant iff
  // beta lies in the next piece (then it is t^-1 times a deeper element) or
  // splits into at least two piece monomials of total degree >= m.
  std::vector<std::pair<Monomial, int>> candidates;
  for (int m = 1; m <= cutoff; ++m)
    for (const auto& beta : pieces[m - 1].generators()) candidates.emplace_back(beta, m);
  std::function<bool(const Monomial&, long long, int, const std::pair<Monomial, int>&)>
      splits = [&](const Monomial& beta, long long m, int used,
                   const std::pair<Monomial, int>& self) -> bool {
    if (used >= 2 && m <= 0) return true;
    for (const auto& cand : candidates) {
      if (used == 0 && cand == self) continue;
      if (!divides(cand.first, beta)) continue;
      if (splits(sub(beta, cand.first), m - cand.second, used + 1, self)) return true;
    }
    return false;
  };
  for (const auto& cand : candidates) {
    if (pieces[cand.second].contains(cand.first)) continue;  // next piece
    if (splits(cand.first, cand.second, 0, cand)) continue;
    S.algebra_generators.push_back(cand);
  }
  std::stable_sort(S.algebra_generators.begin(), S.algebra_generators.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second < b.second;
                     return lex_less(a.first, b.first);
                   });
  return S;
}

// Dual valuation complexes Delta_E (= Delta_{D+}) and Delta_D for the full
// cobordant blow-up of J.  A subset of exceptional valuations is a face of
// Delta_E iff its rays span vertices of a common cone of the normal fan;
// Delta_D is the full simplex in the affine-chart model.
struct ValuationFaceComplex {
  std::vector<LatticeVector> vertices;
  std::vector<std::vector<std::size_t>> E_faces;  // sorted subsets, empty face included
};

inline ValuationFaceComplex dual_valuation_complex(const MonomialIdeal& J) {
  NewtonPolytope p(J);
  ValuationFaceComplex C;
  C.vertices = p.exceptional_rays();
  std::size_t k = C.vertices.size();
  if (k == 0)
    throw std::invalid_argument("dual_valuation_complex: ideal has no exceptional divisors");
  if (k > 16) throw std::invalid_argument("dual_valuation_complex: too many rays");
  const Fan& delta = p.normal_fan();
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    bool member = false;
    for (const auto& c : delta.max_cones()) {
      bool all = true;
      for (std::size_t i = 0; i < k && all; ++i)
        if (mask & (std::size_t(1) << i))
          if (!c.contains(C.vertices[i])) all = false;
      if (all) { member = true; break; }
    }
    if (!member) continue;
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t(1) << i)) face.push_back(i);
    C.E_faces.push_back(std::move(face));
  }
  std::sort(C.E_faces.begin(), C.E_faces.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return C;
}

// gr_omega(O_X) = O_{V(J_omega)}[u_j t^(alpha_j)]: the variables with a
// positive valuation in omega vanish; the rest survive to the base.
struct GradedPresentation {
  std::vector<std::size_t> omega;           // indices into the presentation's valuations
  std::vector<std::string> vanishing;       // generators of J_omega
  std::vector<std::string> surviving;
  std::vector<std::vector<Int>> gradings;   // |omega| rows, one column per base variable
};

inline GradedPresentation weighted_normal_bundle(const CobordPresentation& P,
                                                 std::vector<std::size_t> omega) {
  std::sort(omega.begin(), omega.end());
  omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
  for (std::size_t i : omega)
    if (i >= P.k) throw std::invalid_argument("weighted_normal_bundle: bad valuation index");
  GradedPresentation G;
  G.omega = omega;
  for (std::size_t j = 0; j < P.n; ++j) {
    bool vanishes = false;
    for (std::size_t i : omega)
      if (P.alphas[i][j] > 0) vanishes = true;
    (vanishes ? G.vanishing : G.surviving).push_back(P.vars[j]);
  }
  for (std::size_t i : omega) G.gradings.push_back(P.alphas[i]);
  return G;
}

// Weak transform data: substituting u_j = u'_j s^(alpha_.j) into f and
// dividing by s^a, where a_i is the minimum of <alpha_i, exponent> over the
// terms.  Variables of the result: s_1..s_k then the primed base variables.
struct TransformResult {
  std::vector<Int> shift;  // a
  Polynomial g;            // no term divisible by any s_i beyond the minimum
};

namespace detail {

inline std::vector<std::string> chart_vars(const CobordPresentation& P) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < P.k; ++i) vs.push_back("s" + std::to_string(i + 1));
  for (const auto& v : P.vars) vs.push_back(v + "'");
  return vs;
}

inline LatticeVector align_exponent(const Polynomial& f, const LatticeVector& e,
                                    const std::vector<std::string>& target) {
  LatticeVector out(target.size(), Int(0));
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    auto it = std::find(target.begin(), target.end(), f.vars()[j]);
    if (it == target.end())
      throw std::invalid_argument("variable " + f.vars()[j] +
                                  " is not a base variable of the presentation");
    out[it - target.begin()] = e[j];
  }
  return out;
}

}  // namespace detail

inline TransformResult transform(const Polynomial& f, const CobordPresentation& P) {
  if (f.is_zero()) throw std::invalid_argument("transform of the zero polynomial");
  std::vector<LatticeVector> exps;
  for (const auto& [e, c] : f.terms()) exps.push_back(detail::align_exponent(f, e, P.vars));
  std::vector<Int> a(P.k, Int(0));
  for (std::size_t i = 0; i < P.k; ++i) {
    bool first = true;
    for (const auto& e : exps) {
      Int d = dot(P.alphas[i], e);
      if (first || d < a[i]) a[i] = d;
      first = false;
    }
  }
  TransformResult R;
  R.shift = a;
  R.g = Polynomial(f.field(), detail::chart_vars(P), f.characteristic());
  std::size_t t = 0;
  for (const auto& [e, c] : f.terms()) {
    const LatticeVector& be = exps[t++];
    LatticeVector ne(P.k + P.n, Int(0));
    for (std::size_t i = 0; i < P.k; ++i) ne[i] = dot(P.alphas[i], be) - a[i];
    for (std::size_t j = 0; j < P.n; ++j) ne[P.k + j] = be[j];
    R.g.add_term(ne, c);
  }
  return R;
}

// Generator-wise weak transform of a monomial ideal: sigma°(I) = t^a I.
struct IdealTransform {
  std::vector<Int> shift;
  MonomialIdeal ideal;  // in the chart variables (s first, then primed base)
};

inline IdealTransform transform_ideal(const MonomialIdeal& I, const CobordPresentation& P) {
  if (I.ambient_dim() != P.n)
    throw std::invalid_argument("transform_ideal: ambient dimension mismatch");
  IdealTransform R;
  R.shift.assign(P.k, Int(0));
  for (std::size_t i = 0; i < P.k; ++i) {
    bool first = true;
    for (const auto& g : I.generators()) {
      Int d = dot(P.alphas[i], g);
      if (first || d < R.shift[i]) R.shift[i] = d;
      first = false;
    }
  }
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    Monomial m(P.k + P.n, Int(0));
    for (std::size_t i = 0; i < P.k; ++i) m[i] = dot(P.alphas[i], g) - R.shift[i];
    for (std::size_t j = 0; j < P.n; ++j) m[P.k + j] = g[j];
    gens.push_back(m);
  }
  R.ideal = MonomialIdeal(P.k + P.n, std::move(gens));
  return R;
}

// Transform of the weak center itself; its non-vanishing locus is B_+.
inline MonomialIdeal weak_center_transform(const CobordPresentation& P) {
  return transform_ideal(P.weak_center_ideal, P).ideal;
}

struct QuotientReport {
  bool good = false;
  bool geometric = false;
};

// Good: every cone of the quotient fan has a unique maximal preimage cone in
// fan_Bplus (re-verified, true by construction).  Geometric: the quotient
// fan is simplicial.
inline QuotientReport quotient_type(const CobordPresentation& P) {
  QuotientReport Q;
  Q.geometric = is_simplicial(P.quotient_fan);
  Q.good = true;
  std::vector<Cone> up = P.fan_Bplus.all_cones();
  auto image_in = [&](const Cone& c, const Cone& delta) {
    for (const auto& r : c.rays()) {
      LatticeVector img(P.n, Int(0));
      for (std::size_t j = 0; j < P.n; ++j) img[j] = r[j];
      for (std::size_t i = 0; i < P.k; ++i)
        if (r[P.n + i] != 0) img = add(img, scale(r[P.n + i], P.valuations[i]));
      if (!delta.contains(img)) return false;
    }
    return true;
  };
  for (const auto& delta : P.quotient_fan.all_cones()) {
    std::vector<const Cone*> candidates;
    for (const auto& c : up)
      if (image_in(c, delta)) candidates.push_back(&c);
    if (candidates.empty()) { Q.good = false; continue; }
    const Cone* top = candidates[0];
    for (const Cone* c : candidates)
      if (c->rays().size() > top->rays().size()) top = c;
    for (const Cone* c : candidates)
      if (!top->contains_cone(*c)) { Q.good = false; break; }
  }
  return Q;
}

// Restriction to the stable locus B^s: the quotient fan is simplicialized by
// star subdivisions at its own vertices and fan_Bplus shrinks accordingly;
// valuations, gradings and fan_B are untouched.
inline CobordPresentation stable_locus(const CobordPresentation& P) {
  CobordPresentation R = P;
  R.quotient_fan = simplicialize(P.quotient_fan);
  R.fan_Bplus = detail::product_subfan(P.n, P.k, P.valuations, R.quotient_fan);
  return R;
}

}  // namespace coxcob
