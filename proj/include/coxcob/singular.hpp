#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcob/cobord.hpp"
#include "coxcob/monomial.hpp"
#include "coxcob/newton.hpp"
#include "coxcob/polynomial.hpp"

namespace coxcob {

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

struct Condition {
  std::string id;
  std::string clause;
  bool ok = true;
  std::string witness;  // counterexample point or term when not ok
  std::string note;
};

// Structured evidence for a theorem-hypothesis check.  Brute-force point
// checks are rational-point proxies: they can refute a containment but not
// prove it, and the reports say so.
struct CheckReport {
  Verdict verdict = Verdict::pass;
  std::vector<Condition> conditions;
  long long characteristic = -1;  // -1 when not applicable
  std::vector<long long> primes;
  long long points_tested = 0;
  long long budget = 0;
  std::vector<std::string> notes;

  void add(Condition c) {
    if (!c.ok) verdict = Verdict::fail;
    conditions.push_back(std::move(c));
  }
  void mark_inconclusive(const std::string& why) {
    if (verdict != Verdict::fail) verdict = Verdict::inconclusive;
    notes.push_back(why);
  }
};

inline long long default_budget() { return 10000000; }

namespace detail {

inline long long pow_count(long long p, std::size_t m, long long cap) {
  long long c = 1;
  for (std::size_t i = 0; i < m; ++i) {
    c *= p;
    if (c > cap) return -1;
  }
  return c;
}

template <typename Fn>
void for_each_point(long long p, std::size_t m, Fn fn) {
  std::vector<long long> pt(m, 0);
  while (true) {
    fn(pt);
    std::size_t j = 0;
    while (j < m && pt[j] == p - 1) pt[j++] = 0;
    if (j == m) break;
    ++pt[j];
  }
}

inline std::string point_str(const std::vector<long long>& pt) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) os << ',';
    os << pt[i];
  }
  os << ')';
  return os.str();
}

inline bool monomial_vanishes_at(const Monomial& m, const std::vector<long long>& pt,
                                 long long p) {
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] > 0 && pt[j] % p == 0) return true;
  return false;
}

inline bool all_generators_vanish(const MonomialIdeal& J, const std::vector<long long>& pt,
                                  long long p) {
  for (const auto& g : J.generators())
    if (!monomial_vanishes_at(g, pt, p)) return false;
  return true;
}

// Terms of f with exponents on the given face of the Newton polytope of its
// support ideal (the full support is used, not only the minimal generators).
inline Polynomial face_initial_form(const Polynomial& f, const NewtonPolytope& p,
                                    const PolytopeFace& face) {
  Polynomial r(f.field(), f.vars(), f.characteristic());
  for (const auto& [e, c] : f.terms()) {
    bool on_face = true;
    for (std::size_t j : face.tight_facets)
      if (dot(p.facets()[j].normal, e) != p.facets()[j].offset) { on_face = false; break; }
    if (on_face) r.add_term(e, c);
  }
  return r;
}

}  // namespace detail

struct PointEnumeration {
  bool complete = false;
  std::vector<std::vector<long long>> points;
  long long tested = 0;
};

// All F_p-rational points where f and all first partials vanish.
inline PointEnumeration jacobian_singular_points(const Polynomial& f, long long p,
                                                 long long budget = default_budget()) {
  auto fp = f.reduce_mod(p);
  if (!fp) throw std::invalid_argument("polynomial does not reduce cleanly mod p");
  std::size_t m = f.nvars();
  PointEnumeration out;
  if (m > 8 || detail::pow_count(p, m, budget) < 0) return out;  // incomplete
  FpEvaluator ef(*fp);
  std::vector<FpEvaluator> partials;
  for (std::size_t j = 0; j < m; ++j) partials.push_back(FpEvaluator(fp->derivative(j)));
  detail::for_each_point(p, m, [&](const std::vector<long long>& pt) {
    ++out.tested;
    if (ef.eval(pt) != 0) return;
    for (const auto& dj : partials)
      if (dj.eval(pt) != 0) return;
    out.points.push_back(pt);
  });
  out.complete = true;
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// Order of f at the point a: minimal total degree after shifting coordinates.
inline Int order_at_point(const Polynomial& f, const std::vector<Rat>& a) {
  if (f.is_zero()) throw std::invalid_argument("order of the zero polynomial");
  Polynomial shifted = f.shift(a);
  if (shifted.is_zero())
    throw std::logic_error("shift of a nonzero polynomial vanished");
  return shifted.order();
}

inline Int order_at_point(const Polynomial& f, const std::vector<long long>& a) {
  std::vector<Rat> q(a.begin(), a.end());
  return order_at_point(f, q);
}

inline Int ideal_order_at_point(const std::vector<Polynomial>& gens,
                                const std::vector<long long>& a) {
  bool first = true;
  Int best = 0;
  for (const auto& f : gens) {
    Int o = order_at_point(f, a);
    if (first || o < best) best = o;
    first = false;
  }
  return best;
}

namespace detail {

// Compiled order-threshold test over F_p: ord_a(f) >= d iff every coefficient
// of f(x+a) in total degree < d vanishes; the coefficient at mu is
// sum_t c_t prod_j C(e_tj, mu_j) a_j^(e_tj - mu_j).  Avoids full shifts.
struct FpOrderTester {
  long long p;
  std::vector<std::vector<long long>> exps;
  std::vector<long long> coeffs;
  std::size_t m;

  explicit FpOrderTester(const Polynomial& f) : p(f.characteristic()), m(f.nvars()) {
    if (f.field() != CoeffField::prime)
      throw std::invalid_argument("FpOrderTester needs a prime-field polynomial");
    for (const auto& [e, c] : f.terms()) {
      std::vector<long long> row;
      for (const Int& x : e) row.push_back(to_ll(x));
      exps.push_back(std::move(row));
      coeffs.push_back(to_ll(numerator(c)));
    }
  }

  long long pow_mod(long long b, long long e) const {
    b %= p;
    long long r = 1;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }

  long long binom_mod(long long n, long long k) const {
    if (k < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
      num *= n - i;
      den *= i + 1;
    }
    return to_ll(mod_nonneg(num / den, p));
  }

  long long shifted_coefficient(const std::vector<long long>& mu,
                                const std::vector<long long>& a) const {
    long long acc = 0;
    for (std::size_t t = 0; t < exps.size(); ++t) {
      long long term = coeffs[t];
      for (std::size_t j = 0; j < m && term != 0; ++j) {
        if (exps[t][j] < mu[j]) { term = 0; break; }
        term = term * binom_mod(exps[t][j], mu[j]) % p;
        term = term * pow_mod(a[j], exps[t][j] - mu[j]) % p;
      }
      acc = (acc + term) % p;
    }
    return acc;
  }

  bool order_at_least(const std::vector<long long>& a, long long d) const {
    std::vector<long long> mu(m, 0);
    std::function<bool(std::size_t, long long)> walk = [&](std::size_t j,
                                                           long long left) -> bool {
      if (j == m) return shifted_coefficient(mu, a) == 0;
      for (long long v = 0; v <= left; ++v) {
        mu[j] = v;
        if (!walk(j + 1, left - v)) { mu[j] = 0; return false; }
      }
      mu[j] = 0;
      return true;
    };
    return walk(0, d - 1);
  }
};

}  // namespace detail

// F_p-rational points where every generator has order >= d.
inline PointEnumeration support_at_least(const std::vector<Polynomial>& gens, Int d,
                                         long long p, long long budget = default_budget()) {
  std::vector<detail::FpOrderTester> testers;
  for (const auto& f : gens) {
    auto fp = f.reduce_mod(p);
    if (!fp) throw std::invalid_argument("a generator does not reduce cleanly mod p");
    testers.push_back(detail::FpOrderTester(*fp));
  }
  std::size_t m = gens.empty() ? 0 : gens[0].nvars();
  long long dd = to_ll(d);
  PointEnumeration out;
  if (m > 8 || detail::pow_count(p, m, budget) < 0) return out;
  detail::for_each_point(p, m, [&](const std::vector<long long>& pt) {
    ++out.tested;
    for (const auto& t : testers)
      if (!t.order_at_least(pt, dd)) return;
    out.points.push_back(pt);
  });
  out.complete = true;
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// Witness-variable criterion (the `res` check).  In characteristic zero a term's
// witness variable must occur in that term and in no other; in
// characteristic p its exponent must be prime to p in its own term and a
// multiple of p (possibly zero) everywhere else.  All terms except possibly
// one need a witness.  Exact, no point enumeration.
inline CheckReport check_res(const Polynomial& f, long long characteristic) {
  if (f.is_zero()) throw std::invalid_argument("check res: zero polynomial");
  if (characteristic != 0 && !is_prime_ll(characteristic))
    throw std::invalid_argument("check res: characteristic must be 0 or a prime");
  if (f.field() == CoeffField::prime && f.characteristic() != characteristic)
    throw std::invalid_argument("check res: polynomial characteristic disagrees with flag");
  CheckReport R;
  R.characteristic = characteristic;
  std::vector<LatticeVector> exps;
  for (const auto& [e, c] : f.terms()) exps.push_back(e);
  if (exps.size() == 1) {
    Condition c{"terms", "at most one term may lack a witness variable", true, "",
                "degenerate input: a single term needs no witness"};
    R.add(std::move(c));
    return R;
  }
  std::size_t missing = 0;
  Int p(characteristic);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::string witness;
    for (std::size_t j = 0; j < f.nvars() && witness.empty(); ++j) {
      if (exps[i][j] == 0) continue;
      bool ok = true;
      if (characteristic == 0) {
        for (std::size_t i2 = 0; i2 < exps.size() && ok; ++i2)
          if (i2 != i && exps[i2][j] != 0) ok = false;
      } else {
        if (exps[i][j] % p == 0) ok = false;
        for (std::size_t i2 = 0; i2 < exps.size() && ok; ++i2)
          if (i2 != i && exps[i2][j] % p != 0) ok = false;
      }
      if (ok) witness = f.vars()[j];
    }
    Condition c;
    c.id = "term[" + std::to_string(i) + "]";
    c.clause = characteristic == 0
                   ? "a variable occurring in this term only"
                   : "a variable with exponent prime to p here and p-th powers elsewhere";
    c.ok = true;
    if (witness.empty()) {
      ++missing;
      c.note = "no admissible variable";
    } else {
      c.witness = witness;
    }
    R.conditions.push_back(std::move(c));
  }
  if (missing > 1) {
    Condition c{"terms", "at most one term may lack a witness variable", false,
                std::to_string(missing) + " terms lack a witness", ""};
    R.add(std::move(c));
  }
  return R;
}

// Independent-blocks criterion (the `res2` check): one syntactic check per block; the
// center is the product of the per-block monomial ideals.
inline CheckReport check_res2(const std::vector<Polynomial>& system, long long characteristic) {
  if (system.empty()) throw std::invalid_argument("check res2: empty system");
  const std::vector<std::string>& vars = system[0].vars();
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> used(vars.size(), false);
  for (const auto& f : system) {
    if (f.vars() != vars)
      throw std::invalid_argument("check res2: polynomials must share one variable list");
    std::vector<std::size_t> block;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      bool occurs = false;
      for (const auto& [e, c] : f.terms())
        if (e[j] != 0) occurs = true;
      if (occurs) {
        if (used[j])
          throw std::invalid_argument("check res2: variable " + vars[j] +
                                      " occurs in two blocks");
        used[j] = true;
        block.push_back(j);
      }
    }
    blocks.push_back(std::move(block));
  }
  CheckReport R;
  R.characteristic = characteristic;
  for (std::size_t b = 0; b < system.size(); ++b) {
    CheckReport sub = check_res(system[b], characteristic);
    for (auto& c : sub.conditions) {
      c.id = "block[" + std::to_string(b) + "]." + c.id;
      R.add(std::move(c));
    }
  }
  MonomialIdeal center = system[0].support_ideal();
  for (std::size_t b = 1; b < system.size(); ++b)
    center = center.product(system[b].support_ideal());
  std::ostringstream os;
  os << "center: product ideal with " << center.generators().size() << " generators";
  R.notes.push_back(os.str());
  return R;
}

namespace detail {

struct PrimeReduction {
  long long p;
  std::optional<Polynomial> fp;
};

inline std::vector<long long> effective_primes(const Polynomial& f,
                                               std::vector<long long> primes,
                                               CheckReport& R) {
  if (f.field() == CoeffField::prime) {
    long long p = f.characteristic();
    if (!primes.empty() && !(primes.size() == 1 && primes[0] == p))
      R.notes.push_back("polynomial is over F_" + std::to_string(p) +
                        "; testing only its own characteristic");
    return {p};
  }
  if (f.field() == CoeffField::units)
    throw std::invalid_argument("point checks need concrete coefficients");
  if (primes.empty()) primes = {5, 7};
  return primes;
}

inline bool codim_at_least_two(const MonomialIdeal& J, std::string& witness_var,
                               const std::vector<std::string>& vars) {
  if (J.is_unit()) return true;  // empty cosupport
  for (std::size_t j = 0; j < J.ambient_dim(); ++j) {
    bool divides_all = true;
    for (const auto& g : J.generators())
      if (g[j] == 0) { divides_all = false; break; }
    if (divides_all) {
      witness_var = vars[j];
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Hypersurface-resolution hypotheses at F_p-rational points: codim V(J) >= 2,
// Sing(V(f)) inside V(J), and per supporting face P the singular locus of
// V(in_P f) inside V(in_P J).  A proxy, not a proof.
inline CheckReport check_theorem_A(const Polynomial& f, std::vector<long long> primes,
                                   long long budget = default_budget()) {
  if (f.is_zero()) throw std::invalid_argument("check A: zero polynomial");
  CheckReport R;
  R.budget = budget;
  R.notes.push_back("rational-point proxy: pass means no counterexample at tested F_p points");
  std::vector<long long> ps = detail::effective_primes(f, std::move(primes), R);
  R.primes = ps;
  MonomialIdeal J = f.support_ideal();
  NewtonPolytope poly(J);
  auto faces = poly.supporting_faces();

  std::string bad_var;
  bool codim = detail::codim_at_least_two(J, bad_var, f.vars());
  R.add({"codim", "cosupport of the center has codimension >= 2", codim,
         codim ? "" : "variable " + bad_var + " divides every generator", ""});

  std::size_t usable = 0;
  for (long long p : ps) {
    auto fp = f.reduce_mod(p);
    if (!fp) {
      R.notes.push_back("p=" + std::to_string(p) + ": reduction changes the support; skipped");
      continue;
    }
    ++usable;
    std::string tag = "@" + std::to_string(p);
    PointEnumeration sing = jacobian_singular_points(*fp, p, budget);
    R.points_tested += sing.tested;
    if (!sing.complete) {
      R.mark_inconclusive("p=" + std::to_string(p) + ": point budget exceeded");
      continue;
    }
    Condition c{"sing-subset" + tag, "Sing(V(f)) contained in V(J)", true, "", ""};
    for (const auto& pt : sing.points)
      if (!detail::all_generators_vanish(J, pt, p)) {
        c.ok = false;
        c.witness = detail::point_str(pt);
        break;
      }
    R.add(std::move(c));

    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      Polynomial inf = detail::face_initial_form(*fp, poly, faces[fi]);
      MonomialIdeal inJ = face_initial_ideal(J, poly, faces[fi]);
      PointEnumeration fs = jacobian_singular_points(inf, p, budget);
      R.points_tested += fs.tested;
      if (!fs.complete) {
        R.mark_inconclusive("p=" + std::to_string(p) + ": face budget exceeded");
        continue;
      }
      Condition fc{"face[" + std::to_string(fi) + "]" + tag,
                   "Sing(V(in_P f)) contained in V(in_P J)", true, "", ""};
      for (const auto& pt : fs.points)
        if (!detail::all_generators_vanish(inJ, pt, p)) {
          fc.ok = false;
          fc.witness = detail::point_str(pt);
          break;
        }
      R.add(std::move(fc));
    }
  }
  if (usable == 0) R.mark_inconclusive("no usable prime reduction");
  return R;
}

// All-faces criterion (the `AQ` check): for every face P of the Newton polytope, the
// initial form cuts a smooth subscheme away from the coordinate divisor D.
inline CheckReport check_AQ(const Polynomial& f, std::vector<long long> primes,
                            long long budget = default_budget()) {
  if (f.is_zero()) throw std::invalid_argument("check AQ: zero polynomial");
  CheckReport R;
  R.budget = budget;
  R.notes.push_back("rational-point proxy: pass means no counterexample at tested F_p points");
  std::vector<long long> ps = detail::effective_primes(f, std::move(primes), R);
  R.primes = ps;
  MonomialIdeal J = f.support_ideal();
  NewtonPolytope poly(J);

  std::string bad_var;
  bool codim = detail::codim_at_least_two(J, bad_var, f.vars());
  R.add({"codim", "cosupport of the center has codimension >= 2", codim,
         codim ? "" : "variable " + bad_var + " divides every generator", ""});

  // All faces of P via cones of the normal fan; distinct term subsets only.
  std::vector<std::vector<LatticeVector>> term_subsets;
  std::vector<Polynomial> initial_forms;
  for (const auto& tau : poly.normal_fan().all_cones()) {
    Polynomial inf(f.field(), f.vars(), f.characteristic());
    std::vector<LatticeVector> subset;
    for (const auto& [e, c] : f.terms()) {
      bool tight = true;
      for (const auto& r : tau.rays())
        if (dot(r, e) != poly.support_value(r)) { tight = false; break; }
      if (tight) {
        inf.add_term(e, c);
        subset.push_back(e);
      }
    }
    if (subset.empty()) continue;
    if (std::find(term_subsets.begin(), term_subsets.end(), subset) != term_subsets.end())
      continue;
    term_subsets.push_back(std::move(subset));
    initial_forms.push_back(std::move(inf));
  }

  std::size_t usable = 0;
  for (long long p : ps) {
    std::string tag = "@" + std::to_string(p);
    if (!f.reduce_mod(p)) {  // face forms use a subset of f's terms
      R.notes.push_back("p=" + std::to_string(p) + ": reduction changes the support; skipped");
      continue;
    }
    for (std::size_t fi = 0; fi < initial_forms.size(); ++fi) {
      auto inp = initial_forms[fi].reduce_mod(p);
      if (!inp) continue;
      PointEnumeration fs = jacobian_singular_points(*inp, p, budget);
      R.points_tested += fs.tested;
      if (!fs.complete) {
        R.mark_inconclusive("p=" + std::to_string(p) + ": point budget exceeded");
        continue;
      }
      Condition fc{"face[" + std::to_string(fi) + "]" + tag,
                   "V(in_P f) smooth away from the coordinate divisor", true, "", ""};
      for (const auto& pt : fs.points) {
        bool off_divisor = true;
        for (long long x : pt)
          if (x % p == 0) { off_divisor = false; break; }
        if (off_divisor) {
          fc.ok = false;
          fc.witness = detail::point_str(pt);
          break;
        }
      }
      R.add(std::move(fc));
    }
    ++usable;
  }
  if (usable == 0) R.mark_inconclusive("no usable prime reduction");
  return R;
}

enum class OrderDropMode { res3, res4 };

// Order-drop hypotheses (`res3`/`res4` modes), with an optional conclusion
// check: after the full cobordant blow-up of the associated monomial ideal,
// the weak transform has order < d at all B_+ points.
inline CheckReport check_order_drop(const std::vector<Polynomial>& gens, Int d,
                                    std::vector<long long> primes,
                                    OrderDropMode mode = OrderDropMode::res3,
                                    bool check_conclusion = true,
                                    long long budget = default_budget()) {
  if (gens.empty()) throw std::invalid_argument("check order: empty ideal");
  const std::vector<std::string>& vars = gens[0].vars();
  for (const auto& f : gens)
    if (f.vars() != vars)
      throw std::invalid_argument("check order: generators must share one variable list");
  CheckReport R;
  R.budget = budget;
  R.notes.push_back("rational-point proxy: pass means no counterexample at tested F_p points");
  R.notes.push_back("initial ideals are taken generator-wise");
  std::vector<long long> ps = detail::effective_primes(gens[0], std::move(primes), R);
  R.primes = ps;

  std::vector<Monomial> support;
  for (const auto& f : gens)
    for (const auto& [e, c] : f.terms()) support.push_back(e);
  MonomialIdeal J(vars.size(), std::move(support));
  NewtonPolytope poly(J);

  // codim V(J) >= 2 is reported as a note only, so that
  // degenerate inputs like I = (x) still give a vacuous pass.
  std::string bad_var;
  if (!detail::codim_at_least_two(J, bad_var, vars))
    R.notes.push_back("center has codimension-one cosupport (variable " + bad_var +
                      " divides every generator)");

  auto reduce_all = [&](long long p) -> std::optional<std::vector<Polynomial>> {
    std::vector<Polynomial> out;
    for (const auto& f : gens) {
      auto fp = f.reduce_mod(p);
      if (!fp) return std::nullopt;
      out.push_back(*fp);
    }
    return out;
  };

  std::size_t usable = 0;
  for (long long p : ps) {
    auto red = reduce_all(p);
    if (!red) {
      R.notes.push_back("p=" + std::to_string(p) + ": reduction changes the support; skipped");
      continue;
    }
    ++usable;
    std::string tag = "@" + std::to_string(p);
    std::size_t m = vars.size();
    if (m > 8 || detail::pow_count(p, m, budget) < 0) {
      R.mark_inconclusive("p=" + std::to_string(p) + ": point budget exceeded");
      continue;
    }

    long long dd = to_ll(d);
    auto ideal_order_ge = [&](const std::vector<detail::FpOrderTester>& ts,
                              const std::vector<long long>& pt) {
      for (const auto& t : ts)
        if (!t.order_at_least(pt, dd)) return false;
      return true;
    };
    if (mode == OrderDropMode::res3) {
      std::vector<detail::FpOrderTester> full;
      for (const auto& f : *red) full.push_back(detail::FpOrderTester(f));
      Condition c{"supp-subset" + tag, "supp(I,d) contained in V(J)", true, "", ""};
      detail::for_each_point(p, m, [&](const std::vector<long long>& pt) {
        ++R.points_tested;
        if (!c.ok) return;
        if (ideal_order_ge(full, pt) && !detail::all_generators_vanish(J, pt, p)) {
          c.ok = false;
          c.witness = detail::point_str(pt);
        }
      });
      R.add(std::move(c));
      auto faces = poly.supporting_faces();
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        std::vector<detail::FpOrderTester> inits;
        for (const auto& f : *red) {
          Polynomial inf = detail::face_initial_form(f, poly, faces[fi]);
          if (!inf.is_zero()) inits.push_back(detail::FpOrderTester(inf));
        }
        MonomialIdeal inJ = face_initial_ideal(J, poly, faces[fi]);
        Condition fc{"face[" + std::to_string(fi) + "]" + tag,
                     "supp(in_P I, d) contained in V(inv_P J)", true, "", ""};
        detail::for_each_point(p, m, [&](const std::vector<long long>& pt) {
          ++R.points_tested;
          if (!fc.ok || inits.empty()) return;
          if (ideal_order_ge(inits, pt) && !detail::all_generators_vanish(inJ, pt, p)) {
            fc.ok = false;
            fc.witness = detail::point_str(pt);
          }
        });
        R.add(std::move(fc));
      }
    } else {
      // res4: every face, containment in the coordinate divisor.
      std::vector<std::vector<detail::FpOrderTester>> face_gens;
      std::vector<std::vector<LatticeVector>> seen;
      for (const auto& tau : poly.normal_fan().all_cones()) {
        std::vector<detail::FpOrderTester> inits;
        std::vector<LatticeVector> key;
        for (const auto& f : *red) {
          Polynomial inf(f.field(), f.vars(), f.characteristic());
          for (const auto& [e, c] : f.terms()) {
            bool tight = true;
            for (const auto& r : tau.rays())
              if (dot(r, e) != poly.support_value(r)) { tight = false; break; }
            if (tight) {
              inf.add_term(e, c);
              key.push_back(e);
            }
          }
          if (!inf.is_zero()) inits.push_back(detail::FpOrderTester(inf));
        }
        if (inits.empty()) continue;
        sort_unique(key);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        face_gens.push_back(std::move(inits));
      }
      for (std::size_t fi = 0; fi < face_gens.size(); ++fi) {
        Condition fc{"face[" + std::to_string(fi) + "]" + tag,
                     "supp(in_P I, d) contained in the coordinate divisor", true, "", ""};
        detail::for_each_point(p, m, [&](const std::vector<long long>& pt) {
          ++R.points_tested;
          if (!fc.ok) return;
          bool off_divisor = true;
          for (long long x : pt)
            if (x % p == 0) off_divisor = false;
          if (off_divisor && ideal_order_ge(face_gens[fi], pt)) {
            fc.ok = false;
            fc.witness = detail::point_str(pt);
          }
        });
        R.add(std::move(fc));
      }
    }
  }
  if (usable == 0) {
    R.mark_inconclusive("no usable prime reduction");
    return R;
  }

  if (check_conclusion) {
    CobordPresentation B = full_cobordization(J, vars);
    std::vector<TransformResult> trs;
    for (const auto& f : gens) trs.push_back(transform(f, B));
    MonomialIdeal W = weak_center_transform(B);
    std::size_t m = B.n + B.k;
    for (long long p : ps) {
      std::vector<Polynomial> gp;
      bool ok = true;
      for (const auto& t : trs) {
        auto r = t.g.reduce_mod(p);
        if (!r) { ok = false; break; }
        gp.push_back(*r);
      }
      if (!ok) continue;
      std::string tag = "@" + std::to_string(p);
      if (m > 8 || detail::pow_count(p, m, budget) < 0) {
        R.mark_inconclusive("conclusion at p=" + std::to_string(p) + ": budget exceeded");
        continue;
      }
      std::vector<detail::FpOrderTester> tg;
      for (const auto& g : gp) tg.push_back(detail::FpOrderTester(g));
      long long dd = to_ll(d);
      Condition c{"conclusion" + tag,
                  "weak transform has order < d at B_+ points", true, "", ""};
      detail::for_each_point(p, m, [&](const std::vector<long long>& pt) {
        ++R.points_tested;
        if (!c.ok) return;
        if (detail::all_generators_vanish(W, pt, p)) return;  // outside B_+
        bool all_ge = true;
        for (const auto& t : tg)
          if (!t.order_at_least(pt, dd)) { all_ge = false; break; }
        if (all_ge) {
          c.ok = false;
          c.witness = detail::point_str(pt);
        }
      });
      R.add(std::move(c));
    }
  }
  return R;
}

// End-to-end check that the transform of f is smooth at every F_p point of
// B_+ (Jacobian criterion on the chart, skipping points outside B_+).
inline CheckReport verify_resolution(const Polynomial& f, const CobordPresentation& P,
                                     std::vector<long long> primes,
                                     long long budget = default_budget()) {
  if (f.is_zero()) throw std::invalid_argument("verify: zero polynomial");
  CheckReport R;
  R.budget = budget;
  R.notes.push_back("rational-point proxy: pass means no counterexample at tested F_p points");
  std::vector<long long> ps = detail::effective_primes(f, std::move(primes), R);
  R.primes = ps;
  TransformResult tr = transform(f, P);
  MonomialIdeal W = P.k == 0 ? P.weak_center_ideal : weak_center_transform(P);
  std::size_t m = tr.g.nvars();
  std::size_t usable = 0;
  for (long long p : ps) {
    auto gp = tr.g.reduce_mod(p);
    if (!gp) {
      R.notes.push_back("p=" + std::to_string(p) + ": reduction changes the support; skipped");
      continue;
    }
    ++usable;
    if (m > 8 || detail::pow_count(p, m, budget) < 0) {
      R.mark_inconclusive("p=" + std::to_string(p) + ": point budget exceeded");
      continue;
    }
    FpEvaluator eg(*gp);
    std::vector<FpEvaluator> partials;
    for (std::size_t j = 0; j < m; ++j) partials.push_back(FpEvaluator(gp->derivative(j)));
    Condition c{"smooth@" + std::to_string(p),
                "transform cuts a regular subscheme of B_+", true, "", ""};
    detail::for_each_point(p, m, [&](const std::vector<long long>& pt) {
      ++R.points_tested;
      if (!c.ok) return;
      if (detail::all_generators_vanish(W, pt, p)) return;  // outside B_+
      if (eg.eval(pt) != 0) return;
      for (const auto& dj : partials)
        if (dj.eval(pt) != 0) return;
      c.ok = false;
      c.witness = detail::point_str(pt);
    });
    R.add(std::move(c));
  }
  if (usable == 0) R.mark_inconclusive("no usable prime reduction");
  return R;
}

}  // namespace coxcob
