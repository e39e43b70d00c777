#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "coxcob/cobord.hpp"
#include "coxcob/fan.hpp"
#include "coxcob/monomial.hpp"
#include "coxcob/newton.hpp"
#include "coxcob/polynomial.hpp"
#include "coxcob/singular.hpp"

namespace coxcob {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; keys are sorted by nlohmann's object ordering,
// so serialization is byte-deterministic.
inline json json_int(const Int& v) {
  if (v <= Int(std::numeric_limits<long long>::max()) &&
      v >= Int(std::numeric_limits<long long>::min()))
    return json(static_cast<long long>(v));
  return json(v.str());
}

inline json json_vec(const LatticeVector& v) {
  json a = json::array();
  for (const Int& c : v) a.push_back(json_int(c));
  return a;
}

inline json json_vecs(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(json_vec(v));
  return a;
}

inline json json_rat(const Rat& q) {
  if (denominator(q) == 1) return json_int(numerator(q));
  return json(numerator(q).str() + "/" + denominator(q).str());
}

inline json to_json(const MonomialIdeal& I) { return json_vecs(I.generators()); }

// {rays, max_cones}: maximal cones as sorted index lists into the ray table.
inline json to_json(const Fan& f, const std::vector<LatticeVector>* ray_table = nullptr) {
  std::vector<LatticeVector> rays = ray_table ? *ray_table : f.vertices();
  json cones = json::array();
  for (const auto& c : f.max_cones()) {
    json idx = json::array();
    for (const auto& r : c.rays()) {
      auto it = std::lower_bound(rays.begin(), rays.end(), r, lex_less);
      if (it == rays.end() || *it != r)
        throw std::logic_error("fan serialization: ray missing from the table");
      idx.push_back(static_cast<long long>(it - rays.begin()));
    }
    cones.push_back(std::move(idx));
  }
  json out;
  out["rays"] = json_vecs(rays);
  out["max_cones"] = std::move(cones);
  return out;
}

inline json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json t;
    t["exponents"] = json_vec(e);
    t["coefficient"] = f.field() == CoeffField::units ? json("unit") : json_rat(c);
    terms.push_back(std::move(t));
  }
  json out;
  out["field"] = f.field() == CoeffField::rationals ? "rationals"
                 : f.field() == CoeffField::prime   ? "prime"
                                                    : "units";
  if (f.field() == CoeffField::prime) out["characteristic"] = f.characteristic();
  out["variables"] = f.vars();
  out["terms"] = std::move(terms);
  return out;
}

inline json to_json(const NewtonPolytope& p) {
  json facets = json::array();
  for (const auto& fc : p.facets()) {
    json f;
    f["normal"] = json_vec(fc.normal);
    f["offset"] = json_int(fc.offset);
    facets.push_back(std::move(f));
  }
  json faces = json::array();
  for (const auto& face : p.supporting_faces()) {
    json f;
    f["vertices"] = json_vecs(face.vertices);
    f["recession_rays"] = json_vecs(face.recession_rays);
    json tf = json::array();
    for (std::size_t j : face.tight_facets) tf.push_back(static_cast<long long>(j));
    f["tight_facets"] = std::move(tf);
    json ex = json::array();
    for (std::size_t j : face.exceptional_tight) ex.push_back(static_cast<long long>(j));
    f["exceptional_tight"] = std::move(ex);
    f["dim"] = static_cast<long long>(face.dim);
    faces.push_back(std::move(f));
  }
  json out;
  out["generators"] = to_json(p.ideal());
  out["vertices"] = json_vecs(p.vertices());
  out["facets"] = std::move(facets);
  out["exceptional_rays"] = json_vecs(p.exceptional_rays());
  out["supporting_faces"] = std::move(faces);
  out["principal"] = !p.has_supporting_faces();
  return out;
}

inline json to_json(const CobordPresentation& P) {
  json out;
  out["variables"] = P.vars;
  out["valuations"] = json_vecs(P.valuations);
  out["alphas"] = json_vecs(P.alphas);
  json wc;
  wc["generators"] = to_json(P.weak_center_ideal);
  json shift = json::array();
  for (const Int& a : P.weak_shift) shift.push_back(json_int(a));
  wc["shift"] = std::move(shift);
  out["weak_center"] = std::move(wc);
  std::vector<LatticeVector> table = P.fan_B.vertices();
  out["fan_B"] = to_json(P.fan_B, &table);
  json bp = to_json(P.fan_Bplus, &table);
  out["fan_Bplus"] = json{{"max_cones", bp["max_cones"]}};
  json scales = json::array();
  for (const Int& b : P.scales) scales.push_back(b == 1 ? json("1") : json("1/" + b.str()));
  out["scales"] = std::move(scales);
  QuotientReport q = quotient_type(P);
  out["quotient"] = json{{"good", q.good}, {"geometric", q.geometric}};
  out["principal"] = P.principal;
  return out;
}

inline json to_json(const SimpleCobordant& S) {
  json out;
  out["variables"] = S.vars;
  out["center"] = to_json(S.center);
  out["qdenom"] = json_int(S.qdenom);
  out["rays"] = json_vecs(S.rays);
  json nu = json::array();
  for (const Int& a : S.nu) nu.push_back(json_int(a));
  out["nu"] = std::move(nu);
  out["cutoff"] = S.cutoff;
  json pieces = json::array();
  for (const auto& p : S.pieces) pieces.push_back(to_json(p));
  out["pieces"] = std::move(pieces);
  json gens = json::array();
  for (const auto& [m, d] : S.algebra_generators) {
    json g;
    g["exponents"] = json_vec(m);
    g["degree"] = d;
    gens.push_back(std::move(g));
  }
  out["algebra_generators"] = std::move(gens);
  out["principal"] = S.principal;
  return out;
}

inline json to_json(const ValuationFaceComplex& C) {
  json faces = json::array();
  for (const auto& f : C.E_faces) {
    json a = json::array();
    for (std::size_t i : f) a.push_back(static_cast<long long>(i));
    faces.push_back(std::move(a));
  }
  json out;
  out["vertices"] = json_vecs(C.vertices);
  out["E_faces"] = std::move(faces);
  out["D_is_full_simplex"] = true;
  return out;
}

inline json to_json(const GradedPresentation& G) {
  json omega = json::array();
  for (std::size_t i : G.omega) omega.push_back(static_cast<long long>(i));
  json rows = json::array();
  for (const auto& r : G.gradings) {
    json row = json::array();
    for (const Int& c : r) row.push_back(json_int(c));
    rows.push_back(std::move(row));
  }
  json out;
  out["omega"] = std::move(omega);
  out["vanishing"] = G.vanishing;
  out["surviving"] = G.surviving;
  out["gradings"] = std::move(rows);
  return out;
}

inline json to_json(const TransformResult& T) {
  json shift = json::array();
  for (const Int& a : T.shift) shift.push_back(json_int(a));
  json out;
  out["shift"] = std::move(shift);
  out["polynomial"] = to_json(T.g);
  return out;
}

inline json to_json(const CheckReport& R) {
  json conds = json::array();
  for (const auto& c : R.conditions) {
    json j;
    j["id"] = c.id;
    j["clause"] = c.clause;
    j["ok"] = c.ok;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.note.empty()) j["note"] = c.note;
    conds.push_back(std::move(j));
  }
  json out;
  out["verdict"] = to_string(R.verdict);
  out["conditions"] = std::move(conds);
  json budget;
  budget["primes"] = R.primes;
  budget["points_tested"] = R.points_tested;
  budget["cap"] = R.budget;
  out["budget"] = std::move(budget);
  if (R.characteristic >= 0) out["characteristic"] = R.characteristic;
  out["notes"] = R.notes;
  return out;
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace coxcob
