#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coxcob/lattice.hpp"
#include "coxcob/numeric.hpp"

namespace coxcob {

// Monomial x^a with nonnegative exponents.
using Monomial = LatticeVector;

inline void check_monomial(const Monomial& m) {
  for (const Int& e : m)
    if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("divides: dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Monomial ideal stored by its minimal generators in lexicographic order.
class MonomialIdeal {
 public:
  MonomialIdeal() : n_(0) {}

  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    for (const auto& g : gens) {
      if (g.size() != n) throw std::invalid_argument("MonomialIdeal: exponent dimension mismatch");
      check_monomial(g);
    }
    sort_unique(gens);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
        if (i != j && divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
      if (!redundant) gens_.push_back(gens[i]);
    }
  }

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_principal() const { return gens_.size() == 1; }
  bool is_unit() const { return gens_.size() == 1 && is_zero(gens_[0]); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (divides(g, m)) return true;
    return false;
  }

  bool contains(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  MonomialIdeal product(const MonomialIdeal& other) const {
    if (n_ != other.n_) throw std::invalid_argument("product: dimension mismatch");
    std::vector<Monomial> gens;
    for (const auto& a : gens_)
      for (const auto& b : other.gens_) gens.push_back(add(a, b));
    return MonomialIdeal(n_, std::move(gens));
  }

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  return MonomialIdeal(n, std::move(gens));
}

inline MonomialIdeal unit_ideal(std::size_t n) {
  return MonomialIdeal(n, {Monomial(n, Int(0))});
}

// Monomial valuation val(v): val(x^a) = <v,a>, extended to ideals by the
// minimum over generators.
struct MonomialValuation {
  LatticeVector vec;

  explicit MonomialValuation(LatticeVector v) : vec(std::move(v)) {
    bool positive = false;
    for (const Int& c : vec) {
      if (c < 0) throw std::invalid_argument("monomial valuation entries must be nonnegative");
      if (c > 0) positive = true;
    }
    if (!positive) throw std::invalid_argument("monomial valuation must be nonzero");
  }

  Int operator()(const Monomial& m) const { return dot(vec, m); }
};

inline Int val_of(const MonomialValuation& v, const Monomial& m) { return dot(v.vec, m); }

inline Int val_of(const MonomialValuation& v, const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  Int best = dot(v.vec, gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i) best = std::min(best, dot(v.vec, gens[i]));
  return best;
}

}  // namespace coxcob
