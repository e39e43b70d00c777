#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcob/lattice.hpp"
#include "coxcob/monomial.hpp"
#include "coxcob/numeric.hpp"

namespace coxcob {

enum class CoeffField { rationals, prime, units };

inline Int mod_nonneg(const Int& a, const Int& p) {
  Int r = a % p;
  if (r < 0) r += p;
  return r;
}

// Sparse polynomial over Q, over F_p, or with abstract unit coefficients
// (support set only; every term counts as a unit).  Terms are keyed by
// exponent vector in lexicographic order, so printing is deterministic.
class Polynomial {
 public:
  Polynomial() : field_(CoeffField::rationals), p_(0) {}

  Polynomial(CoeffField field, std::vector<std::string> vars, long long p = 0)
      : field_(field), p_(p), vars_(std::move(vars)) {
    if (field == CoeffField::prime && p < 2)
      throw std::invalid_argument("prime field needs a characteristic >= 2");
    if (field != CoeffField::prime && p != 0)
      throw std::invalid_argument("characteristic only applies to prime fields");
  }

  CoeffField field() const { return field_; }
  long long characteristic() const { return p_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<LatticeVector, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const LatticeVector& exp, Rat coeff) {
    if (exp.size() != vars_.size())
      throw std::invalid_argument("polynomial term has wrong arity");
    check_monomial(exp);
    if (field_ == CoeffField::units) {
      if (coeff != 0) terms_[exp] = 1;
      return;
    }
    if (field_ == CoeffField::prime) coeff = reduce_coeff(coeff);
    auto it = terms_.find(exp);
    Rat sum = coeff + (it == terms_.end() ? Rat(0) : it->second);
    if (field_ == CoeffField::prime) sum = reduce_coeff(sum);
    if (sum == 0)
      terms_.erase(exp);
    else
      terms_[exp] = sum;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(field_, vars_, p_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) r.add_term(add(e1, e2), c1 * c2);
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return field_ == o.field_ && p_ == o.p_ && vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  MonomialIdeal support_ideal() const {
    if (terms_.empty()) throw std::invalid_argument("support ideal of the zero polynomial");
    std::vector<Monomial> gens;
    for (const auto& [e, c] : terms_) gens.push_back(e);
    return MonomialIdeal(vars_.size(), std::move(gens));
  }

  Polynomial derivative(std::size_t j) const {
    if (field_ == CoeffField::units)
      throw std::invalid_argument("derivatives need concrete coefficients");
    Polynomial r(field_, vars_, p_);
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      LatticeVector de = e;
      de[j] -= 1;
      r.add_term(de, c * Rat(e[j]));
    }
    return r;
  }

  // f(x + a) over the same field; exact binomial expansion.
  Polynomial shift(const std::vector<Rat>& a) const {
    if (field_ == CoeffField::units)
      throw std::invalid_argument("shift needs concrete coefficients");
    if (a.size() != vars_.size()) throw std::invalid_argument("shift: wrong point arity");
    Polynomial r(field_, vars_, p_);
    for (const auto& [e, c] : terms_) {
      std::map<LatticeVector, Rat> acc{{LatticeVector(vars_.size(), Int(0)), c}};
      for (std::size_t j = 0; j < vars_.size(); ++j) {
        if (e[j] == 0) continue;
        long long ej = to_ll(e[j]);
        std::map<LatticeVector, Rat> next;
        for (const auto& [pe, pc] : acc) {
          Int binom = 1;
          Rat apow = 1;
          for (long long t = ej; t >= 0; --t) {
            // binom = C(ej, t), apow = a_j^(ej-t), built incrementally from t = ej.
            LatticeVector ne = pe;
            ne[j] += t;
            Rat add_c = pc * Rat(binom) * apow;
            if (add_c != 0) next[ne] += add_c;
            if (t > 0) {
              binom = binom * t / (ej - t + 1);
              apow *= a[j];
            }
          }
        }
        acc = std::move(next);
      }
      for (const auto& [pe, pc] : acc) r.add_term(pe, pc);
    }
    return r;
  }

  // Minimal total degree of a term; the order at the origin.
  Int order() const {
    if (terms_.empty()) throw std::invalid_argument("order of the zero polynomial");
    bool first = true;
    Int best = 0;
    for (const auto& [e, c] : terms_) {
      Int deg = 0;
      for (const Int& x : e) deg += x;
      if (first || deg < best) best = deg;
      first = false;
    }
    return best;
  }

  // Reduction of a rational polynomial mod p.  Fails (nullopt) when a
  // denominator is divisible by p or a term's numerator reduces to zero,
  // since the support would change.
  std::optional<Polynomial> reduce_mod(long long p) const {
    if (field_ == CoeffField::prime) {
      if (p_ != p) return std::nullopt;
      return *this;
    }
    if (field_ == CoeffField::units) return std::nullopt;
    Polynomial r(CoeffField::prime, vars_, p);
    for (const auto& [e, c] : terms_) {
      Int num = numerator(c), den = denominator(c);
      if (mod_nonneg(den, p) == 0) return std::nullopt;
      if (mod_nonneg(num, p) == 0) return std::nullopt;
      r.add_term(e, Rat(num) / Rat(den));
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rat pc = c;
      if (!first) {
        if (field_ == CoeffField::rationals && pc < 0) {
          os << " - ";
          pc = -pc;
        } else {
          os << " + ";
        }
      } else if (field_ == CoeffField::rationals && pc < 0) {
        os << "-";
        pc = -pc;
      }
      first = false;
      bool any_var = !coxcob::is_zero(e);
      bool unit_coeff = field_ == CoeffField::units || pc == 1;
      if (!any_var || !unit_coeff) {
        if (field_ == CoeffField::units)
          os << "1";
        else
          os << pc;
        if (any_var) os << "*";
      }
      bool started = false;
      for (std::size_t j = 0; j < vars_.size(); ++j) {
        if (e[j] == 0) continue;
        if (started) os << "*";
        started = true;
        os << vars_[j];
        if (e[j] != 1) os << "^" << e[j];
      }
    }
    if (field_ == CoeffField::prime) os << " @" << p_;
    return os.str();
  }

 private:
  void require_same_ring(const Polynomial& o) const {
    if (field_ != o.field_ || p_ != o.p_ || vars_ != o.vars_)
      throw std::invalid_argument("polynomial rings do not match");
  }

  Rat reduce_coeff(const Rat& c) const {
    Int num = mod_nonneg(numerator(c), p_);
    Int den = mod_nonneg(denominator(c), p_);
    if (den == 0) throw std::invalid_argument("denominator not invertible mod p");
    // den^(p-2) mod p inverts the denominator.
    Int inv = 1, base = den, e = p_ - 2;
    while (e > 0) {
      if ((e & 1) != 0) inv = inv * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Rat(num * inv % p_);
  }

  CoeffField field_;
  long long p_;
  std::vector<std::string> vars_;
  std::map<LatticeVector, Rat> terms_;
};

inline Int val_of(const MonomialValuation& v, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("valuation of zero undefined");
  bool first = true;
  Int best = 0;
  for (const auto& [e, c] : f.terms()) {
    Int d = dot(v.vec, e);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

// Compiled form for fast point enumeration over F_p.
struct FpEvaluator {
  long long p = 0;
  std::vector<std::vector<long long>> exps;  // per term
  std::vector<long long> coeffs;

  explicit FpEvaluator(const Polynomial& f) {
    if (f.field() != CoeffField::prime)
      throw std::invalid_argument("FpEvaluator needs a prime-field polynomial");
    p = f.characteristic();
    for (const auto& [e, c] : f.terms()) {
      std::vector<long long> row;
      for (const Int& x : e) row.push_back(to_ll(x));
      exps.push_back(std::move(row));
      coeffs.push_back(to_ll(numerator(c)));
    }
  }

  long long eval(const std::vector<long long>& point) const {
    long long acc = 0;
    for (std::size_t t = 0; t < exps.size(); ++t) {
      long long m = coeffs[t];
      for (std::size_t j = 0; j < point.size(); ++j) {
        long long e = exps[t][j];
        if (e == 0) continue;
        long long b = point[j] % p, pw = 1;
        while (e > 0) {
          if (e & 1) pw = pw * b % p;
          b = b * b % p;
          e >>= 1;
        }
        m = m * pw % p;
        if (m == 0) break;
      }
      acc = (acc + m) % p;
    }
    return acc;
  }
};

}  // namespace coxcob
