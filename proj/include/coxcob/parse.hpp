#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcob/monomial.hpp"
#include "coxcob/numeric.hpp"
#include "coxcob/polynomial.hpp"

namespace coxcob {

// Syntax errors carry the 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  std::size_t line, col;
};

namespace detail {

struct Token {
  enum Kind { ident, number, op, end } kind = end;
  std::string text;
  std::size_t line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_ = Token{Token::end, "", line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        consume();
      tok_.kind = Token::ident;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        consume();
      tok_.kind = Token::number;
      tok_.text = src_.substr(start, pos_ - start);
      return;
    }
    static const std::string ops = "+-*^[],@/";
    if (ops.find(c) != std::string::npos) {
      tok_.kind = Token::op;
      tok_.text = std::string(1, c);
      consume();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void consume() {
    ++pos_;
    ++col_;
  }

  const std::string& src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  Token tok_;
};

struct RawTerm {
  Rat coeff = 1;
  std::map<std::string, Int> exps;
};

inline bool is_op(const Token& t, const char* s) { return t.kind == Token::op && t.text == s; }

// term ::= factor (('*' | juxtaposition) factor)*
// factor ::= number ('/' number)? | ident ('^' number)?
inline RawTerm parse_term(Lexer& lx) {
  RawTerm t;
  bool any = false;
  while (true) {
    const Token& p = lx.peek();
    if (p.kind == Token::number) {
      Token n = lx.take();
      Rat c = Rat(Int(n.text));
      if (is_op(lx.peek(), "/")) {
        lx.take();
        if (lx.peek().kind != Token::number) lx.fail("expected a denominator");
        Int den(lx.take().text);
        if (den == 0) lx.fail("zero denominator");
        c /= Rat(den);
      }
      t.coeff *= c;
      any = true;
    } else if (p.kind == Token::ident) {
      Token v = lx.take();
      Int e = 1;
      if (is_op(lx.peek(), "^")) {
        lx.take();
        if (lx.peek().kind != Token::number) lx.fail("expected an exponent");
        e = Int(lx.take().text);
      }
      t.exps[v.text] += e;
      any = true;
    } else {
      break;
    }
    if (is_op(lx.peek(), "*")) {
      lx.take();
      continue;
    }
    // juxtaposition: another factor may follow directly
    if (lx.peek().kind != Token::ident && lx.peek().kind != Token::number) break;
  }
  if (!any) lx.fail("expected a term");
  return t;
}

inline std::vector<RawTerm> parse_sum(Lexer& lx) {
  std::vector<RawTerm> terms;
  int sign = 1;
  if (is_op(lx.peek(), "-")) {
    lx.take();
    sign = -1;
  } else if (is_op(lx.peek(), "+")) {
    lx.take();
  }
  while (true) {
    RawTerm t = parse_term(lx);
    if (sign < 0) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    if (is_op(lx.peek(), "+")) {
      lx.take();
      sign = 1;
    } else if (is_op(lx.peek(), "-")) {
      lx.take();
      sign = -1;
    } else {
      break;
    }
  }
  return terms;
}

inline Polynomial assemble(const std::vector<RawTerm>& terms, long long p,
                           std::vector<std::string> extra_vars = {}) {
  std::vector<std::string> vars = std::move(extra_vars);
  for (const auto& t : terms)
    for (const auto& [v, e] : t.exps) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  Polynomial f(p == 0 ? CoeffField::rationals : CoeffField::prime, vars, p);
  for (const auto& t : terms) {
    LatticeVector e(vars.size(), Int(0));
    for (const auto& [v, exp] : t.exps)
      e[std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()] = exp;
    f.add_term(e, t.coeff);
  }
  return f;
}

}  // namespace detail

// poly ::= sum ('@' prime)?   Variables are identifiers, '^' is power, '*'
// is optional between factors, whitespace is insignificant.
inline Polynomial parse_poly(const std::string& text,
                             std::vector<std::string> ambient_vars = {}) {
  detail::Lexer lx(text);
  std::vector<detail::RawTerm> terms = detail::parse_sum(lx);
  long long p = 0;
  if (detail::is_op(lx.peek(), "@")) {
    lx.take();
    if (lx.peek().kind != detail::Token::number) lx.fail("expected a prime after '@'");
    p = std::stoll(lx.take().text);
    if (!is_prime_ll(p)) lx.fail("characteristic must be a prime");
  }
  if (lx.peek().kind != detail::Token::end) lx.fail("unexpected trailing input");
  return detail::assemble(terms, p, std::move(ambient_vars));
}

// ideal ::= '[' sum (',' sum)* ']'   Each entry must be a single monomial
// with a nonzero coefficient.
inline MonomialIdeal parse_ideal(const std::string& text,
                                 std::vector<std::string>* vars_out = nullptr,
                                 std::vector<std::string> ambient_vars = {}) {
  detail::Lexer lx(text);
  if (!detail::is_op(lx.peek(), "[")) lx.fail("expected '[' opening an ideal");
  lx.take();
  std::vector<detail::RawTerm> gens;
  while (true) {
    std::vector<detail::RawTerm> sum = detail::parse_sum(lx);
    if (sum.size() != 1)
      lx.fail("non-monomial generator in an ideal");
    if (sum[0].coeff == 0) lx.fail("zero generator in an ideal");
    gens.push_back(std::move(sum[0]));
    if (detail::is_op(lx.peek(), ",")) {
      lx.take();
      continue;
    }
    break;
  }
  if (!detail::is_op(lx.peek(), "]")) lx.fail("expected ']' closing the ideal");
  lx.take();
  if (lx.peek().kind != detail::Token::end) lx.fail("unexpected trailing input");
  std::vector<std::string> vars = std::move(ambient_vars);
  for (const auto& t : gens)
    for (const auto& [v, e] : t.exps) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<Monomial> ms;
  for (const auto& t : gens) {
    Monomial m(vars.size(), Int(0));
    for (const auto& [v, exp] : t.exps)
      m[std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()] = exp;
    ms.push_back(std::move(m));
  }
  if (vars_out) *vars_out = vars;
  return MonomialIdeal(vars.size(), std::move(ms));
}

}  // namespace coxcob
