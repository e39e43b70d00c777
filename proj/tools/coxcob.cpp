// coxcob: exact Newton-polytope, normal-fan and cobordant blow-up
// calculator with theorem checkers for resolution criteria at desk scale.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxcob/cobord.hpp"
#include "coxcob/json_io.hpp"
#include "coxcob/newton.hpp"
#include "coxcob/parse.hpp"
#include "coxcob/singular.hpp"

using namespace coxcob;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

long long env_budget() {
  if (const char* s = std::getenv("COXCOB_BUDGET")) {
    try {
      long long b = std::stoll(s);
      if (b > 0) return b;
    } catch (...) {
    }
  }
  return default_budget();
}

std::string read_source(const std::string& in_file) {
  std::ostringstream os;
  if (!in_file.empty()) {
    std::ifstream f(in_file);
    if (!f) throw std::invalid_argument("cannot open input file " + in_file);
    os << f.rdbuf();
  } else {
    os << std::cin.rdbuf();
  }
  return os.str();
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(Int(cur));
  return out;
}

std::vector<long long> parse_prime_list(const std::string& text) {
  std::vector<long long> out;
  for (const Int& v : parse_int_list(text)) out.push_back(to_ll(v));
  return out;
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (m[j] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << vars[j];
    if (m[j] != 1) os << "^" << m[j];
  }
  if (first) os << "1";
  return os.str();
}

std::string ideal_str(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < I.generators().size(); ++i) {
    if (i) os << ", ";
    os << monomial_str(I.generators()[i], vars);
  }
  os << ")";
  return os.str();
}

void print_presentation_pretty(const CobordPresentation& P, std::ostream& os) {
  os << "B = Spec k[";
  for (std::size_t i = 0; i < P.k; ++i) os << (i ? ", " : "") << "t" << i + 1 << "^-1";
  for (std::size_t j = 0; j < P.n; ++j) {
    os << (P.k || j ? ", " : "") << P.vars[j];
    for (std::size_t i = 0; i < P.k; ++i) {
      if (P.alphas[i][j] == 0) continue;
      os << " t" << i + 1;
      if (P.alphas[i][j] != 1) os << "^" << P.alphas[i][j];
    }
  }
  os << "]\n";
  if (P.k > 0) {
    os << "B+  = B \\ V(";
    for (std::size_t i = 0; i < P.k; ++i) {
      if (P.weak_shift[i] == 0) continue;
      os << "t" << i + 1;
      if (P.weak_shift[i] != 1) os << "^" << P.weak_shift[i];
      os << " ";
    }
    os << "* " << ideal_str(P.weak_center_ideal, P.vars) << ")\n";
    os << "valuations:";
    for (std::size_t i = 0; i < P.k; ++i)
      os << " v" << i + 1 << " = " << to_string(P.valuations[i]);
    os << "\n";
    for (std::size_t i = 0; i < P.k; ++i)
      if (P.scales[i] != 1) os << "t" << i + 1 << " graded by 1/" << P.scales[i] << "\n";
  } else {
    os << "no exceptional divisors (principal center); B+ = B\n";
  }
  QuotientReport q = quotient_type(P);
  os << "quotient: " << (q.good ? "good" : "NOT good") << ", "
     << (q.geometric ? "geometric" : "not geometric") << "\n";
}

void print_report_pretty(const CheckReport& R, std::ostream& os) {
  for (const auto& c : R.conditions) {
    os << (c.ok ? "[ ok ] " : "[FAIL] ") << c.id << ": " << c.clause;
    if (!c.witness.empty()) os << "  [witness " << c.witness << "]";
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  for (const auto& n : R.notes) os << "note: " << n << "\n";
  os << "verdict: " << to_string(R.verdict) << " (" << R.points_tested
     << " points tested)\n";
}

// Center selection for transform/verify: an explicit weight vector, a
// user-supplied ideal from --in, or the support ideal of f.
CobordPresentation presentation_for(const Polynomial& f, const std::string& in_file,
                                    const std::string& weights_text) {
  if (!weights_text.empty())
    return weighted_cobordant(parse_int_list(weights_text), f.vars());
  if (!in_file.empty()) {
    std::vector<std::string> vars;
    MonomialIdeal J = parse_ideal(read_source(in_file), &vars, f.vars());
    return full_cobordization(J, vars);
  }
  return full_cobordization(f.support_ideal(), f.vars());
}

int report_exit(const CheckReport& R) {
  switch (R.verdict) {
    case Verdict::pass: return kExitOk;
    case Verdict::fail: return kExitFail;
    default: return kExitInconclusive;
  }
}

struct Emitted {
  json body;
  int code = kExitOk;
  std::function<void(std::ostream&)> pretty;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cobordant blow-up calculator"};
  app.require_subcommand(1);

  std::string in_file;
  bool pretty = false;
  app.add_option("--in", in_file, "read the ideal expression from a file (default: stdin)");
  app.add_flag("--pretty", pretty, "human-readable text instead of JSON");

  std::string poly_text, weights_text, b_text, primes_text, mode_text = "res3";
  std::vector<std::string> poly_list;
  long long characteristic = -1;
  long long order_d = 2;
  int cutoff = 6;
  long long qdenom = 1;
  bool no_conclusion = false;

  CLI::App* newton = app.add_subcommand("newton", "Newton polytope, facets and supporting faces");
  CLI::App* normalfan = app.add_subcommand("normalfan", "normal fan of the Newton polytope");
  CLI::App* cobord = app.add_subcommand("cobord", "full cobordant blow-up presentation");
  CLI::App* weighted = app.add_subcommand("weighted", "weighted cobordant blow-up");
  weighted->add_option("--weights", weights_text, "comma-separated positive weights");
  CLI::App* multiw = app.add_subcommand("multiweighted", "multi-weighted cobordant blow-up");
  multiw->add_option("--b", b_text, "comma-separated positive scalings b_i")->required();
  CLI::App* simple = app.add_subcommand("simple", "simple cobordant blow-up (extended Rees algebra)");
  simple->add_option("--cutoff", cutoff, "largest reported t-degree");
  simple->add_option("--qdenom", qdenom, "Q-ideal exponent denominator m for J^(1/m)");
  CLI::App* tf = app.add_subcommand("transform", "weak transform of a polynomial");
  tf->add_option("--poly", poly_text, "polynomial")->required();
  tf->add_option("--weights", weights_text, "use a weighted center instead of the support ideal");
  CLI::App* dualc = app.add_subcommand("dualcomplex", "dual valuation complexes Delta_E and Delta_D");
  CLI::App* stable = app.add_subcommand("stable", "stable locus B^s (simplicialized quotient)");

  CLI::App* check = app.add_subcommand("check", "theorem hypothesis checkers");
  check->require_subcommand(1);
  CLI::App* c_res = check->add_subcommand("res", "syntactic witness-variable criterion");
  c_res->add_option("--poly", poly_text)->required();
  c_res->add_option("--char", characteristic, "0 or a prime");
  CLI::App* c_res2 = check->add_subcommand("res2", "independent-blocks criterion");
  c_res2->add_option("--poly", poly_list, "one polynomial per block")->required();
  c_res2->add_option("--char", characteristic, "0 or a prime");
  CLI::App* c_A = check->add_subcommand("A", "Newton-polytope resolution hypotheses");
  c_A->add_option("--poly", poly_text)->required();
  c_A->add_option("--primes", primes_text, "comma-separated primes");
  CLI::App* c_AQ = check->add_subcommand("AQ", "all-faces smoothness off the coordinate divisor");
  c_AQ->add_option("--poly", poly_text)->required();
  c_AQ->add_option("--primes", primes_text, "comma-separated primes");
  CLI::App* c_ord = check->add_subcommand("order", "order-drop hypotheses and conclusion");
  c_ord->add_option("--poly", poly_list, "ideal generators")->required();
  c_ord->add_option("--d", order_d, "order threshold");
  c_ord->add_option("--primes", primes_text, "comma-separated primes");
  c_ord->add_option("--mode", mode_text, "res3 (supporting faces) or res4 (all faces)");
  c_ord->add_flag("--no-conclusion", no_conclusion, "skip the transform order check");

  CLI::App* verify = app.add_subcommand("verify", "end-to-end resolution check on B_+");
  verify->add_option("--poly", poly_text)->required();
  verify->add_option("--weights", weights_text, "weighted center over the variables in order");
  verify->add_option("--primes", primes_text, "comma-separated primes");

  for (CLI::App* s : {newton, normalfan, cobord, weighted, multiw, simple, tf, dualc,
                      stable, check, verify})
    s->fallthrough();
  for (CLI::App* s : {c_res, c_res2, c_A, c_AQ, c_ord}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  long long budget = env_budget();

  try {
    Emitted out;

    if (*newton || *normalfan || *cobord || *dualc || *stable || *simple || *multiw ||
        (*weighted && weights_text.empty())) {
      std::vector<std::string> vars;
      MonomialIdeal I = parse_ideal(read_source(in_file), &vars);
      if (*newton) {
        NewtonPolytope p(I);
        out.body = to_json(p);
        out.pretty = [p](std::ostream& os) {
          os << "vertices:";
          for (const auto& v : p.vertices()) os << " " << to_string(v);
          os << "\nexceptional rays:";
          for (const auto& r : p.exceptional_rays()) os << " " << to_string(r);
          os << "\nsupporting faces: " << p.supporting_faces().size() << "\n";
        };
      } else if (*normalfan) {
        Fan f = NewtonPolytope(I).normal_fan();
        out.body = to_json(f);
        out.pretty = [f](std::ostream& os) {
          os << "rays:";
          for (const auto& r : f.vertices()) os << " " << to_string(r);
          os << "\nmaximal cones: " << f.max_cones().size() << "\n";
        };
      } else if (*cobord) {
        CobordPresentation P = full_cobordization(I, vars);
        out.body = to_json(P);
        out.pretty = [P](std::ostream& os) { print_presentation_pretty(P, os); };
      } else if (*weighted) {
        CobordPresentation P = weighted_from_ideal(I, vars);
        out.body = to_json(P);
        out.pretty = [P](std::ostream& os) { print_presentation_pretty(P, os); };
      } else if (*multiw) {
        CobordPresentation P = multi_weighted(I, parse_int_list(b_text), vars);
        out.body = to_json(P);
        out.pretty = [P](std::ostream& os) { print_presentation_pretty(P, os); };
      } else if (*simple) {
        SimpleCobordant S = simple_cobordant(I, cutoff, Int(qdenom), vars);
        out.body = to_json(S);
        out.pretty = [S](std::ostream& os) {
          os << "degree pieces up to t^" << S.cutoff << "; algebra generators:\n";
          os << "  t^-1\n";
          for (const auto& [m, d] : S.algebra_generators)
            os << "  " << monomial_str(m, S.vars) << " t^" << d << "\n";
        };
      } else if (*dualc) {
        ValuationFaceComplex C = dual_valuation_complex(I);
        out.body = to_json(C);
        out.pretty = [C](std::ostream& os) {
          os << "vertices:";
          for (const auto& v : C.vertices) os << " " << to_string(v);
          os << "\nDelta_E faces: " << C.E_faces.size()
             << " (Delta_D is the full simplex)\n";
        };
      } else {
        CobordPresentation P = stable_locus(full_cobordization(I, vars));
        out.body = to_json(P);
        out.pretty = [P](std::ostream& os) { print_presentation_pretty(P, os); };
      }
    } else if (*weighted) {
      CobordPresentation P = weighted_cobordant(parse_int_list(weights_text));
      out.body = to_json(P);
      out.pretty = [P](std::ostream& os) { print_presentation_pretty(P, os); };
    } else if (*tf) {
      Polynomial f = parse_poly(poly_text);
      CobordPresentation P = presentation_for(f, in_file, weights_text);
      TransformResult R = transform(f, P);
      out.body = to_json(R);
      out.pretty = [R](std::ostream& os) {
        os << "shift:";
        for (const Int& a : R.shift) os << " " << a;
        os << "\ntransform: " << R.g.to_string() << "\n";
      };
    } else if (*c_res || *c_res2) {
      if (characteristic < 0) characteristic = 0;
      CheckReport R;
      if (*c_res) {
        Polynomial f = parse_poly(poly_text);
        if (f.field() == CoeffField::prime && characteristic == 0)
          characteristic = f.characteristic();
        R = check_res(f, characteristic);
      } else {
        std::vector<std::string> all_vars;
        for (const auto& t : poly_list) {
          Polynomial g = parse_poly(t);
          all_vars.insert(all_vars.end(), g.vars().begin(), g.vars().end());
        }
        std::sort(all_vars.begin(), all_vars.end());
        all_vars.erase(std::unique(all_vars.begin(), all_vars.end()), all_vars.end());
        std::vector<Polynomial> fs;
        for (const auto& t : poly_list) fs.push_back(parse_poly(t, all_vars));
        R = check_res2(fs, characteristic);
      }
      out.body = to_json(R);
      out.code = report_exit(R);
      out.pretty = [R](std::ostream& os) { print_report_pretty(R, os); };
    } else if (*c_A || *c_AQ) {
      Polynomial f = parse_poly(poly_text);
      CheckReport R = *c_A ? check_theorem_A(f, parse_prime_list(primes_text), budget)
                           : check_AQ(f, parse_prime_list(primes_text), budget);
      out.body = to_json(R);
      out.code = report_exit(R);
      out.pretty = [R](std::ostream& os) { print_report_pretty(R, os); };
    } else if (*c_ord) {
      std::vector<std::string> all_vars;
      for (const auto& t : poly_list) {
        Polynomial g = parse_poly(t);
        all_vars.insert(all_vars.end(), g.vars().begin(), g.vars().end());
      }
      std::sort(all_vars.begin(), all_vars.end());
      all_vars.erase(std::unique(all_vars.begin(), all_vars.end()), all_vars.end());
      std::vector<Polynomial> fs;
      for (const auto& t : poly_list) fs.push_back(parse_poly(t, all_vars));
      if (mode_text != "res3" && mode_text != "res4")
        throw std::invalid_argument("--mode must be res3 or res4");
      OrderDropMode mode = mode_text == "res4" ? OrderDropMode::res4 : OrderDropMode::res3;
      CheckReport R = check_order_drop(fs, Int(order_d), parse_prime_list(primes_text), mode,
                                       !no_conclusion, budget);
      out.body = to_json(R);
      out.code = report_exit(R);
      out.pretty = [R](std::ostream& os) { print_report_pretty(R, os); };
    } else if (*verify) {
      Polynomial f = parse_poly(poly_text);
      CobordPresentation P = presentation_for(f, in_file, weights_text);
      CheckReport R = verify_resolution(f, P, parse_prime_list(primes_text), budget);
      out.body = to_json(R);
      out.code = report_exit(R);
      out.pretty = [R](std::ostream& os) { print_report_pretty(R, os); };
    }

    if (pretty && out.pretty)
      out.pretty(std::cout);
    else
      std::cout << dump_json(out.body);
    return out.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
