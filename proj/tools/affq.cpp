// affq: command-line front end for the affine q-Schur library.
//
// Element operands are JSON texts given as positional arguments; when none
// are given they are read from stdin (one JSON value, or an array of them).
// Exit status: 0 all checks pass, 1 a check failed, 2 malformed input.

#include <chrono>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "aqs/hecke/kl.hpp"
#include "aqs/io/json_io.hpp"
#include "aqs/quantum/duality.hpp"
#include "aqs/quantum/hopf.hpp"
#include "aqs/quantum/operators.hpp"
#include "aqs/verify/suites.hpp"

using namespace aqs;

namespace {

struct Options {
  int n = 3;
  int r = 3;
  int len = -1;
  long window = -1;
  long rho_bound = 2;
  long len_bound = -1;
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;
  std::vector<std::string> operands;
  std::string parabolic;
  std::string lambda, mu, d;
  std::string word;
};

// A failed check, reported with exit code 1.
struct CheckFailed {};

std::vector<Json> operands(const Options& o, std::size_t want) {
  std::vector<Json> out;
  if (o.operands.empty()) {
    const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    Json j = parse_json(text);
    if (want != 1 && j.is_array()) {
      for (auto& x : j) out.push_back(x);
    } else {
      out.push_back(std::move(j));
    }
  } else {
    for (const auto& s : o.operands) out.push_back(parse_json(s));
  }
  if (out.size() != want)
    throw InputError("expected " + std::to_string(want) + " operand(s), got " + std::to_string(out.size()));
  return out;
}

std::vector<long> int_list(const std::string& s, const char* what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      out.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

Weight weight_arg(const std::string& s, const Options& o) {
  std::vector<int> parts;
  long sum = 0;
  for (long x : int_list(s, "weight")) {
    if (x < 0) throw InvariantError("weight parts must be non-negative");
    parts.push_back(static_cast<int>(x));
    sum += x;
  }
  if (static_cast<int>(parts.size()) != o.n) throw InputError("weight must have --n parts");
  if (sum != o.r) throw InvariantError("weight parts must sum to --r");
  return Weight(std::move(parts));
}

ParabolicIndex parabolic_arg(const Options& o) {
  std::vector<int> m;
  for (long x : int_list(o.parabolic, "parabolic")) m.push_back(static_cast<int>(x));
  return ParabolicIndex(o.r, m);
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) std::cout << j.dump() << "\n";
  else std::cout << text << "\n";
}

int emit_report(const Options& o, const SuiteReport& rep) {
  if (o.json) {
    Json j = to_json(rep);
    if (o.timing) j["seconds"] = rep.seconds;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "suite " << rep.suite;
    for (const auto& [k, v] : rep.params) std::cout << " " << k << "=" << v;
    std::cout << "\n";
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "  pass " : "  FAIL ") << c.name << " (" << c.instances << ")";
      if (!c.pass) std::cout << "  witness: " << c.witness;
      std::cout << "\n";
    }
    std::cout << (rep.passed() ? "PASS" : "FAIL");
    if (o.timing) std::cout << " in " << rep.seconds << "s";
    std::cout << "\n";
  }
  if (!rep.passed()) throw CheckFailed{};
  return 0;
}

SuiteParams suite_params(const Options& o) {
  SuiteParams p;
  p.n = o.n;
  p.r = o.r;
  p.len = o.len;
  p.window = o.window;
  p.rho_bound = o.rho_bound;
  p.seed = o.seed;
  return p;
}

// weyl

void weyl_length(const Options& o) {
  const WindowPerm w = perm_from_json(operands(o, 1)[0]);
  emit(o, Json{{"length", w.length()}, {"rho_power", w.rho_power()}}, std::to_string(w.length()));
}

void weyl_word(const Options& o) {
  const WindowPerm w = perm_from_json(operands(o, 1)[0]);
  const auto [z, word] = reduced_word(w);
  std::string text = "rho^" + std::to_string(z);
  for (int i : word) text += " s" + std::to_string(i);
  emit(o, Json{{"rho_power", z}, {"word", word}}, text);
}

void weyl_compose(const Options& o) {
  const auto ops = operands(o, 2);
  const WindowPerm w = perm_from_json(ops[0]) * perm_from_json(ops[1]);
  emit(o, to_json(w), w.to_string());
}

void weyl_coset(const Options& o) {
  const WindowPerm w = perm_from_json(operands(o, 1)[0]);
  Options oo = o;
  oo.r = w.r();
  const auto [head, tail] = coset_decompose(w, parabolic_arg(oo));
  emit(o, Json{{"parabolic_part", to_json(head)}, {"distinguished", to_json(tail)}},
       head.to_string() + " * " + tail.to_string());
}

// hecke

void hecke_mul(const Options& o) {
  const auto ops = operands(o, 2);
  const HeckeElement a = hecke_from_json(ops[0]), b = hecke_from_json(ops[1]);
  if (a.r() != b.r()) throw InputError("operands have different r");
  const HeckeElement c = a * b;
  emit(o, to_json(c), c.to_string());
}

void hecke_xlambda(const Options& o) {
  const HeckeElement x = x_lambda(parabolic_arg(o));
  emit(o, to_json(x), x.to_string());
}

void hecke_kl(const Options& o) {
  const auto ops = operands(o, 2);
  const WindowPerm y = perm_from_json(ops[0]), w = perm_from_json(ops[1]);
  if (y.r() != w.r()) throw InputError("operands have different r");
  KLTable table;
  const LaurentPoly p = kl_extended(table, y, w);
  emit(o, Json{{"P", to_json(p)}, {"mu", table.mu(y, w).get_str()}}, p.to_string());
}

// schur

void cmd_schur_mul(const Options& o) {
  const auto ops = operands(o, 2);
  const SchurElement a = schur_from_json(ops[0]), b = schur_from_json(ops[1]);
  if (a.n() != b.n() || a.r() != b.r()) throw InputError("operands have different n or r");
  const SchurElement c = aqs::schur_mul(a, b);
  emit(o, to_json(c), c.to_string());
}

WindowPerm d_arg(const Options& o) {
  const auto w = int_list(o.d, "d");
  if (w.empty()) return WindowPerm::identity(o.r);
  return WindowPerm(o.r, w);
}

void schur_phi(const Options& o) {
  const SchurElement s = phi(weight_arg(o.lambda, o), weight_arg(o.mu, o), d_arg(o));
  const auto& k = s.terms().begin()->first;
  Json j = to_json(s);
  j["value"] = to_json(phi_value(k.lambda, k.mu, k.d));
  emit(o, j, s.to_string() + " -> " + phi_value(k.lambda, k.mu, k.d).to_string());
}

// theta^d_{lambda,mu} = sum_z alpha_{z,d} phi^z_{lambda,mu}, the sum over double
// coset representatives z.
void schur_theta(const Options& o) {
  KLTable table;
  const SchurElement s = theta(weight_arg(o.lambda, o), weight_arg(o.mu, o), d_arg(o), table);
  emit(o, to_json(s), s.to_string());
}

// quantum

void quantum_act(const Options& o) {
  const TensorVector x = tensor_from_json(operands(o, 1)[0]);
  GeneratorWord w;
  std::stringstream ss(o.word);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) w.push_back(parse_letter(item, x.n()));
  const TensorVector y = act_word(w, x);
  emit(o, to_json(y), y.to_string());
}

void quantum_tau(const Options& o) {
  const auto ops = operands(o, 2);
  const TensorVector x = tensor_from_json(ops[1]);
  const HeckeElement h = ops[0].contains("terms") ? hecke_from_json(ops[0])
                                                  : HeckeElement::basis(perm_from_json(ops[0]));
  if (h.r() != x.r()) throw InputError("operands have different r");
  const TensorVector y = tau_apply(h, x);
  emit(o, to_json(y), y.to_string());
}

void quantum_kappa(const Options& o) {
  const auto ops = operands(o, 2);
  const SchurElement s = schur_from_json(ops[0]);
  const TensorVector x = tensor_from_json(ops[1]);
  if (s.n() != x.n() || s.r() != x.r()) throw InputError("operands have different n or r");
  const TensorVector y = kappa_apply(s, x);
  // Exponent of kappa(phi_{lambda,omega}) on e_{key(w)} against l(w_lambda).
  Json f = Json::object();
  std::string text = y.to_string();
  std::set<Weight> seen;
  for (const auto& [k, c] : s.terms())
    for (const Weight& l : {k.lambda, k.mu}) {
      if (!seen.insert(l).second) continue;
      int offset = 0;
      bool constant = true;
      bool first = true;
      for (const auto& e : kappa_exponents(l)) {
        const int off = e.exponent - e.parabolic_length;
        if (first) offset = off;
        constant = constant && off == offset;
        first = false;
      }
      f[l.to_string()] = constant ? Json(offset) : Json(nullptr);
      text += "\n  f" + l.to_string() + " = " + (constant ? std::to_string(offset) : "not constant");
    }
  Json j{{"result", to_json(y)}, {"f", f}, {"g", 0}};
  emit(o, j, text + "\n  g = 0");
}

// phi^{s_r}_{omega,omega} on e_omega: one term on the q-tensor side, two on
// tensor space.
void quantum_asymmetry(const Options& o) {
  const Weight om = omega(o.n, o.r);
  const SchurElement s = phi(om, om, WindowPerm::gen_s(o.r, o.r));
  const QTensorElement q = as_qtensor(s);
  TensorVector e(o.n, o.r);
  e.add_term(omega_key(o.r), 1);
  const TensorVector t = kappa_apply(s, e);
  emit(o, Json{{"qtensor_terms", q.terms().size()}, {"tensor_terms", t.terms().size()}, {"tensor", to_json(t)}},
       "q-tensor side: " + std::to_string(q.terms().size()) + " term(s)\ntensor side: " +
           std::to_string(t.terms().size()) + " term(s): " + t.to_string());
}

void quantum_verify_hopf(const Options& o) {
  SuiteReport rep = verify_hopf(o.n, o.r, o.window < 0 ? 2L * o.n : o.window);
  rep.sort_checks();
  emit_report(o, rep);
}

void quantum_verify_duality(const Options& o) {
  SuiteParams p = suite_params(o);
  if (o.len_bound >= 0) p.len = static_cast<int>(o.len_bound);
  emit_report(o, run_suite("duality", p));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the affine Hecke algebra, affine q-Schur algebra and quantum affine gl_n"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* c, bool operands) {
    c->add_option("--n", o.n, "number of tensor factors' index classes");
    c->add_option("--r", o.r, "period r (>= 3)");
    c->add_option("--len", o.len, "length bound");
    c->add_option("--window", o.window, "index window |j| <= W");
    c->add_option("--rho-bound", o.rho_bound, "bound on |rho power|");
    c->add_option("--len-bound", o.len_bound, "length bound L for injectivity checks");
    c->add_option("--seed", o.seed, "PRNG seed");
    c->add_flag("--json", o.json, "emit JSON");
    c->add_flag("--timing", o.timing, "include wall time in reports");
    if (operands) c->add_option("operands", o.operands, "JSON operands (default: stdin)");
  };
  std::function<void()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, bool ops,
                  std::function<void(const Options&)> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    common(c, ops);
    c->callback([&action, fn, &o] { action = [fn, &o] { fn(o); }; });
    return c;
  };

  CLI::App* weyl = app.add_subcommand("weyl", "extended affine symmetric group");
  weyl->require_subcommand(1);
  leaf(weyl, "length", "length and rho power of a window", true, weyl_length);
  leaf(weyl, "word", "reduced word rho^z s_a s_b ...", true, weyl_word);
  leaf(weyl, "compose", "product u w (u applied first)", true, weyl_compose);
  leaf(weyl, "coset", "w = u d with u in W_pi, d distinguished", true, weyl_coset)
      ->add_option("--parabolic", o.parabolic, "generators of pi, e.g. 1,2")
      ->required();

  CLI::App* hecke = app.add_subcommand("hecke", "affine Hecke algebra");
  hecke->require_subcommand(1);
  leaf(hecke, "mul", "product of two elements", true, hecke_mul);
  leaf(hecke, "xlambda", "sum of T_w over W_pi", false, hecke_xlambda)
      ->add_option("--parabolic", o.parabolic, "generators of pi, e.g. 1,2")
      ->required();
  leaf(hecke, "kl", "Kazhdan-Lusztig polynomial P_{y,w}", true, hecke_kl);

  CLI::App* schur = app.add_subcommand("schur", "affine q-Schur algebra");
  schur->require_subcommand(1);
  leaf(schur, "mul", "product of two elements", true, cmd_schur_mul);
  for (auto [name, help, fn] : {std::tuple{"phi", "phi^d_{lambda,mu} and its value on x_mu", &schur_phi},
                                std::tuple{"theta", "theta^d_{lambda,mu} in the phi basis", &schur_theta}}) {
    CLI::App* c = leaf(schur, name, help, false, fn);
    c->add_option("--lambda", o.lambda, "weight, e.g. 2,1,0")->required();
    c->add_option("--mu", o.mu, "weight, e.g. 1,1,1")->required();
    c->add_option("--d", o.d, "window of d (default identity)");
  }
  leaf(schur, "verify", "run the schur-core suite", false,
       [](const Options& oo) { emit_report(oo, run_suite("schur-core", suite_params(oo))); });

  CLI::App* quantum = app.add_subcommand("quantum", "quantum affine gl_n on tensor space");
  quantum->require_subcommand(1);
  leaf(quantum, "act", "apply a word in E_i, F_i, K_i^{+-1}, R^{+-1}", true, quantum_act)
      ->add_option("--word", o.word, "letters, rightmost acts first, e.g. E1,F2,R^-1")
      ->required();
  leaf(quantum, "tau", "tau(T_w) or tau(h) on a tensor vector", true, quantum_tau);
  leaf(quantum, "kappa", "kappa(s) on a tensor vector, with the exponents f and g", true, quantum_kappa);
  leaf(quantum, "asymmetry", "phi^{s_r}_{omega,omega} on e_omega on both sides", false, quantum_asymmetry);
  leaf(quantum, "verify-hopf", "defining relations and Hopf axioms", false, quantum_verify_hopf);
  leaf(quantum, "verify-duality", "affine Schur-Weyl duality checks", false, quantum_verify_duality);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "weyl-core|hecke-core|kl|schur-core|hopf|duality|all")->required();
  common(verify, false);
  verify->callback([&] {
    action = [&] {
      if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw InputError("unknown suite '" + suite + "'");
      emit_report(o, run_suite(suite, suite_params(o)));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (o.r < 3) throw InvariantError("period r must be at least 3, got " + std::to_string(o.r));
    if (o.n < 1) throw InputError("--n must be positive");
    action();
  } catch (const CheckFailed&) {
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
