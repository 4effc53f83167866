#include <random>

#include "aqs/quantum/duality.hpp"
#include "aqs/quantum/hopf.hpp"
#include "aqs/quantum/operators.hpp"
#include "doctest.h"

using namespace aqs;

namespace {

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly q = LaurentPoly::q();

TensorVector e(int n, TensorKey k, const LaurentPoly& c = 1) { return TensorVector::basis(n, k, c); }

UElement L(int n, const std::string& s) { return UElement::word(n, {parse_letter(s, n)}); }

// A word applied to a single vector e_t of V; rightmost letter first.
std::optional<std::pair<long, int>> act_single(const GeneratorWord& w, long t, int n) {
  int exp = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto img = act_V(*it, t, n);
    if (!img) return std::nullopt;
    t = img->t;
    exp += img->exp;
  }
  return std::pair{t, exp};
}

// Delta(u) applied to e_a (x) e_b factor by factor.
TensorVector via_coproduct(const UElement& u, long a, long b, int n) {
  TensorVector out(n, 2);
  for (const auto& term : coproduct(u)) {
    const auto x = act_single(term.left, a, n);
    const auto y = act_single(term.right, b, n);
    if (x && y) out.add_term({x->first, y->first}, term.coeff.shifted(x->second + y->second));
  }
  return out;
}

}  // namespace

TEST_CASE("single factor action") {
  CHECK(act_V(parse_letter("E1", 3), 2, 3)->t == 1);
  CHECK_FALSE(act_V(parse_letter("E1", 3), 3, 3));
  CHECK(act_V(parse_letter("K1", 3), 4, 3)->exp == 1);
  CHECK(act_V(parse_letter("R", 3), 5, 3)->t == 6);
}

TEST_CASE("tensor action agrees with the coproduct") {
  const TensorVector got = act_word({parse_letter("E1", 3)}, e(3, {2, 2}));
  CHECK(got == e(3, {1, 2}, v.shifted(-2)) + e(3, {2, 1}));
  CHECK(got == via_coproduct(L(3, "E1"), 2, 2, 3));
  for (const char* g : {"E1", "E2", "E3", "F1", "F3", "K2", "K1^-1", "R", "R^-1"})
    for (long a = -3; a <= 4; ++a)
      for (long b = -3; b <= 4; ++b)
        CHECK(act_tensor(L(3, g), e(3, {a, b})) == via_coproduct(L(3, g), a, b, 3));
  CHECK(act_word({parse_letter("R", 3)}, e(3, {1, 2, 3})) == e(3, {2, 3, 4}));
}

TEST_CASE("K acts by the weight") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int it = 0; it < 40; ++it) {
    const TensorKey k{d(rng), d(rng), d(rng)};
    const Weight w = weight_of(k, 3);
    for (int i = 1; i <= 3; ++i)
      CHECK(act_tensor(L(3, "K" + std::to_string(i)), e(3, k)) == e(3, k, LaurentPoly::v(w[i])));
  }
  CHECK(weight_of({1, 5, 3}, 3) == Weight({1, 1, 1}));
  CHECK(weight_of({2, 2}, 3) == Weight({0, 2, 0}));
}

TEST_CASE("counit and antipode") {
  CHECK(counit(L(3, "K1") * L(3, "R")) == LaurentPoly(1));
  CHECK(counit(L(3, "E1")) == LaurentPoly());
  CHECK(antipode(L(3, "R")) == L(3, "R^-1"));
  const UElement sf2 = -1 * (L(3, "K2") * L(3, "K3^-1") * L(3, "F2"));
  const UElement se1 = -1 * (L(3, "E1") * L(3, "K1^-1") * L(3, "K2"));
  CHECK(antipode(L(3, "E1") * L(3, "F2")) == sf2 * se1);
}

TEST_CASE("y operators") {
  CHECK(aqs::apply(y_op(3, 1), e(3, {1, 2})) == e(3, {-2, 2}));
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const TensorVector x = e(3, {a, b});
      CHECK(aqs::apply(y_op(3, 1), aqs::apply(y_op(3, 2), x)) == aqs::apply(y_op(3, 2), aqs::apply(y_op(3, 1), x)));
      CHECK(aqs::apply(y_op(3, 1, -1), aqs::apply(y_op(3, 1), x)) == x);
    }
}

TEST_CASE("finite right action") {
  CHECK(finite_hecke_right_action(e(3, {2, 2}), 1) == e(3, {2, 2}, q));
  CHECK(finite_hecke_right_action(e(3, {1, 2}), 1) == e(3, {2, 1}, v));
  const TensorVector x = e(3, {2, 1});
  const TensorVector t = finite_hecke_right_action(x, 1);
  CHECK(finite_hecke_right_action(t, 1) == t * (q - 1) + x * q);
  CHECK(hecke_right_action(e(3, {2, 1, 5}), WindowPerm::identity(3)) == e(3, {2, 1, 5}));
}

TEST_CASE("hopf identities") {
  const SuiteReport rep = verify_hopf(3, 2, 4);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.witness);
  CHECK(rep.passed());
}

TEST_CASE("a false relation is detected") {
  // E_1 F_1 = F_1 E_1 is not a relation.
  const UElement lhs = L(3, "E1") * L(3, "F1"), rhs = L(3, "F1") * L(3, "E1");
  bool differs = false;
  for (long a = 0; a <= 3 && !differs; ++a)
    for (long b = 0; b <= 3 && !differs; ++b)
      differs = act_tensor(lhs, e(3, {a, b})) != act_tensor(rhs, e(3, {a, b}));
  CHECK(differs);
  CHECK_THROWS_AS(defining_relations(2), InvariantError);
}

TEST_CASE("tau") {
  const TensorVector om = e(3, omega_key(3));
  for (int i = 1; i <= 3; ++i) {
    const TensorVector t = tau_generator_apply(i, om);
    CHECK(tau_generator_apply(i, t) == t * (q - 1) + om * q);
  }
  CHECK(tau_apply(WindowPerm::gen_rho(3, 1) * WindowPerm::gen_rho(3, -1), om) == om);
  CHECK(tau_apply(WindowPerm::identity(3), om) == om);
}

TEST_CASE("theta iso") {
  const Weight om = omega(3, 3);
  const WindowPerm id = WindowPerm::identity(3);
  CHECK(theta_iso(QTensorElement::basis(om, id)) == e(3, {1, 2, 3}));
  const WindowPerm s1 = WindowPerm::gen_s(3, 1);
  CHECK(theta_iso(act_hecke_right(QTensorElement::basis(om, id), t_basis(s1))) ==
        hecke_right_action(e(3, {1, 2, 3}), s1));
  const QTensorElement x = QTensorElement::basis(Weight({2, 1, 0}), WindowPerm::gen_s(3, 2));
  CHECK(theta_iso_inverse(theta_iso(x)) == x);
}

TEST_CASE("phi^{s_r} on e_omega: one q-tensor term, two tensor terms") {
  const Weight om = omega(3, 3);
  const SchurElement s = phi(om, om, WindowPerm::gen_s(3, 3));
  CHECK(as_qtensor(s).terms().size() == 1);
  CHECK(kappa_apply(s, e(3, omega_key(3))).terms().size() == 2);
}

TEST_CASE("kappa normalisation") {
  for (const auto& l : all_weights(3, 3))
    for (const auto& k : kappa_exponents(l)) CHECK(k.exponent == k.parabolic_length);
  // kappa(phi_{omega,mu}) on e_{l(mu)}: sum over W_mu of v^{l(w)} e_{key(w)}
  const Weight mu({2, 1, 0});
  const TensorVector got = kappa_omega_mu(mu, e(3, {1, 1, 2}));
  TensorVector want(3, 3);
  for (const auto& w : parabolic_elements(young_parabolic(mu))) want.add_term(key_of(w), LaurentPoly::v(w.length()));
  CHECK(got == want);
  CHECK_THROWS_AS(omega_key(2), InvariantError);
}

TEST_CASE("duality suite") {
  DualityParams p;
  p.window = 4;
  p.len = 2;
  p.kappa_samples = 10;
  const SuiteReport rep = verify_affine_duality(p);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name << ": " << c.witness);
}
