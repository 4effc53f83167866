#include <random>

#include "aqs/hecke/bernstein.hpp"
#include "aqs/hecke/hecke_element.hpp"
#include "aqs/hecke/kl.hpp"
#include "doctest.h"
#include "oracles.hpp"

using aqs::HeckeElement;
using aqs::LaurentPoly;
using aqs::WindowPerm;

namespace {

HeckeElement T(const WindowPerm& w) { return aqs::t_basis(w); }
HeckeElement Ts(int r, int i) { return T(WindowPerm::gen_s(r, i)); }
HeckeElement Trho(int r, long z) { return T(WindowPerm::gen_rho(r, z)); }
const LaurentPoly q = LaurentPoly::q();

std::vector<WindowPerm> pool(int r, int len, long rho) {
  return aqs::enumerate_up_to_length(r, len, true, rho);
}

}  // namespace

TEST_CASE("quadratic and conjugation relations") {
  const HeckeElement e = HeckeElement::one(3);
  HeckeElement expect = e * q;
  expect += Ts(3, 1) * (q - 1);
  CHECK(Ts(3, 1) * Ts(3, 1) == expect);
  CHECK(Trho(3, 1) * Ts(3, 2) * Trho(3, -1) == Ts(3, 1));
  CHECK(e * Ts(3, 2) == Ts(3, 2));
  CHECK(Ts(3, 1) * Ts(3, 2) * Ts(3, 1) == Ts(3, 2) * Ts(3, 1) * Ts(3, 2));
  const WindowPerm s1s2 = WindowPerm::gen_s(3, 1) * WindowPerm::gen_s(3, 2);
  CHECK(Ts(3, 1) * Ts(3, 2) == T(s1s2));
  CHECK(T(WindowPerm::gen_rho(3, 1)).terms().size() == 1);
  for (int r : {3, 4})
    for (int i = 1; i <= r; ++i) {
      const int j = i % r + 1;
      CHECK(Trho(r, 1) * Ts(r, j) * Trho(r, -1) == Ts(r, i));
      CHECK((Ts(r, i) + HeckeElement::one(r)) * (Ts(r, i) - HeckeElement::one(r) * q) ==
            HeckeElement(r));
      CHECK(Ts(r, i) * aqs::t_gen_inverse(r, i) == HeckeElement::one(r));
    }
}

TEST_CASE("hand expansion checked against the left-factor oracle") {
  const oracle::WordBall ball(3, 6);
  HeckeElement a = Ts(3, 1) + HeckeElement::one(3);
  HeckeElement b = Ts(3, 1) - HeckeElement::one(3) * q;
  CHECK(a * b == oracle::hecke_mul_left(ball, a, b));
  CHECK((a * b).is_zero());  // (T+1)(T-q) = 0
}

TEST_CASE("product matches the left-expansion oracle and is associative") {
  const oracle::WordBall ball(3, 10);
  const auto els = pool(3, 4, 2);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    const HeckeElement a = oracle::random_hecke(rng, els);
    const HeckeElement b = oracle::random_hecke(rng, els);
    const HeckeElement c = oracle::random_hecke(rng, els);
    CHECK(a * b == oracle::hecke_mul_left(ball, a, b));
    CHECK((a * b) * c == a * (b * c));
    // specialization is a homomorphism onto the group algebra
    std::map<WindowPerm, mpz_class> ga;
    for (const auto& [x, cx] : aqs::specialize_group_algebra(a))
      for (const auto& [y, cy] : aqs::specialize_group_algebra(b)) ga[x * y] += cx * cy;
    std::erase_if(ga, [](const auto& kv) { return kv.second == 0; });
    CHECK(aqs::specialize_group_algebra(a * b) == ga);
  }
}

TEST_CASE("specialization examples") {
  HeckeElement h = HeckeElement::one(3) * q;
  h += Ts(3, 1) * (q - 1);
  const auto s = aqs::specialize_group_algebra(h);
  CHECK(s.size() == 1);
  CHECK(s.at(WindowPerm::identity(3)) == 1);
  const auto t = aqs::specialize_group_algebra(Trho(3, 1) * Ts(3, 2) * Trho(3, -1));
  CHECK(t.size() == 1);
  CHECK(t.at(WindowPerm::gen_s(3, 1)) == 1);
}

TEST_CASE("inverses and bar involution") {
  for (const auto& w : pool(3, 3, 1)) {
    CHECK(T(w) * aqs::t_inverse(w) == HeckeElement::one(3));
    CHECK(aqs::t_inverse(w) * T(w) == HeckeElement::one(3));
    CHECK(aqs::bar(aqs::bar(T(w))) == T(w));
  }
  std::mt19937_64 rng(5);
  const auto els = pool(3, 3, 1);
  for (int it = 0; it < 20; ++it) {
    const HeckeElement a = oracle::random_hecke(rng, els), b = oracle::random_hecke(rng, els);
    CHECK(aqs::bar(a * b) == aqs::bar(a) * aqs::bar(b));
  }
}

TEST_CASE("left multiplication matrices are independent") {
  // T_w -> T_w * T_e lands on distinct basis vectors; a stronger check is that
  // the images T_w * T_u for fixed u are linearly independent, which follows
  // from distinct leading terms T_{wu} when l(wu) = l(w) + l(u).
  const auto els = pool(3, 3, 1);
  std::set<WindowPerm> leads;
  const WindowPerm u = WindowPerm::gen_rho(3, 1);
  for (const auto& w : els) {
    const HeckeElement p = T(w) * T(u);
    CHECK(p.terms().size() == 1);
    leads.insert(p.terms().begin()->first);
  }
  CHECK(leads.size() == els.size());
}

TEST_CASE("x_lambda") {
  using aqs::ParabolicIndex;
  CHECK(aqs::x_lambda(ParabolicIndex(3, {})) == HeckeElement::one(3));
  CHECK(aqs::x_lambda(ParabolicIndex(3, {1})) == HeckeElement::one(3) + Ts(3, 1));
  CHECK(aqs::x_lambda(ParabolicIndex(3, {1}, 1)) == HeckeElement::one(3) + Ts(3, 2));
  for (const auto& pi : {ParabolicIndex(3, {1, 2}), ParabolicIndex(3, {3}), ParabolicIndex(4, {1, 3}),
                         ParabolicIndex(4, {2, 3, 4})}) {
    const HeckeElement x = aqs::x_lambda(pi);
    for (int i : pi.generators()) {
      CHECK(x * Ts(pi.r(), i) == x * q);
      CHECK(Ts(pi.r(), i) * x == x * q);
    }
  }
}

TEST_CASE("Bernstein presentation") {
  for (int r : {3, 4}) {
    std::vector<HeckeElement> y, yi;
    for (int i = 1; i <= r; ++i) {
      y.push_back(aqs::bernstein_y(r, i));
      yi.push_back(aqs::bernstein_y_inverse(r, i));
    }
    const HeckeElement one = HeckeElement::one(r);
    for (int j = 0; j < r; ++j) {
      CHECK(y[j] * yi[j] == one);
      CHECK(yi[j] * y[j] == one);
      for (int k = 0; k < r; ++k) CHECK(y[j] * y[k] == y[k] * y[j]);
    }
    for (int i = 1; i < r; ++i) {
      const HeckeElement s = Ts(r, i);
      CHECK(s * y[i - 1] * s == y[i] * LaurentPoly::v(2));
      for (int j = 1; j <= r; ++j)
        if (j != i && j != i + 1) CHECK(y[j - 1] * s == s * y[j - 1]);
    }
    // y_r is a single T_w
    CHECK(y[r - 1].terms().size() == 1);
  }
}

TEST_CASE("Bernstein basis round trip") {
  const int r = 3;
  const aqs::YExponent zero(3, 0);
  const auto e = aqs::to_bernstein_basis(HeckeElement::one(3));
  CHECK(e == aqs::BernsteinElement::monomial(zero, WindowPerm::identity(3)));
  const auto y1 = aqs::to_bernstein_basis(aqs::bernstein_y(3, 1));
  CHECK(y1 == aqs::BernsteinElement::monomial({1, 0, 0}, WindowPerm::identity(3)));
  // T_rho = v^{r-1} y_r T_{s_1 s_2}^{-1}, since y_r = v^{-(r-1)} T_rho T_{s_1} T_{s_2}
  const auto rho = aqs::to_bernstein_basis(Trho(3, 1));
  aqs::BernsteinElement expect(3);
  const HeckeElement ginv = aqs::t_inverse(WindowPerm::gen_s(3, 1) * WindowPerm::gen_s(3, 2));
  for (const auto& [w, c] : ginv.terms())
    expect.add_term({{0, 0, 1}, w}, c * LaurentPoly::v(2));
  CHECK(rho == expect);
  CHECK(aqs::from_bernstein_basis(rho) == Trho(3, 1));
  for (const auto& w : pool(r, 3, 1)) {
    const auto b = aqs::to_bernstein_basis(T(w));
    CHECK(aqs::from_bernstein_basis(b) == T(w));
  }
  std::mt19937_64 rng(3);
  const auto els = pool(r, 2, 1);
  for (int it = 0; it < 10; ++it) {
    const HeckeElement a = oracle::random_hecke(rng, els), b = oracle::random_hecke(rng, els);
    CHECK(aqs::bernstein_mul(aqs::to_bernstein_basis(a), aqs::to_bernstein_basis(b)) ==
          aqs::to_bernstein_basis(a * b));
  }
}

TEST_CASE("divided differences") {
  // (f - s f) = (1 - y_i / y_{i+1}) Delta(f), checked on exponents
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      std::map<std::vector<long>, long> lhs, rhs;
      lhs[{a, b, 0}] += 1;
      lhs[{b, a, 0}] -= 1;
      for (const auto& [m, sgn] : aqs::divided_difference({a, b, 0}, 1)) {
        rhs[m] += sgn;
        rhs[{m[0] + 1, m[1] - 1, 0}] -= sgn;
      }
      std::erase_if(lhs, [](auto& kv) { return kv.second == 0; });
      std::erase_if(rhs, [](auto& kv) { return kv.second == 0; });
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Kazhdan-Lusztig polynomials in a finite A3") {
  const int r = 5;
  const aqs::ParabolicIndex pi(r, {1, 2, 3});
  const auto els = aqs::parabolic_elements(pi);
  REQUIRE(els.size() == 24);
  const oracle::WordBall ball(r, 6);
  const oracle::CanonicalBasis cb(els, ball);
  CHECK(cb.bar_invariant);
  aqs::KLTable table;
  std::set<WindowPerm> nontrivial;
  for (const auto& w : els)
    for (const auto& y : els) {
      const LaurentPoly p = aqs::kl_polynomial(table, y, w);
      CHECK(p == cb.P(y, w));
      if (p == 1 + q) nontrivial.insert(w);
      if (aqs::bruhat_leq(y, w) && y != w)
        CHECK(p.q_degree() * 2 <= w.length() - y.length() - 1);
    }
  CHECK(nontrivial.size() == 2);
  const WindowPerm s1 = WindowPerm::gen_s(r, 1), s2 = WindowPerm::gen_s(r, 2),
                   s3 = WindowPerm::gen_s(r, 3);
  CHECK(aqs::kl_polynomial(table, s2, s2 * s1 * s3 * s2) == 1 + q);
  // extended version
  const WindowPerm rho = WindowPerm::gen_rho(r, 1);
  CHECK(aqs::kl_extended(table, rho * s2, s2).is_zero());
  CHECK(aqs::kl_extended(table, rho * rho * s1, rho * rho * s1) == 1);
  CHECK(aqs::kl_extended(table, rho * s2, rho * s2 * s1 * s3 * s2) == 1 + q);
}

TEST_CASE("KL degree bound on an affine ball") {
  aqs::KLTable table;
  const auto els = aqs::enumerate_up_to_length(3, 5);
  for (const auto& w : els)
    for (const auto& y : aqs::bruhat_interval_below(w)) {
      const LaurentPoly p = aqs::kl_polynomial(table, y, w);
      CHECK(p.is_q_polynomial());
      CHECK(p.coeff(0) == 1);
      if (y != w) CHECK(p.q_degree() * 2 <= w.length() - y.length() - 1);
    }
}
