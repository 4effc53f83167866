#include "aqs/verify/suites.hpp"

#include <chrono>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "aqs/hecke/bernstein.hpp"
#include "aqs/hecke/kl.hpp"
#include "aqs/quantum/hopf.hpp"
#include "aqs/util/modrank.hpp"

namespace aqs {

namespace {

std::string p_str(long x) { return std::to_string(x); }

bool is_finite_perm(const WindowPerm& w) {
  for (int t = 1; t <= w.r(); ++t)
    if (w[t] < 1 || w[t] > w.r()) return false;
  return true;
}

std::vector<WindowPerm> finite_perms(int r) {
  std::vector<WindowPerm> out;
  for (const auto& w : enumerate_up_to_length(r, r * (r - 1) / 2))
    if (is_finite_perm(w)) out.push_back(w);
  return out;
}

HeckeElement random_hecke(std::mt19937_64& rng, const std::vector<WindowPerm>& support) {
  std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
  std::uniform_int_distribution<int> nterms(1, 3), coef(-2, 2), expo(-3, 3);
  HeckeElement h(support.front().r());
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    int c = coef(rng);
    if (c == 0) c = 1;
    h.add_term(support[pick(rng)], LaurentPoly::monomial(expo(rng), c));
  }
  return h;
}

}  // namespace

SuiteReport verify_weyl_core(const SuiteParams& p) {
  SuiteReport rep;
  rep.suite = "weyl-core";
  const int r = p.r;
  const int len = p.len < 0 ? 8 : p.len;
  rep.params = {{"r", p_str(r)}, {"len", p_str(len)}};
  const std::string tag = " r=" + p_str(r);
  // breadth-first search over words in s_1..s_r
  std::unordered_map<WindowPerm, int, WindowPermHash> dist;
  std::deque<WindowPerm> queue{WindowPerm::identity(r)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    const WindowPerm w = queue.front();
    queue.pop_front();
    const int d = dist[w];
    if (d == len) continue;
    for (int i = 1; i <= r; ++i) {
      const WindowPerm x = w * WindowPerm::gen_s(r, i);
      if (dist.emplace(x, d + 1).second) queue.push_back(x);
    }
  }
  Check length("length-equals-word-length" + tag), desc("descents-match-length" + tag);
  for (const auto& [w, d] : dist) {
    length.record(w.length() == d, [&] { return w.to_string(); });
    if (d >= len) continue;  // neighbours of the frontier may be unexplored
    for (int i = 1; i <= r; ++i) {
      const int right = dist.at(w * WindowPerm::gen_s(r, i));
      const int left = dist.at(WindowPerm::gen_s(r, i) * w);
      desc.record(w.is_right_descent(i) == (right < d) && w.is_left_descent(i) == (left < d),
                  [&] { return w.to_string() + " s" + p_str(i); });
    }
  }
  rep.add(length);
  rep.add(desc);
  // coset decompositions: unique and length additive
  Check coset("coset-decomposition-unique" + tag);
  const auto small = enumerate_up_to_length(r, std::min(len, 6));
  for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {
    std::vector<int> members;
    for (int i = 1; i <= r; ++i)
      if (mask & (1u << (i - 1))) members.push_back(i);
    const ParabolicIndex pi(r, members);
    const auto wpi = parabolic_elements(pi);
    for (const auto& w : small) {
      int count = 0;
      bool additive = true;
      for (const auto& u : wpi) {
        const WindowPerm d = u.inverse() * w;
        if (!is_distinguished(d, pi)) continue;
        ++count;
        additive = additive && u.length() + d.length() == w.length();
      }
      const auto [head, tail] = coset_decompose(w, pi);
      coset.record(count == 1 && additive && head * tail == w && is_distinguished(tail, pi),
                   [&] { return w.to_string() + " pi mask " + p_str(mask); });
    }
  }
  rep.add(coset);
  Check rot("rho-conjugation-rotates-generators" + tag);
  const WindowPerm rho = WindowPerm::gen_rho(r, 1);
  for (int i = 1; i <= r; ++i)
    rot.record(rho * WindowPerm::gen_s(r, i % r + 1) * rho.inverse() == WindowPerm::gen_s(r, i),
               [&] { return "s" + p_str(i); });
  rep.add(rot);
  Check neg("bruhat-rho-shift-incomparable" + tag);
  for (const auto& y : small) neg.record(!bruhat_leq(rho * y, y), [&] { return y.to_string(); });
  rep.add(neg);
  bool threw = false;
  try {
    WindowPerm::identity(2);
  } catch (const InvariantError&) {
    threw = true;
  }
  rep.add("period-2-rejected", threw, "r = 2 was accepted");
  return rep;
}

SuiteReport verify_hecke_core(const SuiteParams& p) {
  SuiteReport rep;
  rep.suite = "hecke-core";
  const int r = p.r;
  const int len = p.len < 0 ? 4 : p.len;
  const int samples = 200;
  rep.params = {{"r", p_str(r)}, {"len", p_str(len)}, {"rho_bound", p_str(p.rho_bound)},
                {"samples", p_str(samples)}, {"seed", std::to_string(p.seed)}};
  std::mt19937_64 rng(p.seed);
  const auto support = enumerate_up_to_length(r, len, true, p.rho_bound);
  Check assoc("associativity"), spec("specialisation-homomorphism");
  for (int it = 0; it < samples; ++it) {
    const HeckeElement a = random_hecke(rng, support), b = random_hecke(rng, support),
                       c = random_hecke(rng, support);
    assoc.record((a * b) * c == a * (b * c), [&] { return a.to_string() + " | " + b.to_string() + " | " + c.to_string(); });
    // group algebra product of the specialisations
    std::map<WindowPerm, mpz_class> prod;
    for (const auto& [x, cx] : specialize_group_algebra(a))
      for (const auto& [y, cy] : specialize_group_algebra(b)) prod[x * y] += cx * cy;
    std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
    spec.record(specialize_group_algebra(a * b) == prod, [&] { return a.to_string() + " | " + b.to_string(); });
  }
  rep.add(assoc);
  rep.add(spec);
  // Bernstein relations
  const LaurentPoly q = LaurentPoly::q();
  const HeckeElement one = HeckeElement::one(r);
  Check b14("bernstein-sigma-relations"), b56("bernstein-y-relations"), b7("bernstein-y-sigma-commute"),
      b8("bernstein-sigma-y-sigma");
  std::vector<HeckeElement> s, y, yi;
  for (int i = 1; i <= r; ++i) {
    s.push_back(t_basis(WindowPerm::gen_s(r, i)));
    y.push_back(bernstein_y(r, i));
    yi.push_back(bernstein_y_inverse(r, i));
  }
  for (int i = 1; i < r; ++i) {
    const auto& si = s[static_cast<std::size_t>(i - 1)];
    b14.record(si * t_gen_inverse(r, i) == one && t_gen_inverse(r, i) * si == one, [&] { return "(1) s" + p_str(i); });
    b14.record((si + one) * (si - one * q) == HeckeElement(r), [&] { return "(4) s" + p_str(i); });
    if (i + 1 < r) {
      const auto& sj = s[static_cast<std::size_t>(i)];
      b14.record(si * sj * si == sj * si * sj, [&] { return "(2) s" + p_str(i); });
    }
    for (int j = i + 2; j < r; ++j) {
      const auto& sj = s[static_cast<std::size_t>(j - 1)];
      b14.record(si * sj == sj * si, [&] { return "(3) s" + p_str(i) + " s" + p_str(j); });
    }
    for (int j = 1; j <= r; ++j)
      if (j != i && j != i + 1)
        b7.record(y[static_cast<std::size_t>(j - 1)] * si == si * y[static_cast<std::size_t>(j - 1)],
                  [&] { return "y" + p_str(j) + " s" + p_str(i); });
    b8.record(si * y[static_cast<std::size_t>(i - 1)] * si == y[static_cast<std::size_t>(i)] * q,
              [&] { return "s" + p_str(i); });
  }
  for (int j = 0; j < r; ++j) {
    b56.record(y[static_cast<std::size_t>(j)] * yi[static_cast<std::size_t>(j)] == one &&
                   yi[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)] == one,
               [&] { return "(5) y" + p_str(j + 1); });
    for (int k = j + 1; k < r; ++k)
      b56.record(y[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(k)] ==
                     y[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(j)],
                 [&] { return "(6) y" + p_str(j + 1) + " y" + p_str(k + 1); });
  }
  rep.add(b14);
  rep.add(b56);
  rep.add(b7);
  rep.add(b8);
  return rep;
}

SuiteReport verify_kl(const SuiteParams& p) {
  SuiteReport rep;
  rep.suite = "kl";
  const int r = 5;
  rep.params = {{"r", p_str(r)}, {"parabolic", "1,2,3"}};
  // the symmetric group on 4 letters inside W^ for r = 5
  const auto elements = parabolic_elements(ParabolicIndex(r, {1, 2, 3}));
  KLTable table;
  Check bar_inv("canonical-element-bar-invariant"), degree("degree-bound"), diag("diagonal-one");
  Check support("support-in-bruhat-interval");
  std::set<WindowPerm> with_one_plus_q;
  const LaurentPoly one_plus_q = LaurentPoly(1) + LaurentPoly::q();
  for (const auto& w : elements) {
    HeckeElement c(r);
    for (const auto& y : elements) {
      const LaurentPoly pyw = kl_polynomial(table, y, w);
      const bool below = bruhat_leq(y, w);
      support.record(below || pyw.is_zero(), [&] { return y.to_string() + " " + w.to_string(); });
      if (pyw.is_zero()) continue;
      if (pyw == one_plus_q) with_one_plus_q.insert(w);
      if (y == w) diag.record(pyw == LaurentPoly(1), [&] { return w.to_string(); });
      else
        degree.record(2 * pyw.q_degree() <= w.length() - y.length() - 1,
                      [&] { return y.to_string() + " " + w.to_string(); });
      c.add_term(y, pyw.shifted(-w.length()));
    }
    bar_inv.record(bar(c) == c, [&] { return w.to_string(); });
  }
  rep.add(bar_inv);
  rep.add(degree);
  rep.add(diag);
  rep.add(support);
  rep.add("elements-with-P-equal-1+q", with_one_plus_q.size() == 2,
          "found " + std::to_string(with_one_plus_q.size()));
  (void)p;
  return rep;
}

FiniteCommutant finite_commutant(int n, int r, std::uint64_t seed) {
  FiniteCommutant out;
  const auto weights = all_weights(n, r);
  const Weight om = omega(n, r);
  const WindowPerm e = WindowPerm::identity(r);
  const auto perms = finite_perms(r);
  // basis of the finite q-tensor space, grouped by weight
  std::vector<QTensorKey> basis;
  std::map<QTensorKey, std::size_t> index;
  for (const auto& l : weights) {
    const ParabolicIndex pi = young_parabolic(l);
    for (const auto& d : perms)
      if (is_distinguished(d, pi)) {
        index[{l, d}] = basis.size();
        basis.push_back({l, d});
      }
  }
  const std::size_t dim = basis.size();
  out.space_dim = dim;
  // commuting with the idempotents phi_{lambda,lambda} forces block form;
  // unknowns are the entries X[a][b] with a, b of equal weight
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if (basis[a].lambda == basis[b].lambda) unknown.try_emplace({a, b}, unknown.size());
  std::vector<SchurElement> gens;
  for (const auto& l : weights) {
    gens.push_back(phi(l, om, e));
    gens.push_back(phi(om, l, e));
  }
  for (int i = 1; i < r; ++i) gens.push_back(phi(om, om, WindowPerm::gen_s(r, i)));
  // matrices of the generators: column b is the image of basis b
  std::vector<std::vector<std::vector<LaurentPoly>>> mats;
  for (const auto& g : gens) {
    std::vector<std::vector<LaurentPoly>> m(dim, std::vector<LaurentPoly>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
      const QTensorElement img = act_schur_left(g, QTensorElement::basis(basis[b].lambda, basis[b].d));
      for (const auto& [k, c] : img.terms()) m[index.at(k)][b] = c;
    }
    mats.push_back(std::move(m));
  }
  std::mt19937_64 rng(seed);
  std::size_t nullity = unknown.size();
  for (int trial = 0; trial < 3; ++trial) {
    const std::uint64_t at = modp::random_point(rng);
    modp::RankAccumulator acc(unknown.size());
    for (const auto& m : mats) {
      std::vector<std::vector<std::uint64_t>> g(dim, std::vector<std::uint64_t>(dim));
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) g[a][b] = m[a][b].evaluate_mod(at, modp::kPrime);
      // (X G - G X)[a][b] = sum_c X[a][c] G[c][b] - G[a][c] X[c][b]
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
          std::vector<std::uint64_t> row(unknown.size(), 0);
          bool any = false;
          for (std::size_t c = 0; c < dim; ++c) {
            if (g[c][b]) {
              auto it = unknown.find({a, c});
              if (it != unknown.end()) row[it->second] = modp::add(row[it->second], g[c][b]), any = true;
            }
            if (g[a][c]) {
              auto it = unknown.find({c, b});
              if (it != unknown.end()) row[it->second] = modp::sub(row[it->second], g[a][c]), any = true;
            }
          }
          if (any) acc.add_row(std::move(row));
        }
    }
    nullity = std::min(nullity, unknown.size() - acc.rank());
  }
  out.commutant_dim = nullity;
  // the right action of the finite Hecke algebra: commutes, and spans
  out.hecke_commutes = true;
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& w : perms) {
    std::vector<LaurentPoly> flat(dim * dim);
    for (std::size_t b = 0; b < dim; ++b) {
      const QTensorElement x = QTensorElement::basis(basis[b].lambda, basis[b].d);
      const QTensorElement img = act_hecke_right(x, t_basis(w));
      for (const auto& [k, c] : img.terms()) flat[index.at(k) * dim + b] = c;
      for (const auto& g : gens)
        out.hecke_commutes = out.hecke_commutes &&
                             act_hecke_right(act_schur_left(g, x), t_basis(w)) == act_schur_left(g, img);
    }
    rows.push_back(std::move(flat));
  }
  out.hecke_rank = modp::rank(rows, modp::random_point(rng));
  return out;
}

SuiteReport verify_schur_core(const SuiteParams& p) {
  SuiteReport rep;
  rep.suite = "schur-core";
  const int n = p.n, r = p.r;
  const int len = p.len < 0 ? 4 : p.len;
  rep.params = {{"n", p_str(n)}, {"r", p_str(r)}, {"len", p_str(len)}, {"seed", std::to_string(p.seed)}};
  std::mt19937_64 rng(p.seed);
  const Weight om = omega(n, r);
  const WindowPerm e = WindowPerm::identity(r);
  const auto weights = all_weights(n, r);
  const LaurentPoly q = LaurentPoly::q();
  Check rel1("generator-relation-1"), rel2("generator-relation-2"), rel3("generator-relation-3");
  for (const auto& l : weights) {
    for (const auto& m : weights) {
      SchurElement rhs(n, r);
      if (l == m)
        for (const auto& d : parabolic_elements(young_parabolic(l))) rhs += phi(om, om, d);
      rel1.record(schur_mul(phi(om, l, e), phi(m, om, e)) == rhs,
                  [&] { return l.to_string() + " " + m.to_string(); });
    }
    for (int i : young_parabolic(l).generators()) {
      const SchurElement s = phi(om, om, WindowPerm::gen_s(r, i));
      rel2.record(schur_mul(s, phi(om, l, e)) == phi(om, l, e) * q, [&] { return l.to_string(); });
      rel3.record(schur_mul(phi(l, om, e), s) == phi(l, om, e) * q, [&] { return l.to_string(); });
    }
  }
  rep.add(rel1);
  rep.add(rel2);
  rep.add(rel3);
  // P_nu identity and re-expansion on samples
  const auto els = enumerate_up_to_length(r, 3, true, 1);
  std::uniform_int_distribution<std::size_t> pw(0, weights.size() - 1), pe(0, els.size() - 1);
  Check pnu("poincare-factorisation"), reexp("product-re-expansion");
  for (int it = 0; it < 60; ++it) {
    const Weight l = weights[pw(rng)], m = weights[pw(rng)];
    const WindowPerm d = double_coset_rep(els[pe(rng)], young_parabolic(l), young_parabolic(m));
    LaurentPoly poly;
    const auto wl = parabolic_elements(young_parabolic(l));
    const std::set<WindowPerm> wls(wl.begin(), wl.end());
    for (const auto& x : parabolic_elements(young_parabolic(m)))
      if (wls.count(d * x * d.inverse())) poly += LaurentPoly::q(x.length());
    pnu.record(schur_mul(schur_mul(phi(l, om, e), phi(om, om, d)), phi(om, m, e)) == phi(l, m, d) * poly,
               [&] { return l.to_string() + " " + d.to_string() + " " + m.to_string(); });
  }
  for (int it = 0; it < 30; ++it) {
    const Weight a = weights[pw(rng)], b = weights[pw(rng)], c = weights[pw(rng)];
    const SchurElement x = phi(a, b, els[pe(rng)]), y = phi(b, c, els[pe(rng)]);
    const SchurElement xy = schur_mul(x, y);
    // the value on x_c is the composite of the two Hecke values
    const auto& kx = x.terms().begin()->first;
    const auto& ky = y.terms().begin()->first;
    HeckeElement tail(r);
    for (const auto& w : double_coset(ky.d, young_parabolic(b), young_parabolic(c)))
      if (is_distinguished(w, young_parabolic(b))) tail.add_term(w, 1);
    HeckeElement value(r);
    for (const auto& [k, co] : xy.terms()) value += phi_value(k.lambda, k.mu, k.d) * co;
    reexp.record(value == phi_value(kx.lambda, kx.mu, kx.d) * tail,
                 [&] { return x.to_string() + " o " + y.to_string(); });
  }
  rep.add(pnu);
  rep.add(reexp);
  // theta is unitriangular against phi
  KLTable table;
  Check tri("theta-unitriangular");
  for (const auto& a : weights)
    for (const auto& b : weights) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) != 0) continue;
      const ParabolicIndex pa = young_parabolic(a), pb = young_parabolic(b);
      std::set<WindowPerm> reps;
      for (const auto& w : enumerate_up_to_length(r, 3, true, 0)) reps.insert(double_coset_rep(w, pa, pb));
      for (const auto& d : reps) {
        const SchurElement th = theta(a, b, d, table);
        const WindowPerm top = longest_double_coset_elt(d, pa, pb);
        bool ok = th.coeff({a, b, d}) == LaurentPoly::v(longest_element(pb).length() - top.length());
        for (const auto& [k, c] : th.terms()) {
          if (k.d == d) continue;
          const WindowPerm zt = longest_double_coset_elt(k.d, pa, pb);
          ok = ok && bruhat_leq(zt, top) && zt.length() < top.length();
        }
        tri.record(ok, [&] { return a.to_string() + " " + b.to_string() + " " + d.to_string(); });
      }
    }
  rep.add(tri);
  // embedding of the Hecke algebra
  Check emb("embed-hecke-multiplicative"), inj("embed-hecke-injective");
  const auto support = enumerate_up_to_length(r, len, true, 1);
  for (const auto& w : support) {
    const SchurElement img = embed_hecke(t_basis(w), n);
    inj.record(img == phi(om, om, w, true), [&] { return w.to_string(); });
  }
  const auto small = enumerate_up_to_length(r, std::min(len, 2), true, 1);
  for (int it = 0; it < 20; ++it) {
    const HeckeElement a = random_hecke(rng, small), b = random_hecke(rng, small);
    emb.record(embed_hecke(a * b, n) == schur_mul(embed_hecke(a, n), embed_hecke(b, n)),
               [&] { return a.to_string() + " | " + b.to_string(); });
  }
  rep.add(emb);
  rep.add(inj);
  // finite double centraliser
  const FiniteCommutant fc = finite_commutant(n, r, p.seed);
  std::size_t fact = 1;
  for (int i = 2; i <= r; ++i) fact *= static_cast<std::size_t>(i);
  rep.add("finite-commutant-is-hecke",
          fc.commutant_dim == fact && fc.hecke_rank == fact && fc.hecke_commutes,
          "commutant " + std::to_string(fc.commutant_dim) + ", hecke rank " + std::to_string(fc.hecke_rank) +
              ", commutes " + (fc.hecke_commutes ? "yes" : "no"));
  bool threw = false;
  try {
    omega(2, 3);
  } catch (const InvariantError&) {
    threw = true;
  }
  rep.add("omega-needs-n-at-least-r", threw, "omega(2,3) was accepted");
  return rep;
}

SuiteReport verify_hopf_suite(const SuiteParams& p) {
  SuiteReport rep;
  rep.suite = "hopf";
  const int r_max = std::min(p.r, 3);
  for (int n : {3, 4}) {
    const long window = p.window < 0 ? 2L * n : p.window;
    const SuiteReport part = verify_hopf(n, r_max, window);
    rep.absorb(part);
  }
  rep.params = {{"n", "3,4"}, {"r_max", p_str(r_max)}, {"window", p.window < 0 ? "2n" : p_str(p.window)}};
  return rep;
}

SuiteReport verify_duality_suite(const SuiteParams& p) {
  DualityParams d;
  d.n = p.n;
  d.r = p.r;
  d.len = p.len < 0 ? 3 : p.len;
  d.window = p.window < 0 ? 6 : p.window;
  d.rho_bound = p.rho_bound;
  d.seed = p.seed;
  return verify_affine_duality(d);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weyl-core", "hecke-core", "kl", "schur-core", "hopf", "duality"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& p) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (name == "all") {
    rep.suite = "all";
    for (const auto& s : suite_names()) {
      SuiteReport part = run_suite(s, p);
      for (auto& c : part.checks) c.name = s + ": " + c.name;
      rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
    }
    rep.params = {{"n", p_str(p.n)}, {"r", p_str(p.r)}, {"seed", std::to_string(p.seed)}};
  } else if (name == "weyl-core") {
    if (p.r >= 3) {
      rep = verify_weyl_core(p);
    }
  } else if (name == "hecke-core") {
    rep = verify_hecke_core(p);
  } else if (name == "kl") {
    rep = verify_kl(p);
  } else if (name == "schur-core") {
    rep = verify_schur_core(p);
  } else if (name == "hopf") {
    rep = verify_hopf_suite(p);
  } else if (name == "duality") {
    rep = verify_duality_suite(p);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  rep.sort_checks();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace aqs
