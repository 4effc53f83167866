#include "aqs/quantum/duality.hpp"

#include <random>
#include <sstream>

#include "aqs/util/modrank.hpp"

namespace aqs {

namespace {

std::string key_string(const TensorKey& k) {
  std::ostringstream os;
  os << "e(";
  for (std::size_t t = 0; t < k.size(); ++t) os << (t ? "," : "") << k[t];
  os << ")";
  return os.str();
}

std::vector<Letter> u_generators(int n) {
  std::vector<Letter> out;
  for (int i = 1; i <= n; ++i)
    for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv}) out.push_back(make_letter(g, i, n));
  out.push_back(make_letter(Gen::R, 0, n));
  out.push_back(make_letter(Gen::Rinv, 0, n));
  return out;
}

std::map<TensorKey, mpz_class> at_one(const TensorVector& x) {
  std::map<TensorKey, mpz_class> out;
  for (const auto& [k, c] : x.terms()) {
    const mpz_class s = c.specialize_v1();
    if (s != 0) out[k] = s;
  }
  return out;
}

// Rank of a family of tensor vectors, by evaluation at a random point mod p.
std::size_t tensor_rank(const std::vector<TensorVector>& vs, std::mt19937_64& rng) {
  std::map<TensorKey, std::size_t> col;
  for (const auto& v : vs)
    for (const auto& [k, c] : v.terms()) col.try_emplace(k, col.size());
  const std::uint64_t at = modp::random_point(rng);
  modp::RankAccumulator acc(col.size());
  for (const auto& v : vs) {
    std::vector<std::uint64_t> row(col.size(), 0);
    for (const auto& [k, c] : v.terms()) row[col[k]] = c.evaluate_mod(at, modp::kPrime);
    acc.add_row(std::move(row));
  }
  return acc.rank();
}

// V_omega keys inside the window
std::vector<TensorKey> omega_keys(int n, int r, long window) {
  std::vector<TensorKey> out;
  const Weight om = omega(n, r);
  for (const auto& k : window_keys(r, -window, window))
    if (weight_of(k, n) == om) out.push_back(k);
  return out;
}

}  // namespace

std::vector<KappaExponent> kappa_exponents(const Weight& lambda) {
  const int r = lambda.r(), n = lambda.n();
  std::vector<KappaExponent> out;
  const ParabolicIndex pi = young_parabolic(lambda);
  for (const auto& w : enumerate_up_to_length(r, r * (r - 1) / 2)) {
    bool finite = true;
    for (int t = 1; t <= r; ++t) finite = finite && w[t] >= 1 && w[t] <= r;
    if (!finite) continue;
    const TensorVector y = kappa_lambda_omega(lambda, TensorVector::basis(n, key_of(w)));
    const auto& [key, c] = *y.terms().begin();
    out.push_back({w, c.min_exp(), coset_decompose(w, pi).first.length()});
  }
  return out;
}

SuiteReport verify_affine_duality(const DualityParams& p) {
  const int n = p.n, r = p.r;
  if (n < r) throw InvariantError("duality checks need n >= r");
  SuiteReport rep;
  rep.suite = "duality";
  rep.params = {{"n", std::to_string(n)},          {"r", std::to_string(r)},
                {"len", std::to_string(p.len)},    {"window", std::to_string(p.window)},
                {"rho_bound", std::to_string(p.rho_bound)}, {"seed", std::to_string(p.seed)}};
  std::mt19937_64 rng(p.seed);
  const auto keys = window_keys(r, -p.window, p.window);
  const Weight om = omega(n, r);
  const WindowPerm e = WindowPerm::identity(r);

  // (a) left U generators commute with right Hecke generators, and with y_t
  {
    Check chk("a.u-commutes-with-right-hecke");
    Check chy("a.u-commutes-with-y");
    const auto gens = u_generators(n);
    for (const auto& key : keys) {
      const TensorVector x = TensorVector::basis(n, key);
      // right generators: T_{s_1}..T_{s_{r-1}}, T_rho, T_rho^-1
      const int nright = r + 1;
      auto act_right = [r](int h, const TensorVector& y) {
        if (h < r - 1) return right_sigma(y, h + 1);
        return right_rho(y, h == r - 1 ? 1 : -1);
      };
      auto right_name = [r](int h) {
        if (h < r - 1) return "T_s" + std::to_string(h + 1);
        return std::string(h == r - 1 ? "T_rho" : "T_rho^-1");
      };
      std::vector<TensorVector> xr;
      for (int h = 0; h < nright; ++h) xr.push_back(act_right(h, x));
      for (const auto& g : gens) {
        const TensorVector gx = act_letter(g, x);
        for (int h = 0; h < nright; ++h)
          chk.record(act_letter(g, xr[static_cast<std::size_t>(h)]) == act_right(h, gx),
                     [&] { return to_string(g) + " vs " + right_name(h) + " on " + key_string(key); });
        for (int t = 1; t <= r; ++t) {
          const TensorOperator y = y_op(n, t);
          chy.record(apply(y, gx) == act_letter(g, apply(y, x)),
                     [&] { return to_string(g) + " vs y" + std::to_string(t) + " on " + key_string(key); });
        }
      }
    }
    rep.add(chk);
    rep.add(chy);
  }

  // (b) tau: relations on V_omega, agreement with the right action, injectivity
  {
    const TensorVector eo = TensorVector::basis(n, omega_key(r));
    Check quad("b.tau-quadratic"), inv("b.tau-rho-inverse"), link("b.tau-matches-right-action");
    Check perm("b.tau-at-v1-permutes-indices");
    Check conj("b.tau-s_r-equals-rho-conjugate");
    for (const auto& key : omega_keys(n, r, p.window)) {
      const TensorVector x = TensorVector::basis(n, key);
      for (int i = 1; i <= r; ++i) {
        const TensorVector tx = tau_generator_apply(i, x);
        // (T - q)(T + 1) = 0
        const TensorVector lhs = tau_generator_apply(i, tx) - tx * (LaurentPoly::q() - 1) - x * LaurentPoly::q();
        quad.record(lhs.is_zero(), [&] { return "s" + std::to_string(i) + " on " + key_string(key); });
      }
      if (n == r)
        conj.record(act_tensor(tau_generator(n, r, r), x) ==
                        act_tensor(tau_rho(n, r, 1), act_tensor(tau_generator(n, r, 1), act_tensor(tau_rho(n, r, -1), x))),
                    [&] { return key_string(key); });
      inv.record(act_tensor(tau_rho(n, r, 1), act_tensor(tau_rho(n, r, -1), x)) == x &&
                     act_tensor(tau_rho(n, r, -1), act_tensor(tau_rho(n, r, 1), x)) == x,
                 [&] { return key_string(key); });
    }
    std::vector<TensorVector> images;
    // index t = a + r m in Z corresponds to the V_omega index a + n m
    auto relabel = [n, r](long t) { return residue1(t, r) + n * floor_div(t - 1, r); };
    for (const auto& w : enumerate_up_to_length(r, p.len, true, p.rho_bound)) {
      const TensorVector img = tau_apply(w, eo);
      images.push_back(img);
      link.record(img == hecke_right_action(eo, w), [&] { return w.to_string(); });
      for (const auto& key : omega_keys(n, r, std::min<long>(p.window, n))) {
        TensorKey src(key.size()), dst(key.size());
        // key entries are V_omega indices; pull back to Z, act on the left, push forward
        bool ok = true;
        for (std::size_t t = 0; t < key.size(); ++t) {
          const long a = residue1(key[t], n), m = floor_div(key[t] - 1, n);
          if (a > r) ok = false;
          const long z = a + static_cast<long>(r) * m;
          dst[t] = relabel(w.inverse().apply(z));
        }
        if (!ok) continue;
        const auto got = at_one(tau_apply(w, TensorVector::basis(n, key)));
        const std::map<TensorKey, mpz_class> want{{dst, 1}};
        perm.record(got == want, [&] { return w.to_string() + " on " + key_string(key); });
      }
    }
    rep.add(quad);
    if (n == r) rep.add(conj);
    rep.add(inv);
    rep.add(link);
    rep.add(perm);
    const std::size_t rk = tensor_rank(images, rng);
    rep.add("b.tau-injective", rk == images.size(),
            "rank " + std::to_string(rk) + " of " + std::to_string(images.size()));
  }

  // (c) Bernstein relations as right operators
  {
    Check c1("c.rel1-sigma-inverse"), c2("c.rel2-braid"), c3("c.rel3-far-commute"), c4("c.rel4-quadratic");
    Check c56("c.rel5-6-y"), c7("c.rel7-y-sigma-commute"), c8("c.rel8-sigma-y-sigma");
    Check yk("c.hecke-y-acts-as-shift"), conf("c.rewrite-confluence");
    const LaurentPoly q = LaurentPoly::q();
    std::vector<TensorKey> sample;
    for (const auto& key : keys)
      if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) sample.push_back(key);
    for (const auto& key : keys) {
      const TensorVector x = TensorVector::basis(n, key);
      const auto w = [&] { return key_string(key); };
      for (int i = 1; i < r; ++i) {
        const TensorVector s = right_sigma(x, i);
        c1.record(right_sigma_inverse(s, i) == x && right_sigma(right_sigma_inverse(x, i), i) == x, w);
        c4.record((right_sigma(s, i) - s * (q - 1) - x * q).is_zero(), w);
        if (i + 1 < r)
          c2.record(right_sigma(right_sigma(s, i + 1), i) ==
                        right_sigma(right_sigma(right_sigma(x, i + 1), i), i + 1),
                    w);
        for (int j = i + 2; j < r; ++j) c3.record(right_sigma(right_sigma(x, i), j) == right_sigma(right_sigma(x, j), i), w);
        for (int j = 1; j <= r; ++j) {
          YExponent c(static_cast<std::size_t>(r), 0);
          c[static_cast<std::size_t>(j - 1)] = 1;
          if (j != i && j != i + 1) c7.record(right_sigma(right_y(x, c), i) == right_y(s, c), w);
        }
        YExponent yi(static_cast<std::size_t>(r), 0), yi1(static_cast<std::size_t>(r), 0);
        yi[static_cast<std::size_t>(i - 1)] = 1;
        yi1[static_cast<std::size_t>(i)] = 1;
        c8.record(right_sigma(right_y(s, yi), i) == right_y(x, yi1) * q, w);
      }
      for (int j = 1; j <= r; ++j)
        for (int k = 1; k <= r; ++k) {
          YExponent a(static_cast<std::size_t>(r), 0), b(static_cast<std::size_t>(r), 0), ab;
          a[static_cast<std::size_t>(j - 1)] = 1;
          b[static_cast<std::size_t>(k - 1)] = 1;
          YExponent ainv = a;
          ainv[static_cast<std::size_t>(j - 1)] = -1;
          c56.record(right_y(right_y(x, a), ainv) == x && right_y(right_y(x, a), b) == right_y(right_y(x, b), a), w);
        }
    }
    for (const auto& key : sample) {
      const TensorVector x = TensorVector::basis(n, key);
      for (int i = 1; i <= r; ++i) {
        YExponent c(static_cast<std::size_t>(r), 0);
        c[static_cast<std::size_t>(i - 1)] = 1;
        YExponent cinv(static_cast<std::size_t>(r), 0);
        cinv[static_cast<std::size_t>(i - 1)] = -1;
        yk.record(hecke_right_action(x, bernstein_y(r, i)) == right_y(x, c) &&
                      hecke_right_action(x, bernstein_y_inverse(r, i)) == right_y(x, cinv),
                  [&] { return "y" + std::to_string(i) + " on " + key_string(key); });
      }
      for (int i = 1; i < r; ++i)
        for (int trial = 0; trial < 3; ++trial)
          conf.record(right_sigma_letterwise(x, i, rng) == right_sigma(x, i),
                      [&] { return "s" + std::to_string(i) + " on " + key_string(key); });
    }
    // the explicit identities on V_omega keys with entries in 1..r
    Check l421("c.sigma-y-sigma-on-sorted-pair"), l423("c.y-sigma-commute-on-sorted-triple");
    for (const auto& key : omega_keys(n, r, r)) {
      bool small = true;
      for (long t : key) small = small && t >= 1 && t <= r;
      if (!small) continue;
      const TensorVector x = TensorVector::basis(n, key);
      for (int i = 1; i < r; ++i) {
        YExponent yi(static_cast<std::size_t>(r), 0), yi1(static_cast<std::size_t>(r), 0);
        yi[static_cast<std::size_t>(i - 1)] = 1;
        yi1[static_cast<std::size_t>(i)] = 1;
        if (key[static_cast<std::size_t>(i - 1)] == r - 1 && key[static_cast<std::size_t>(i)] == r)
          l421.record(right_sigma(right_y(right_sigma(x, i), yi), i) == right_y(x, yi1) * LaurentPoly::q(),
                      [&] { return key_string(key); });
        for (int j = 1; j <= r; ++j) {
          if (j == i || j == i + 1 || r < 3) continue;
          if (key[static_cast<std::size_t>(i - 1)] != r - 2 || key[static_cast<std::size_t>(i)] != r - 1 ||
              key[static_cast<std::size_t>(j - 1)] != r)
            continue;
          YExponent yj(static_cast<std::size_t>(r), 0);
          yj[static_cast<std::size_t>(j - 1)] = 1;
          l423.record(right_sigma(right_y(x, yj), i) == right_y(right_sigma(x, i), yj),
                      [&] { return key_string(key); });
        }
      }
    }
    for (const Check* c : {&c1, &c2, &c3, &c4, &c56, &c7, &c8, &yk, &conf, &l421, &l423}) rep.add(*c);
  }

  // (d) kappa: generator images and sampled products
  {
    Check prod("d.kappa-multiplicative"), gen("d.kappa-generator-images"), rel("d.kappa-schur-relations");
    const auto weights = all_weights(n, r);
    const long vw = std::min<long>(p.window, 3);
    const auto test_keys = window_keys(r, -vw, vw);
    // generator images against their defining descriptions
    for (const auto& key : omega_keys(n, r, vw)) {
      const TensorVector x = TensorVector::basis(n, key);
      gen.record(kappa_apply(phi(om, om, WindowPerm::gen_s(r, 1)), x) == tau_apply(WindowPerm::gen_s(r, 1), x),
                 [&] { return "s1 on " + key_string(key); });
      for (int z : {1, -1})
        gen.record(kappa_apply(phi(om, om, WindowPerm::gen_rho(r, z)), x) == tau_apply(WindowPerm::gen_rho(r, z), x),
                   [&] { return "rho on " + key_string(key); });
    }
    for (const auto& lambda : weights) {
      // kappa(phi_{lambda,omega}) e_omega . T_w = v^{l(w)} kappa(phi_{lambda,omega}) e_{key(w)}
      const TensorVector el = TensorVector::basis(n, ell_key(lambda));
      for (const auto& w : enumerate_up_to_length(r, r * (r - 1) / 2)) {
        bool finite = true;
        for (int t = 1; t <= r; ++t) finite = finite && w[t] >= 1 && w[t] <= r;
        if (!finite) continue;
        gen.record(kappa_lambda_omega(lambda, TensorVector::basis(n, key_of(w))) * LaurentPoly::v(w.length()) ==
                       hecke_right_action(el, w),
                   [&] { return "phi_{" + lambda.to_string() + ",omega} on key of " + w.to_string(); });
      }
      // kappa(phi_{omega,lambda}) e_{l(lambda)} = sum_{u in W_lambda} v^{l(u)} e_{key(u)}
      TensorVector want(n, r);
      for (const auto& u : parabolic_elements(young_parabolic(lambda))) want.add_term(key_of(u), LaurentPoly::v(u.length()));
      gen.record(kappa_omega_mu(lambda, el) == want, [&] { return "phi_{omega," + lambda.to_string() + "}"; });
    }
    // relations (1)-(3) of the generator presentation, as operators
    for (const auto& lambda : weights)
      for (const auto& mu : weights)
        for (const auto& key : test_keys) {
          const TensorVector x = TensorVector::basis(n, key);
          TensorVector lhs = kappa_apply(phi(om, lambda, e), kappa_apply(phi(mu, om, e), x));
          TensorVector rhs(n, r);
          if (lambda == mu)
            for (const auto& d : parabolic_elements(young_parabolic(lambda))) rhs += kappa_apply(phi(om, om, d), x);
          rel.record(lhs == rhs, [&] { return lambda.to_string() + "," + mu.to_string() + " on " + key_string(key); });
          if (mu != lambda) continue;
          for (int i : young_parabolic(lambda).generators()) {
            const SchurElement s = phi(om, om, WindowPerm::gen_s(r, i));
            rel.record(kappa_apply(s, kappa_apply(phi(om, lambda, e), x)) ==
                           kappa_apply(phi(om, lambda, e), x) * LaurentPoly::q(),
                       [&] { return "left absorption " + lambda.to_string(); });
            rel.record(kappa_apply(phi(lambda, om, e), kappa_apply(s, x)) ==
                           kappa_apply(phi(lambda, om, e), x) * LaurentPoly::q(),
                       [&] { return "right absorption " + lambda.to_string(); });
          }
        }
    // sampled products
    const auto els = enumerate_up_to_length(r, 2, true, 1);
    std::uniform_int_distribution<std::size_t> pw(0, weights.size() - 1), pe(0, els.size() - 1);
    for (int it = 0; it < p.kappa_samples; ++it) {
      const Weight a = weights[pw(rng)], b = weights[pw(rng)], c = weights[pw(rng)];
      const SchurElement x = phi(a, b, els[pe(rng)]), y = phi(b, c, els[pe(rng)]);
      const SchurElement xy = schur_mul(x, y);
      for (const auto& key : test_keys) {
        if (weight_of(key, n) != c) continue;
        const TensorVector v = TensorVector::basis(n, key);
        prod.record(kappa_apply(xy, v) == kappa_apply(x, kappa_apply(y, v)),
                    [&] { return x.to_string() + " o " + y.to_string() + " on " + key_string(key); });
      }
    }
    rep.add(gen);
    rep.add(rel);
    rep.add(prod);
  }

  // Theta: q-tensor space -> tensor space
  {
    Check right("theta.intertwines-hecke"), left("theta.intertwines-schur"), round("theta.inverse");
    std::vector<TensorVector> images;
    std::vector<SchurElement> gens;
    for (const auto& lambda : all_weights(n, r)) {
      gens.push_back(phi(lambda, om, e));
      gens.push_back(phi(om, lambda, e));
      gens.push_back(phi(lambda, lambda, e));
    }
    gens.push_back(phi(om, om, WindowPerm::gen_s(r, 1)));
    gens.push_back(phi(om, om, WindowPerm::gen_rho(r, 1)));
    gens.push_back(phi(om, om, WindowPerm::gen_rho(r, -1)));
    std::vector<HeckeElement> hgens;
    for (int i = 1; i <= r; ++i) hgens.push_back(t_basis(WindowPerm::gen_s(r, i)));
    hgens.push_back(t_basis(WindowPerm::gen_rho(r, 1)));
    hgens.push_back(t_basis(WindowPerm::gen_rho(r, -1)));
    for (const auto& lambda : all_weights(n, r)) {
      const ParabolicIndex pi = young_parabolic(lambda);
      for (const auto& d : enumerate_up_to_length(r, p.len, true, 1)) {
        if (!is_distinguished(d, pi)) continue;
        const QTensorElement x = QTensorElement::basis(lambda, d);
        const TensorVector tx = theta_iso(x);
        images.push_back(tx);
        const auto w = [&] { return "x_" + lambda.to_string() + " T_" + d.to_string(); };
        round.record(theta_iso_inverse(tx) == x, w);
        for (const auto& h : hgens) right.record(theta_iso(act_hecke_right(x, h)) == hecke_right_action(tx, h), w);
        for (const auto& g : gens) left.record(theta_iso(act_schur_left(g, x)) == kappa_apply(g, tx), w);
      }
    }
    rep.add(right);
    rep.add(left);
    rep.add(round);
    const std::size_t rk = tensor_rank(images, rng);
    rep.add("theta.injective", rk == images.size(),
            "rank " + std::to_string(rk) + " of " + std::to_string(images.size()));
  }
  rep.sort_checks();
  return rep;
}

}  // namespace aqs
