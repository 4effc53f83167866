#include "aqs/quantum/operators.hpp"

#include <stdexcept>

namespace aqs {

namespace {

void require_n_ge_r(int n, int r) {
  if (n < r)
    throw InvariantError("operation needs n >= r (n = " + std::to_string(n) +
                         ", r = " + std::to_string(r) + ")");
}

Weight omega_of(const TensorVector& x) { return omega(x.n(), x.r()); }

// d0 with k = l(lambda) . d0 and d0 distinguished: (t)d0^{-1} runs through
// block k_t in increasing order.
WindowPerm distinguished_for_key(const TensorKey& k, const Weight& lambda) {
  const int r = lambda.r();
  std::vector<long> next(static_cast<std::size_t>(lambda.n()) + 1, 0);
  long start = 1;
  for (int b = 1; b <= lambda.n(); ++b) {
    next[static_cast<std::size_t>(b)] = start;
    start += lambda[b];
  }
  std::vector<long> inv(static_cast<std::size_t>(r));
  for (int t = 0; t < r; ++t) inv[static_cast<std::size_t>(t)] = next[static_cast<std::size_t>(k[static_cast<std::size_t>(t)])]++;
  return WindowPerm(r, inv).inverse();
}

}  // namespace

TensorKey key_of(const WindowPerm& w) {
  const WindowPerm inv = w.inverse();
  TensorKey k(static_cast<std::size_t>(w.r()));
  for (int t = 1; t <= w.r(); ++t) k[static_cast<std::size_t>(t - 1)] = inv.apply(t);
  return k;
}

TensorKey omega_key(int r) { return key_of(WindowPerm::identity(r)); }

UElement tau_generator(int n, int r, int i) {
  require_n_ge_r(n, r);
  if (i < 1 || i > r) throw InvariantError("tau generator index out of range");
  UElement u = UElement::word(n, {make_letter(Gen::F, i, n), make_letter(Gen::E, i, n)}, LaurentPoly::v());
  u -= UElement::one(n);
  return u;
}

UElement tau_rho(int n, int r, int sign) {
  require_n_ge_r(n, r);
  GeneratorWord w;
  if (sign == 1) {
    for (int i = r; i <= n - 1; ++i) w.push_back(make_letter(Gen::E, i, n));
    w.push_back(make_letter(Gen::Rinv, 0, n));
  } else if (sign == -1) {
    for (int i = n; i >= r + 1; --i) w.push_back(make_letter(Gen::F, i, n));
    w.push_back(make_letter(Gen::R, 0, n));
  } else {
    throw std::invalid_argument("tau_rho sign must be +-1");
  }
  return UElement::word(n, w);
}

TensorVector tau_generator_apply(int i, const TensorVector& x) {
  const int n = x.n(), r = x.r();
  if (i == r && n > r) {
    TensorVector y = act_tensor(tau_rho(n, r, -1), x);
    y = act_tensor(tau_generator(n, r, 1), y);
    return act_tensor(tau_rho(n, r, 1), y);
  }
  return act_tensor(tau_generator(n, r, i), x);
}

TensorVector tau_apply(const WindowPerm& w, const TensorVector& x) {
  const int n = x.n(), r = x.r();
  require_n_ge_r(n, r);
  if (w.r() != r) throw InvariantError("period mismatch in tau");
  const ReducedWord rw = reduced_word(w);
  // tau(T_w) = tau(T_rho)^z tau(T_{s_a}) tau(T_{s_b}) ...; the rightmost acts first
  TensorVector y = project_weight(x, omega_of(x));
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) y = tau_generator_apply(*it, y);
  const UElement rho = tau_rho(n, r, rw.z > 0 ? 1 : -1);
  for (long k = 0; k < std::abs(rw.z); ++k) y = act_tensor(rho, y);
  return y;
}

TensorVector tau_apply(const HeckeElement& h, const TensorVector& x) {
  TensorVector out(x.n(), x.r());
  for (const auto& [w, c] : h.terms()) out += tau_apply(w, x) * c;
  return out;
}

TensorVector kappa_lambda_omega(const Weight& lambda, const TensorVector& x) {
  const int n = x.n(), r = x.r();
  require_n_ge_r(n, r);
  const Weight om = omega_of(x);
  const ParabolicIndex pi = young_parabolic(lambda);
  const std::vector<long> ell = ell_key(lambda);
  TensorVector out(n, r);
  for (const auto& [j, c] : x.terms()) {
    if (weight_of(j, n) != om) continue;
    const SplitKey s = split_key(j, n);
    // s.k = key(w) with w^{-1} = s.k as a window
    const WindowPerm w = WindowPerm(r, s.k).inverse();
    const auto dec = coset_decompose(w, pi);
    TensorKey out_key(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t)
      out_key[static_cast<std::size_t>(t)] = ell[static_cast<std::size_t>(s.k[static_cast<std::size_t>(t)] - 1)];
    out.add_term(shift_key(out_key, s.c, n), c.shifted(dec.first.length()));
  }
  return out;
}

TensorVector kappa_omega_mu(const Weight& mu, const TensorVector& x) {
  const int n = x.n(), r = x.r();
  require_n_ge_r(n, r);
  const auto wmu = parabolic_elements(young_parabolic(mu));
  TensorVector out(n, r);
  for (const auto& [j, c] : x.terms()) {
    if (weight_of(j, n) != mu) continue;
    const SplitKey s = split_key(j, n);
    const WindowPerm d0 = distinguished_for_key(s.k, mu);
    for (const auto& u : wmu) out.add_term(shift_key(key_of(u * d0), s.c, n), c.shifted(u.length()));
  }
  return out;
}

TensorVector kappa_apply(const SchurElement& s, const TensorVector& x) {
  const int n = x.n(), r = x.r();
  require_n_ge_r(n, r);
  if (s.n() != n || s.r() != r) throw InvariantError("Schur element does not match tensor space");
  const Weight om = omega(n, r);
  TensorVector out(n, r);
  for (const auto& [k, c] : s.terms()) {
    TensorVector y = project_weight(x, k.mu);
    if (y.is_zero()) continue;
    const bool identity_d = k.d == WindowPerm::identity(r);
    if (k.lambda == k.mu && identity_d) {
      out += y * c;
      continue;
    }
    if (k.mu != om) y = kappa_omega_mu(k.mu, y);
    if (!identity_d) y = tau_apply(k.d, y);
    if (k.lambda != om) y = kappa_lambda_omega(k.lambda, y);
    // P_nu for W_nu = d^{-1} W_lambda d intersect W_mu
    LaurentPoly pnu;
    const auto wl = parabolic_elements(young_parabolic(k.lambda));
    for (const auto& u : parabolic_elements(young_parabolic(k.mu))) {
      const WindowPerm conj = k.d * u * k.d.inverse();
      for (const auto& z : wl)
        if (z == conj) {
          pnu += LaurentPoly::q(u.length());
          break;
        }
    }
    for (const auto& [key, co] : y.terms()) {
      auto quotient = co.divide_exact(pnu);
      if (!quotient) throw std::logic_error("kappa: coefficient not divisible by P_nu");
      out.add_term(key, *quotient * c);
    }
  }
  return out;
}

TensorOperator kappa_op(const SchurElement& s) {
  return [s](const TensorKey& key) { return kappa_apply(s, TensorVector::basis(s.n(), key)); };
}

TensorVector theta_iso(const QTensorElement& x) {
  require_n_ge_r(x.n(), x.r());
  TensorVector out(x.n(), x.r());
  for (const auto& [k, c] : x.terms()) {
    const TensorKey start = ell_key(k.lambda);
    out += hecke_right_action(TensorVector::basis(x.n(), start), k.d) * c;
  }
  return out;
}

QTensorElement theta_iso_inverse(const TensorVector& x) {
  require_n_ge_r(x.n(), x.r());
  QTensorElement out(x.n(), x.r());
  for (const auto& [j, c] : x.terms()) {
    const Weight lambda = weight_of(j, x.n());
    const SplitKey s = split_key(j, x.n());
    const WindowPerm d0 = distinguished_for_key(s.k, lambda);
    QTensorElement e = act_hecke_right(QTensorElement::basis(lambda, d0), y_monomial(x.r(), s.c));
    e *= c.shifted(-d0.length());
    out += e;
  }
  return out;
}

}  // namespace aqs
