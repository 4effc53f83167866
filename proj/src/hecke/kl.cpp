#include "aqs/hecke/kl.hpp"

#include <stdexcept>

namespace aqs {

const std::vector<WindowPerm>& KLTable::interval(const WindowPerm& w) {
  auto it = intervals_.find(w);
  if (it == intervals_.end()) it = intervals_.emplace(w, bruhat_interval_below(w)).first;
  return it->second;
}

mpz_class KLTable::mu(const WindowPerm& y, const WindowPerm& w) {
  const int gap = w.length() - y.length() - 1;
  if (gap < 0 || gap % 2 != 0) return 0;
  return p(y, w).coeff(gap);  // q^{gap/2} = v^{gap}
}

LaurentPoly KLTable::p(const WindowPerm& y, const WindowPerm& w) {
  std::lock_guard<std::recursive_mutex> guard(lock_);
  if (y == w) return 1;
  if (!bruhat_leq(y, w)) return {};
  const auto key = std::make_pair(y, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  LaurentPoly val = compute(y, w);
  memo_.emplace(key, val);
  return val;
}

LaurentPoly KLTable::compute(const WindowPerm& x, const WindowPerm& w) {
  // s a left descent of w, u = s w:
  //   P_{x,w} = q^{1-c} P_{sx,u} + q^c P_{x,u} - sum_z mu(z,u) q^{(l(w)-l(z))/2} P_{x,z}
  // with c = 1 if sx < x else 0, z over x <= z < u with sz < z.
  const int s = w.left_descents().front();
  const WindowPerm gs = WindowPerm::gen_s(w.r(), s);
  const WindowPerm u = gs * w;
  const WindowPerm sx = gs * x;
  const int c = x.is_left_descent(s) ? 1 : 0;
  LaurentPoly out = p(sx, u).shifted(2 * (1 - c)) + p(x, u).shifted(2 * c);
  const int lw = w.length();
  const std::vector<WindowPerm> below = interval(u);
  for (const auto& z : below) {
    if (z == u || !z.is_left_descent(s)) continue;
    if (!bruhat_leq(x, z)) continue;
    const mpz_class m = mu(z, u);
    if (m == 0) continue;
    out -= LaurentPoly::monomial(lw - z.length(), m) * p(x, z);
  }
  if (!out.is_q_polynomial()) throw std::logic_error("KL recursion produced a non-polynomial");
  return out;
}

LaurentPoly kl_polynomial(KLTable& table, const WindowPerm& y, const WindowPerm& w) {
  if (y.rho_power() != 0 || w.rho_power() != 0)
    throw std::invalid_argument("kl_polynomial expects elements of W");
  return table.p(y, w);
}

LaurentPoly kl_extended(KLTable& table, const WindowPerm& y, const WindowPerm& w) {
  const auto a = rho_decompose(y);
  const auto b = rho_decompose(w);
  if (a.z != b.z) return {};
  return table.p(a.coxeter, b.coxeter);
}

}  // namespace aqs
