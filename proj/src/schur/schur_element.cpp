#include "aqs/schur/schur_element.hpp"

#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aqs {

namespace {

void check_compatible(int n1, int r1, int n2, int r2) {
  if (n1 != n2 || r1 != r2) throw std::invalid_argument("incompatible (n, r) in Schur algebra");
}

struct PhiCache {
  std::mutex lock;
  std::map<SchurKey, HeckeElement> values;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

constexpr int kPeelCap = 100000;

}  // namespace

LaurentPoly SchurElement::coeff(const SchurKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void SchurElement::add_term(const SchurKey& k, const LaurentPoly& c) {
  if (k.lambda.n() != n_ || k.mu.n() != n_ || k.lambda.r() != r_ || k.mu.r() != r_)
    throw std::invalid_argument("Schur key has the wrong (n, r)");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  check_compatible(n_, r_, o.n_, o.r_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  check_compatible(n_, r_, o.n_, o.r_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SchurElement& SchurElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [k, a] : terms_) a *= c;
  return *this;
}

std::string SchurElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*phi[" << k.lambda.to_string() << "," << k.mu.to_string()
       << "," << k.d.to_string() << "]";
  }
  return os.str();
}

SchurElement phi(const Weight& lambda, const Weight& mu, const WindowPerm& d, bool strict) {
  if (lambda.n() != mu.n() || lambda.r() != mu.r() || d.r() != lambda.r())
    throw std::invalid_argument("phi: incompatible weights and element");
  const ParabolicIndex pl = young_parabolic(lambda), pm = young_parabolic(mu);
  WindowPerm rep = d;
  if (!is_double_distinguished(d, pl, pm)) {
    if (strict) throw InvariantError("phi: " + d.to_string() + " is not a distinguished double coset representative");
    rep = double_coset_rep(d, pl, pm);
  }
  SchurElement s(lambda.n(), lambda.r());
  s.add_term({lambda, mu, rep}, 1);
  return s;
}

HeckeElement phi_value(const Weight& lambda, const Weight& mu, const WindowPerm& d) {
  const SchurKey key{lambda, mu, d};
  auto& cache = phi_cache();
  {
    std::lock_guard<std::mutex> g(cache.lock);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }
  HeckeElement h(d.r());
  for (const auto& w : double_coset(d, young_parabolic(lambda), young_parabolic(mu))) h.add_term(w, 1);
  std::lock_guard<std::mutex> g(cache.lock);
  cache.values.emplace(key, h);
  return h;
}

namespace {

// Peel off c * cell(w) for the minimal-length, then smallest, support element w.
template <class Cell, class Accept>
void peel(HeckeElement rest, Cell cell, Accept accept, const char* what) {
  for (int it = 0; !rest.is_zero(); ++it) {
    if (it == kPeelCap) throw std::logic_error(std::string(what) + ": peel did not terminate");
    const WindowPerm* best = nullptr;
    int best_len = 0;
    for (const auto& [w, c] : rest.terms()) {
      const int l = w.length();
      if (best == nullptr || l < best_len) {
        best = &w;
        best_len = l;
      }
    }
    const WindowPerm w = *best;
    const LaurentPoly c = rest.coeff(w);
    HeckeElement sub = cell(w);  // throws when w is not a valid representative
    sub *= c;
    rest -= sub;
    accept(w, c);
  }
}

}  // namespace

SchurElement expand_phi(const Weight& lambda, const Weight& mu, const HeckeElement& value) {
  const ParabolicIndex pl = young_parabolic(lambda), pm = young_parabolic(mu);
  SchurElement out(lambda.n(), lambda.r());
  peel(
      value,
      [&](const WindowPerm& w) {
        if (!is_double_distinguished(w, pl, pm))
          throw std::logic_error("expand_phi: value is not a combination of phi-basis images");
        return phi_value(lambda, mu, w);
      },
      [&](const WindowPerm& w, const LaurentPoly& c) { out.add_term({lambda, mu, w}, c); },
      "expand_phi");
  return out;
}

namespace {

// sum over D_mu intersect W_mu d W_nu of T_{d'}: phi^d_{mu,nu}(x_nu) = x_mu * this.
HeckeElement right_coset_part(const Weight& mu, const Weight& nu, const WindowPerm& d) {
  const ParabolicIndex pm = young_parabolic(mu), pn = young_parabolic(nu);
  HeckeElement h(d.r());
  for (const auto& w : double_coset(d, pm, pn))
    if (is_distinguished(w, pm)) h.add_term(w, 1);
  return h;
}

}  // namespace

SchurElement schur_mul(const SchurElement& a, const SchurElement& b) {
  check_compatible(a.n(), a.r(), b.n(), b.r());
  SchurElement out(a.n(), a.r());
  // group by (lambda, nu) to peel once per block
  std::map<std::pair<Weight, Weight>, HeckeElement> blocks;
  for (const auto& [kb, cb] : b.terms()) {
    const HeckeElement tail = right_coset_part(kb.lambda, kb.mu, kb.d);
    for (const auto& [ka, ca] : a.terms()) {
      if (!(ka.mu == kb.lambda)) continue;
      HeckeElement val = mul(phi_value(ka.lambda, ka.mu, ka.d), tail);
      val *= ca * cb;
      auto key = std::make_pair(ka.lambda, kb.mu);
      auto it = blocks.find(key);
      if (it == blocks.end())
        blocks.emplace(key, std::move(val));
      else
        it->second += val;
    }
  }
  for (const auto& [lm, val] : blocks) out += expand_phi(lm.first, lm.second, val);
  return out;
}

SchurElement schur_identity(int n, int r) {
  SchurElement out(n, r);
  for (const auto& l : all_weights(n, r)) out.add_term({l, l, WindowPerm::identity(r)}, 1);
  return out;
}

SchurElement embed_hecke(const HeckeElement& h, int n) {
  const Weight om = omega(n, h.r());
  SchurElement out(n, h.r());
  for (const auto& [w, c] : h.terms()) out.add_term({om, om, w}, c);
  return out;
}

bool is_finite_type(const SchurElement& e) {
  for (const auto& [k, c] : e.terms()) {
    for (int t = 1; t <= k.d.r(); ++t)
      if (k.d[t] < 1 || k.d[t] > k.d.r()) return false;
  }
  return true;
}

LaurentPoly poincare(const ParabolicIndex& pi) {
  LaurentPoly p;
  const auto dist = length_distribution(pi);
  for (std::size_t k = 0; k < dist.size(); ++k)
    p += LaurentPoly::monomial(2 * static_cast<int>(k), dist[k]);
  return p;
}

SchurElement theta(const Weight& lambda, const Weight& mu, const WindowPerm& d, KLTable& table) {
  const ParabolicIndex pl = young_parabolic(lambda), pm = young_parabolic(mu);
  if (!is_double_distinguished(d, pl, pm))
    throw InvariantError("theta: d must be a distinguished double coset representative");
  const WindowPerm top = longest_double_coset_elt(d, pl, pm);
  const int lead = longest_element(pm).length() - top.length();
  std::set<WindowPerm> reps;
  for (const auto& y : bruhat_interval_below(top)) reps.insert(double_coset_rep(y, pl, pm));
  SchurElement out(lambda.n(), lambda.r());
  for (const auto& z : reps) {
    const WindowPerm zt = longest_double_coset_elt(z, pl, pm);
    if (!bruhat_leq(zt, top)) continue;
    const LaurentPoly p = kl_extended(table, zt, top);
    out.add_term({lambda, mu, z}, p.shifted(lead));
  }
  return out;
}

QTensorElement QTensorElement::basis(const Weight& lambda, const WindowPerm& d, const LaurentPoly& c) {
  QTensorElement x(lambda.n(), lambda.r());
  x.add_term({lambda, d}, c);
  return x;
}

void QTensorElement::add_term(const QTensorKey& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!is_distinguished(k.d, young_parabolic(k.lambda)))
    throw InvariantError("q-tensor key " + k.d.to_string() + " is not distinguished for " +
                         k.lambda.to_string());
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QTensorElement& QTensorElement::operator+=(const QTensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QTensorElement& QTensorElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [k, a] : terms_) a *= c;
  return *this;
}

std::string QTensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*x" << k.lambda.to_string() << "T" << k.d.to_string();
  }
  return os.str();
}

SchurElement as_schur(const QTensorElement& x) {
  const Weight om = omega(x.n(), x.r());
  SchurElement s(x.n(), x.r());
  for (const auto& [k, c] : x.terms()) s.add_term({k.lambda, om, k.d}, c);
  return s;
}

QTensorElement as_qtensor(const SchurElement& s) {
  const Weight om = omega(s.n(), s.r());
  QTensorElement x(s.n(), s.r());
  for (const auto& [k, c] : s.terms()) {
    if (!(k.mu == om)) throw std::invalid_argument("as_qtensor: element is not in the omega column");
    x.add_term({k.lambda, k.d}, c);
  }
  return x;
}

QTensorElement act_schur_left(const SchurElement& s, const QTensorElement& x) {
  return as_qtensor(schur_mul(s, as_schur(x)));
}

QTensorElement act_hecke_right(const QTensorElement& x, const HeckeElement& h) {
  std::map<Weight, HeckeElement> values;
  for (const auto& [k, c] : x.terms()) {
    HeckeElement v = mul(mul(x_lambda(young_parabolic(k.lambda)), t_basis(k.d)), h);
    v *= c;
    auto it = values.find(k.lambda);
    if (it == values.end())
      values.emplace(k.lambda, std::move(v));
    else
      it->second += v;
  }
  QTensorElement out(x.n(), x.r());
  for (const auto& [lambda, v] : values) {
    const ParabolicIndex pl = young_parabolic(lambda);
    const HeckeElement xl = x_lambda(pl);
    peel(
        v,
        [&](const WindowPerm& w) {
          if (!is_distinguished(w, pl))
            throw std::logic_error("act_hecke_right: value left x_lambda H");
          return mul(xl, t_basis(w));
        },
        [&](const WindowPerm& w, const LaurentPoly& c) { out.add_term({lambda, w}, c); },
        "act_hecke_right");
  }
  return out;
}

}  // namespace aqs
