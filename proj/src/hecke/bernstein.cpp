#include "aqs/hecke/bernstein.hpp"

#include <mutex>
#include <stdexcept>

namespace aqs {

namespace {

WindowPerm z_r(int r) {
  std::vector<long> win;
  for (int t = 1; t < r; ++t) win.push_back(t);
  win.push_back(2L * r);
  return WindowPerm(r, win);
}

// f = s_{r-1} ... s_1
WindowPerm rho_finite_part(int r) {
  std::vector<int> word;
  for (int i = r - 1; i >= 1; --i) word.push_back(i);
  return from_word(r, 0, word);
}

struct YCache {
  std::mutex lock;
  std::map<std::pair<int, int>, HeckeElement> pos, neg;
};

YCache& y_cache() {
  static YCache cache;
  return cache;
}

void check_index(int r, int i) {
  if (i < 1 || i > r) throw std::out_of_range("Bernstein index out of range: " + std::to_string(i));
}

}  // namespace

HeckeElement bernstein_y(int r, int i) {
  check_index(r, i);
  auto& cache = y_cache();
  {
    std::lock_guard<std::mutex> g(cache.lock);
    if (auto it = cache.pos.find({r, i}); it != cache.pos.end()) return it->second;
  }
  HeckeElement y = HeckeElement::basis(z_r(r), LaurentPoly::v(-(r - 1)));
  for (int k = r - 1; k >= i; --k) {
    y = mul(mul(t_gen_inverse(r, k), y), t_gen_inverse(r, k));
    y *= LaurentPoly::v(2);
  }
  std::lock_guard<std::mutex> g(cache.lock);
  cache.pos.emplace(std::make_pair(r, i), y);
  return y;
}

HeckeElement bernstein_y_inverse(int r, int i) {
  check_index(r, i);
  auto& cache = y_cache();
  {
    std::lock_guard<std::mutex> g(cache.lock);
    if (auto it = cache.neg.find({r, i}); it != cache.neg.end()) return it->second;
  }
  HeckeElement y = t_inverse(z_r(r)) * LaurentPoly::v(r - 1);
  for (int k = r - 1; k >= i; --k) {
    const HeckeElement s = t_basis(WindowPerm::gen_s(r, k));
    y = mul(mul(s, y), s);
    y *= LaurentPoly::v(-2);
  }
  std::lock_guard<std::mutex> g(cache.lock);
  cache.neg.emplace(std::make_pair(r, i), y);
  return y;
}

HeckeElement y_monomial(int r, const YExponent& c) {
  if (static_cast<int>(c.size()) != r) throw std::invalid_argument("y exponent has wrong length");
  HeckeElement out = HeckeElement::one(r);
  for (int i = 1; i <= r; ++i) {
    const long e = c[static_cast<std::size_t>(i - 1)];
    if (e == 0) continue;
    const HeckeElement f = e > 0 ? bernstein_y(r, i) : bernstein_y_inverse(r, i);
    for (long k = 0; k < std::abs(e); ++k) out = mul(out, f);
  }
  return out;
}

std::vector<std::pair<YExponent, int>> divided_difference(const YExponent& c, int i) {
  // On u^a w^b with u = y_i, w = y_{i+1}:
  //   a > b: -sum_{j=0}^{a-b-1} u^{b+j} w^{a-j}
  //   a < b:  sum_{j=0}^{b-a-1} u^{a+j} w^{b-j}
  std::vector<std::pair<YExponent, int>> out;
  const auto ia = static_cast<std::size_t>(i - 1);
  const auto ib = static_cast<std::size_t>(i);
  const long a = c[ia];
  const long b = c[ib];
  if (a == b) return out;
  const long lo = std::min(a, b);
  const long hi = std::max(a, b);
  const int sign = a > b ? -1 : 1;
  for (long j = 0; j < hi - lo; ++j) {
    YExponent m = c;
    m[ia] = lo + j;
    m[ib] = hi - j;
    out.emplace_back(std::move(m), sign);
  }
  return out;
}

BernsteinElement BernsteinElement::monomial(const YExponent& c, const WindowPerm& w,
                                            const LaurentPoly& coeff) {
  BernsteinElement b(w.r());
  b.add_term({c, w}, coeff);
  return b;
}

BernsteinElement BernsteinElement::from_finite(const HeckeElement& h) {
  BernsteinElement b(h.r());
  const YExponent zero(static_cast<std::size_t>(h.r()), 0);
  for (const auto& [w, c] : h.terms()) {
    for (long t : semidirect_decompose(w).translation)
      if (t != 0) throw std::invalid_argument("from_finite: element is not a finite permutation");
    b.add_term({zero, w}, c);
  }
  return b;
}

void BernsteinElement::add_term(const BernsteinKey& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BernsteinElement& BernsteinElement::operator+=(const BernsteinElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BernsteinElement& BernsteinElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, a] : terms_) a *= c;
  return *this;
}

BernsteinElement BernsteinElement::left_mul_sigma(int i) const {
  // sigma_i y^c = y^{s_i c} sigma_i + (v^2 - 1) Delta(y^c)
  if (i < 1 || i >= r_) throw std::out_of_range("sigma index must lie in 1..r-1");
  const LaurentPoly qm1 = LaurentPoly::q() - 1;
  BernsteinElement out(r_);
  for (const auto& [k, coef] : terms_) {
    YExponent sc = k.c;
    std::swap(sc[static_cast<std::size_t>(i - 1)], sc[static_cast<std::size_t>(i)]);
    const HeckeElement st = HeckeElement::basis(k.w).mul_gen_left(i);
    for (const auto& [w, a] : st.terms()) out.add_term({sc, w}, a * coef);
    for (const auto& [m, sign] : divided_difference(k.c, i))
      out.add_term({m, k.w}, qm1 * coef * LaurentPoly(sign));
  }
  return out;
}

BernsteinElement BernsteinElement::left_mul_y(const YExponent& c) const {
  BernsteinElement out(r_);
  for (const auto& [k, coef] : terms_) {
    YExponent m = k.c;
    for (std::size_t t = 0; t < m.size(); ++t) m[t] += c[t];
    out.add_term({m, k.w}, coef);
  }
  return out;
}

BernsteinElement BernsteinElement::right_mul_sigma(int i) const {
  if (i < 1 || i >= r_) throw std::out_of_range("sigma index must lie in 1..r-1");
  BernsteinElement out(r_);
  for (const auto& [k, coef] : terms_) {
    const HeckeElement t = HeckeElement::basis(k.w).mul_gen_right(i);
    for (const auto& [w, a] : t.terms()) out.add_term({k.c, w}, a * coef);
  }
  return out;
}

BernsteinElement bernstein_mul(const BernsteinElement& a, const BernsteinElement& b) {
  if (a.r() != b.r()) throw std::invalid_argument("period mismatch in Bernstein product");
  BernsteinElement out(a.r());
  for (const auto& [k, coef] : a.terms()) {
    const ReducedWord rw = reduced_word(k.w);
    BernsteinElement part = b;
    for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) part = part.left_mul_sigma(*it);
    part = part.left_mul_y(k.c);
    part *= coef;
    out += part;
  }
  return out;
}

BernsteinElement bernstein_t_rho(int r, int sign) {
  const YExponent zero(static_cast<std::size_t>(r), 0);
  YExponent e1 = zero;
  const WindowPerm f = rho_finite_part(r);
  if (sign > 0) {
    // T_rho = v^{-(r-1)} T_f y_1
    e1[0] = 1;
    BernsteinElement out = bernstein_mul(BernsteinElement::monomial(zero, f),
                                         BernsteinElement::monomial(e1, WindowPerm::identity(r)));
    out *= LaurentPoly::v(-(r - 1));
    return out;
  }
  // T_rho^{-1} = v^{r-1} y_1^{-1} T_f^{-1}
  e1[0] = -1;
  BernsteinElement out = BernsteinElement::from_finite(t_inverse(f)).left_mul_y(e1);
  out *= LaurentPoly::v(r - 1);
  return out;
}

BernsteinElement to_bernstein_basis(const HeckeElement& h) {
  const int r = h.r();
  const BernsteinElement rho_pos = bernstein_t_rho(r, 1);
  const BernsteinElement rho_neg = bernstein_t_rho(r, -1);
  BernsteinElement out(r);
  for (const auto& [w, coef] : h.terms()) {
    const ReducedWord rw = reduced_word(w);
    BernsteinElement x = BernsteinElement::monomial(YExponent(static_cast<std::size_t>(r), 0),
                                                    WindowPerm::identity(r));
    for (long k = 0; k < std::abs(rw.z); ++k) x = bernstein_mul(x, rw.z > 0 ? rho_pos : rho_neg);
    for (int i : rw.word) {
      if (i < r) {
        x = x.right_mul_sigma(i);
      } else {
        // T_{s_r} = T_rho T_{s_1} T_rho^{-1}
        x = bernstein_mul(bernstein_mul(x, rho_pos).right_mul_sigma(1), rho_neg);
      }
    }
    x *= coef;
    out += x;
  }
  return out;
}

HeckeElement from_bernstein_basis(const BernsteinElement& b) {
  HeckeElement out(b.r());
  for (const auto& [k, coef] : b.terms()) {
    HeckeElement t = mul(y_monomial(b.r(), k.c), t_basis(k.w));
    t *= coef;
    out += t;
  }
  return out;
}

}  // namespace aqs
