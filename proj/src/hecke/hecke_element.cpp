#include "aqs/hecke/hecke_element.hpp"

#include <sstream>
#include <stdexcept>

namespace aqs {

namespace {

void check_same(int a, int b) {
  if (a != b) throw std::invalid_argument("period mismatch between Hecke elements");
}

}  // namespace

HeckeElement HeckeElement::basis(const WindowPerm& w, const LaurentPoly& c) {
  HeckeElement h(w.r());
  h.add_term(w, c);
  return h;
}

HeckeElement t_basis(const WindowPerm& w) { return HeckeElement::basis(w); }

LaurentPoly HeckeElement::coeff(const WindowPerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElement::add_term(const WindowPerm& w, const LaurentPoly& c) {
  check_same(r_, w.r());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  check_same(r_, o.r_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  check_same(r_, o.r_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, a] : terms_) a *= c;
  return *this;
}

HeckeElement HeckeElement::mul_gen_right(int i) const {
  const WindowPerm s = WindowPerm::gen_s(r_, i);
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = q - 1;
  HeckeElement out(r_);
  for (const auto& [w, c] : terms_) {
    if (w.is_right_descent(i)) {
      out.add_term(w * s, c * q);
      out.add_term(w, c * qm1);
    } else {
      out.add_term(w * s, c);
    }
  }
  return out;
}

HeckeElement HeckeElement::mul_gen_left(int i) const {
  const WindowPerm s = WindowPerm::gen_s(r_, i);
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = q - 1;
  HeckeElement out(r_);
  for (const auto& [w, c] : terms_) {
    if (w.is_left_descent(i)) {
      out.add_term(s * w, c * q);
      out.add_term(w, c * qm1);
    } else {
      out.add_term(s * w, c);
    }
  }
  return out;
}

HeckeElement HeckeElement::mul_rho_right(long z) const {
  const WindowPerm p = WindowPerm::gen_rho(r_, z);
  HeckeElement out(r_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w * p, c);
  return out;
}

HeckeElement HeckeElement::mul_rho_left(long z) const {
  const WindowPerm p = WindowPerm::gen_rho(r_, z);
  HeckeElement out(r_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(p * w, c);
  return out;
}

HeckeElement mul(const HeckeElement& a, const HeckeElement& b) {
  check_same(a.r(), b.r());
  HeckeElement out(a.r());
  for (const auto& [w, c] : b.terms()) {
    const ReducedWord rw = reduced_word(w);
    HeckeElement part = a.mul_rho_right(rw.z);
    for (int i : rw.word) part = part.mul_gen_right(i);
    part *= c;
    out += part;
  }
  return out;
}

HeckeElement t_gen_inverse(int r, int i) {
  HeckeElement h = HeckeElement::basis(WindowPerm::gen_s(r, i), LaurentPoly::q(-1));
  h.add_term(WindowPerm::identity(r), LaurentPoly::q(-1) - 1);
  return h;
}

HeckeElement t_inverse(const WindowPerm& w) {
  // T_w = T_rho^z T_{i1} ... T_{im}, so T_w^{-1} = T_{im}^{-1} ... T_{i1}^{-1} T_rho^{-z}.
  const ReducedWord rw = reduced_word(w);
  HeckeElement out = HeckeElement::one(w.r());
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it)
    out = mul(out, t_gen_inverse(w.r(), *it));
  return out.mul_rho_right(-rw.z);
}

HeckeElement bar(const HeckeElement& h) {
  HeckeElement out(h.r());
  for (const auto& [w, c] : h.terms()) {
    HeckeElement t = t_inverse(w.inverse());
    t *= c.bar();
    out += t;
  }
  return out;
}

std::map<WindowPerm, mpz_class> specialize_group_algebra(const HeckeElement& h) {
  std::map<WindowPerm, mpz_class> out;
  for (const auto& [w, c] : h.terms()) {
    mpz_class s = c.specialize_v1();
    if (s != 0) out.emplace(w, s);
  }
  return out;
}

HeckeElement x_lambda(const ParabolicIndex& pi) {
  HeckeElement out(pi.r());
  for (const auto& w : parabolic_elements(pi)) out.add_term(w, 1);
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*T" << w.to_string();
  }
  return os.str();
}

}  // namespace aqs
