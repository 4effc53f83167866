#pragma once

// Affine Hecke algebra H(W^) in the T-basis over Z[v, v^-1], q = v^2.

#include <map>
#include <string>
#include <vector>

#include "aqs/coeff/laurent.hpp"
#include "aqs/weyl/parabolic.hpp"
#include "aqs/weyl/window_perm.hpp"

namespace aqs {

class HeckeElement {
public:
  using Terms = std::map<WindowPerm, LaurentPoly>;

  explicit HeckeElement(int r) : r_(r) {}
  static HeckeElement basis(const WindowPerm& w, const LaurentPoly& c = 1);
  static HeckeElement one(int r) { return basis(WindowPerm::identity(r)); }

  int r() const { return r_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const WindowPerm& w) const;
  void add_term(const WindowPerm& w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const LaurentPoly& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const LaurentPoly& c) { return a *= c; }
  friend HeckeElement operator*(const LaurentPoly& c, HeckeElement a) { return a *= c; }
  bool operator==(const HeckeElement& o) const { return r_ == o.r_ && terms_ == o.terms_; }

  // Products with generators; i in 1..r, z any integer.
  HeckeElement mul_gen_right(int i) const;
  HeckeElement mul_gen_left(int i) const;
  HeckeElement mul_rho_right(long z) const;
  HeckeElement mul_rho_left(long z) const;

  std::string to_string() const;

private:
  int r_;
  Terms terms_;
};

HeckeElement t_basis(const WindowPerm& w);
HeckeElement mul(const HeckeElement& a, const HeckeElement& b);
inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return mul(a, b); }

// T_{s_i}^{-1} = q^{-1} T_{s_i} + (q^{-1} - 1).
HeckeElement t_gen_inverse(int r, int i);
// (T_w)^{-1} for any w.
HeckeElement t_inverse(const WindowPerm& w);
// Ring involution: v -> v^-1 and T_w -> (T_{w^-1})^{-1}.
HeckeElement bar(const HeckeElement& h);

std::map<WindowPerm, mpz_class> specialize_group_algebra(const HeckeElement& h);

HeckeElement x_lambda(const ParabolicIndex& pi);

}  // namespace aqs
