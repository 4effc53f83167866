#pragma once

// Bernstein generators y_i of H(W^) and the basis y^c T_w (c in Z^r,
// w a permutation of 1..r).
//
// y_r := v^{-(r-1)} T_{rho s_1 ... s_{r-1}}, the translation moving class r
// up by r, and y_i := v^2 T_{s_i}^{-1} y_{i+1} T_{s_i}^{-1} for i < r.

#include <map>
#include <utility>
#include <vector>

#include "aqs/hecke/hecke_element.hpp"

namespace aqs {

using YExponent = std::vector<long>;

HeckeElement bernstein_y(int r, int i);
HeckeElement bernstein_y_inverse(int r, int i);
// prod_i y_i^{c_i} in the T-basis.
HeckeElement y_monomial(int r, const YExponent& c);

// Delta(y^c) = (y^c - y^{s_i c}) / (1 - y_i / y_{i+1}) as signed monomials.
std::vector<std::pair<YExponent, int>> divided_difference(const YExponent& c, int i);

struct BernsteinKey {
  YExponent c;
  WindowPerm w;  // finite permutation
  auto operator<=>(const BernsteinKey&) const = default;
  bool operator==(const BernsteinKey&) const = default;
};

class BernsteinElement {
public:
  using Terms = std::map<BernsteinKey, LaurentPoly>;
  explicit BernsteinElement(int r) : r_(r) {}
  static BernsteinElement monomial(const YExponent& c, const WindowPerm& w,
                                   const LaurentPoly& coeff = 1);
  // A Hecke element supported on finite permutations, as y^0 terms.
  static BernsteinElement from_finite(const HeckeElement& h);

  int r() const { return r_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const BernsteinKey& k, const LaurentPoly& c);
  BernsteinElement& operator+=(const BernsteinElement& o);
  BernsteinElement& operator*=(const LaurentPoly& c);
  bool operator==(const BernsteinElement& o) const { return terms_ == o.terms_; }

  BernsteinElement left_mul_sigma(int i) const;  // sigma_i * this, 1 <= i < r
  BernsteinElement left_mul_y(const YExponent& c) const;
  BernsteinElement right_mul_sigma(int i) const;  // this * sigma_i

private:
  int r_;
  Terms terms_;
};

BernsteinElement bernstein_mul(const BernsteinElement& a, const BernsteinElement& b);
BernsteinElement to_bernstein_basis(const HeckeElement& h);
HeckeElement from_bernstein_basis(const BernsteinElement& b);

// T_rho and its inverse in the Bernstein basis.
BernsteinElement bernstein_t_rho(int r, int sign);

}  // namespace aqs
