#pragma once

// The affine q-Schur algebra in the basis phi^d_{lambda,mu}, and q-tensor
// space as the span of x_lambda T_d (identified with phi^d_{lambda,omega}).

#include <map>
#include <string>
#include <vector>

#include "aqs/hecke/hecke_element.hpp"
#include "aqs/hecke/kl.hpp"
#include "aqs/schur/weight.hpp"

namespace aqs {

struct SchurKey {
  Weight lambda;
  Weight mu;
  WindowPerm d;
  auto operator<=>(const SchurKey&) const = default;
  bool operator==(const SchurKey&) const = default;
};

class SchurElement {
public:
  using Terms = std::map<SchurKey, LaurentPoly>;
  SchurElement(int n, int r) : n_(n), r_(r) {}

  int n() const { return n_; }
  int r() const { return r_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const SchurKey& k) const;
  // Key must already be distinguished.
  void add_term(const SchurKey& k, const LaurentPoly& c);

  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  SchurElement& operator*=(const LaurentPoly& c);
  friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
  friend SchurElement operator*(SchurElement a, const LaurentPoly& c) { return a *= c; }
  bool operator==(const SchurElement& o) const {
    return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
  }
  std::string to_string() const;

private:
  int n_, r_;
  Terms terms_;
};

// phi^d_{lambda,mu}.  A non-distinguished d is replaced by its double coset
// representative unless strict is set, in which case it is an error.
SchurElement phi(const Weight& lambda, const Weight& mu, const WindowPerm& d, bool strict = false);
// sum over W_lambda d W_mu of T_w, the image of x_mu.
HeckeElement phi_value(const Weight& lambda, const Weight& mu, const WindowPerm& d);
// Expand a Hecke element of x_lambda H intersect H x_mu in the phi-basis by
// peeling minimal double coset strata.  Throws if the value is not of that form.
SchurElement expand_phi(const Weight& lambda, const Weight& mu, const HeckeElement& value);
// Composite a o b.
SchurElement schur_mul(const SchurElement& a, const SchurElement& b);
// sum_lambda phi^1_{lambda,lambda}
SchurElement schur_identity(int n, int r);

// T_d -> phi^d_{omega,omega}; requires n >= r.
SchurElement embed_hecke(const HeckeElement& h, int n);
bool is_finite_type(const SchurElement& e);

// sum_{w in W_pi} q^{l(w)}
LaurentPoly poincare(const ParabolicIndex& pi);

// theta^d_{lambda,mu} = v^{l(w_0,mu)} sum_z v^{-l(d+)} P_{z+,d+} phi^z_{lambda,mu}
// with z over D_{lambda,mu} such that z+ <= d+.
SchurElement theta(const Weight& lambda, const Weight& mu, const WindowPerm& d, KLTable& table);

struct QTensorKey {
  Weight lambda;
  WindowPerm d;
  auto operator<=>(const QTensorKey&) const = default;
  bool operator==(const QTensorKey&) const = default;
};

class QTensorElement {
public:
  using Terms = std::map<QTensorKey, LaurentPoly>;
  QTensorElement(int n, int r) : n_(n), r_(r) {}
  static QTensorElement basis(const Weight& lambda, const WindowPerm& d, const LaurentPoly& c = 1);

  int n() const { return n_; }
  int r() const { return r_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const QTensorKey& k, const LaurentPoly& c);
  QTensorElement& operator+=(const QTensorElement& o);
  QTensorElement& operator*=(const LaurentPoly& c);
  bool operator==(const QTensorElement& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

private:
  int n_, r_;
  Terms terms_;
};

// x_lambda T_d <-> phi^d_{lambda,omega}
SchurElement as_schur(const QTensorElement& x);
QTensorElement as_qtensor(const SchurElement& s);
QTensorElement act_schur_left(const SchurElement& s, const QTensorElement& x);
QTensorElement act_hecke_right(const QTensorElement& x, const HeckeElement& h);

}  // namespace aqs
