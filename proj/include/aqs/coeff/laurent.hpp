#pragma once

// Exact Laurent polynomials in v with integer coefficients.  The Hecke
// parameter q is always stored as v^2.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aqs {

class LaurentPoly {
public:
  struct Term {
    int exp;
    mpz_class coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit constant embedding is intended
  LaurentPoly(const mpz_class& c);  // NOLINT
  LaurentPoly(std::initializer_list<std::pair<int, long>> terms);

  static LaurentPoly monomial(int exp, const mpz_class& c = 1);
  static LaurentPoly v(int exp = 1) { return monomial(exp); }
  static LaurentPoly q(int exp = 1) { return monomial(2 * exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // True when the polynomial is +-v^k for some k.
  bool is_unit() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }

  // Lowest and highest exponents; only meaningful when non-zero.
  int min_exp() const { return terms_.front().exp; }
  int max_exp() const { return terms_.back().exp; }
  mpz_class coeff(int exp) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  // Multiply by v^k in place.
  LaurentPoly& shift(int k);
  LaurentPoly shifted(int k) const;
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  // Total order used only for deterministic containers.
  std::strong_ordering operator<=>(const LaurentPoly& o) const;

  // The ring involution v -> v^{-1}.
  LaurentPoly bar() const;
  // Sum of all coefficients (v = 1).
  mpz_class specialize_v1() const;
  // Value at v = num/den, exact.
  mpq_class evaluate(const mpq_class& at) const;
  // Value modulo a prime p at v = x (x invertible mod p).
  unsigned long long evaluate_mod(unsigned long long x, unsigned long long p) const;

  // Exact division; nullopt when the divisor does not divide this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;
  // Terms with exponent >= 0 (used by the C'-basis normalisation).
  LaurentPoly nonnegative_part() const;

  // Polynomial in q = v^2: true iff all exponents are even and >= 0.
  bool is_q_polynomial() const;
  // Degree in q of a q-polynomial (max_exp / 2).
  int q_degree() const { return max_exp() / 2; }

  std::string to_string() const;

private:
  void normalize();
  std::vector<Term> terms_;  // strictly increasing exp, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace aqs
