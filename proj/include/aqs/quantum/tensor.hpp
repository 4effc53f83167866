#pragma once

// Tensor space V^{(x) r} with basis e_{j_1} (x) ... (x) e_{j_r}, j_t in Z, and
// the action of U(gl_n^) through the iterated coproduct.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqs/quantum/uelement.hpp"
#include "aqs/schur/weight.hpp"

namespace aqs {

using TensorKey = std::vector<long>;

class TensorVector {
public:
  using Terms = std::map<TensorKey, LaurentPoly>;
  TensorVector(int n, int r);
  static TensorVector basis(int n, const TensorKey& key, const LaurentPoly& c = 1);

  int n() const { return n_; }
  int r() const { return r_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const TensorKey& k) const;

  void add_term(const TensorKey& k, const LaurentPoly& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const LaurentPoly& c);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(TensorVector a, const LaurentPoly& c) { return a *= c; }
  friend TensorVector operator*(const LaurentPoly& c, TensorVector a) { return a *= c; }
  bool operator==(const TensorVector& o) const {
    return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
  }

  std::string to_string() const;

private:
  int n_, r_;
  Terms terms_;
};

// A generator on V: e_t -> v^exp e_t', or zero.
struct VImage {
  long t;
  int exp;
};
std::optional<VImage> act_V(const Letter& g, long t, int n);

TensorVector act_letter(const Letter& g, const TensorVector& x);
TensorVector act_word(const GeneratorWord& w, const TensorVector& x);
TensorVector act_tensor(const UElement& u, const TensorVector& x);

// Residue counts mod n.
Weight weight_of(const TensorKey& key, int n);
TensorVector project_weight(const TensorVector& x, const Weight& lambda);

// Linear endomorphism given on basis keys.
using TensorOperator = std::function<TensorVector(const TensorKey&)>;
TensorVector apply(const TensorOperator& op, const TensorVector& x);

// y_t^{sign}: shifts position t by -n (sign = 1) or +n (sign = -1).
TensorOperator y_op(int n, int t, int sign = 1);
// Shift every position t by -n * c_t, i.e. the monomial prod y_t^{c_t}.
TensorKey shift_key(const TensorKey& key, const std::vector<long>& c, int n);

// All keys with entries in [lo, hi].
std::vector<TensorKey> window_keys(int r, long lo, long hi);

}  // namespace aqs
