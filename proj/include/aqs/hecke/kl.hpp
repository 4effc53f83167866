#pragma once

// Kazhdan-Lusztig polynomials P_{y,w} on W, extended to W^ by the
// rho-power delta.  Values are polynomials in q stored as v^2 powers.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "aqs/coeff/laurent.hpp"
#include "aqs/weyl/window_perm.hpp"

namespace aqs {

class KLTable {
public:
  LaurentPoly p(const WindowPerm& y, const WindowPerm& w);
  // Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w} (zero when that is not an integer).
  mpz_class mu(const WindowPerm& y, const WindowPerm& w);
  std::size_t size() const { return memo_.size(); }

private:
  const std::vector<WindowPerm>& interval(const WindowPerm& w);
  LaurentPoly compute(const WindowPerm& y, const WindowPerm& w);

  std::recursive_mutex lock_;
  std::map<std::pair<WindowPerm, WindowPerm>, LaurentPoly> memo_;
  std::map<WindowPerm, std::vector<WindowPerm>> intervals_;
};

// Both arguments in W (rho-power zero).
LaurentPoly kl_polynomial(KLTable& table, const WindowPerm& y, const WindowPerm& w);
// Any arguments in W^: delta on rho-powers times P of the Coxeter parts.
LaurentPoly kl_extended(KLTable& table, const WindowPerm& y, const WindowPerm& w);

}  // namespace aqs
