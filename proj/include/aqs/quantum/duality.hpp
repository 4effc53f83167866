#pragma once

// Checks of the affine Schur-Weyl picture on a finite window of tensor space.

#include <cstdint>

#include "aqs/quantum/operators.hpp"
#include "aqs/verify/report.hpp"

namespace aqs {

struct DualityParams {
  int n = 3;
  int r = 3;
  int len = 3;         // length bound L for tau injectivity and theta keys
  long window = 6;     // |j| <= window for commutation checks
  long rho_bound = 2;  // |rho-power| bound for tau injectivity
  int kappa_samples = 30;
  std::uint64_t seed = 1;
};

SuiteReport verify_affine_duality(const DualityParams& p);

// kappa(phi^e_{lambda,omega}) on e_{key(w)}: exponent of v in the single
// output term, for every finite w.
struct KappaExponent {
  WindowPerm w;
  int exponent;
  int parabolic_length;  // l(w_lambda) in w = w_lambda d
};
std::vector<KappaExponent> kappa_exponents(const Weight& lambda);

}  // namespace aqs
