#pragma once

// Right action of H(W^) on tensor space.  The finite Hecke algebra acts on
// V_n^{(x) r} by the usual formulas; a key j is written j = k - n c with
// 1 <= k_t <= n, so that e_j = e_k . y^c, and T_{s_i} is moved past y^c with
// the Bernstein relations.  T_rho acts as v^{-(r-1)} T_{s_{r-1}} ... T_{s_1} y_1.

#include <random>

#include "aqs/hecke/bernstein.hpp"
#include "aqs/quantum/tensor.hpp"

namespace aqs {

// e_j . T_{s_i} for keys with entries in 1..n:
//   j_i = j_{i+1}: q e_j;  j_i < j_{i+1}: v e_{j s_i};  j_i > j_{i+1}: v e_{j s_i} + (q - 1) e_j.
TensorVector finite_hecke_right_action(const TensorVector& x, int i);

struct SplitKey {
  TensorKey k;     // entries in 1..n
  YExponent c;     // j = k - n c
};
SplitKey split_key(const TensorKey& j, int n);

TensorVector right_sigma(const TensorVector& x, int i);          // x . T_{s_i}, 1 <= i < r
TensorVector right_sigma_inverse(const TensorVector& x, int i);  // x . T_{s_i}^{-1}
TensorVector right_y(const TensorVector& x, const YExponent& c); // x . y^c
TensorVector right_rho(const TensorVector& x, int sign);         // x . T_rho^{+-1}
// x . T_{s_i} for 1 <= i <= r (s_r through rho).
TensorVector right_generator(const TensorVector& x, int i);
TensorVector hecke_right_action(const TensorVector& x, const HeckeElement& h);
TensorVector hecke_right_action(const TensorVector& x, const WindowPerm& w);

// x . T_{s_i} computed by splitting y^c into single letters, shuffled by rng,
// and moving sigma_i past them one at a time.
TensorVector right_sigma_letterwise(const TensorVector& x, int i, std::mt19937_64& rng);

}  // namespace aqs
