#pragma once

// tau: H(W^) acting on V_omega through U; kappa: the affine q-Schur algebra
// acting on tensor space; Theta: q-tensor space -> tensor space.

#include "aqs/quantum/right_action.hpp"
#include "aqs/schur/schur_element.hpp"

namespace aqs {

// e_{(1)w^-1} (x) ... (x) e_{(r)w^-1} for a finite permutation w.
TensorKey key_of(const WindowPerm& w);
// e_omega = e_1 (x) ... (x) e_r
TensorKey omega_key(int r);

// v F_i E_i - 1 (1 <= i <= r), E_r ... E_{n-1} R^-1 (sign 1), F_n ... F_{r+1} R (sign -1).
UElement tau_generator(int n, int r, int i);
UElement tau_rho(int n, int r, int sign);
// tau(T_{s_i}) on x.  For i = r and n > r the element v F_r E_r - 1 acts as -1
// on V_omega, so tau(T_rho) tau(T_{s_1}) tau(T_rho^{-1}) is used instead.
TensorVector tau_generator_apply(int i, const TensorVector& x);
// tau(T_w) composed from the generator images; x is first projected to V_omega.
TensorVector tau_apply(const WindowPerm& w, const TensorVector& x);
TensorVector tau_apply(const HeckeElement& h, const TensorVector& x);

// kappa(phi^e_{lambda,omega}) on V_omega and kappa(phi^e_{omega,mu}) on V_mu;
// each is zero on the other weight spaces.
TensorVector kappa_lambda_omega(const Weight& lambda, const TensorVector& x);
TensorVector kappa_omega_mu(const Weight& mu, const TensorVector& x);
// kappa(phi^d_{lambda,mu}) = P_nu^{-1} kappa(phi_{lambda,omega}) tau(T_d) kappa(phi_{omega,mu}).
TensorVector kappa_apply(const SchurElement& s, const TensorVector& x);
TensorOperator kappa_op(const SchurElement& s);

// x_lambda T_d -> e_{l(lambda)} . T_d
TensorVector theta_iso(const QTensorElement& x);
QTensorElement theta_iso_inverse(const TensorVector& x);

}  // namespace aqs
