#pragma once

// Hopf algebra identities of U(gl_n^) checked as operator identities on
// basis vectors of V^{(x) k}, k <= r_max, with entries in [-window, window].

#include <vector>

#include "aqs/quantum/tensor.hpp"
#include "aqs/verify/report.hpp"

namespace aqs {

struct RelationInstance {
  int number;  // 1..14
  std::string label;
  UElement lhs;
  UElement rhs;
};
// All instances of the defining relations for this n (n >= 3).  Relation (5)
// is multiplied through by v - v^{-1}.
std::vector<RelationInstance> defining_relations(int n);

// Delta applied twice, bracketed left or right: terms c * a (x) b (x) c.
struct TripleTerm {
  LaurentPoly coeff;
  GeneratorWord a, b, c;
};
std::vector<TripleTerm> coproduct_left(const UElement& u);   // (Delta (x) 1) Delta
std::vector<TripleTerm> coproduct_right(const UElement& u);  // (1 (x) Delta) Delta

SuiteReport verify_hopf(int n, int r_max, long window);

}  // namespace aqs
