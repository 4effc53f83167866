#pragma once

// Named verification suites run by the command-line tool.

#include <cstdint>
#include <string>
#include <vector>

#include "aqs/quantum/duality.hpp"
#include "aqs/verify/report.hpp"

namespace aqs {

struct SuiteParams {
  int n = 3;
  int r = 3;
  int len = -1;         // suite default when negative
  long window = -1;     // suite default when negative
  long rho_bound = 2;
  std::uint64_t seed = 1;
};

SuiteReport verify_weyl_core(const SuiteParams& p);
SuiteReport verify_hecke_core(const SuiteParams& p);
SuiteReport verify_kl(const SuiteParams& p);
SuiteReport verify_schur_core(const SuiteParams& p);
SuiteReport verify_hopf_suite(const SuiteParams& p);
SuiteReport verify_duality_suite(const SuiteParams& p);

const std::vector<std::string>& suite_names();  // without "all"
// Runs one suite, or every suite for "all".  Throws std::invalid_argument for
// an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteParams& p);

// Dimension of the space of matrices on the finite q-tensor space (keys with
// d a permutation of 1..r) commuting with the finite Schur generators, at a
// random specialisation of v mod p, and the rank of the finite Hecke algebra
// acting on the right.
struct FiniteCommutant {
  std::size_t space_dim = 0;
  std::size_t commutant_dim = 0;
  std::size_t hecke_rank = 0;
  bool hecke_commutes = false;
};
FiniteCommutant finite_commutant(int n, int r, std::uint64_t seed);

}  // namespace aqs
