#pragma once

// Finite parabolic subgroups W_pi (optionally shifted by t) together with
// distinguished coset and double coset representatives.

#include <utility>
#include <vector>

#include "aqs/weyl/window_perm.hpp"

namespace aqs {

class ParabolicIndex {
public:
  // members: generator indices in 1..r, a proper subset.  The shifted
  // subgroup is generated by s_{i + shift} (indices mod r).
  ParabolicIndex(int r, std::vector<int> members, long shift = 0);

  int r() const { return r_; }
  const std::vector<int>& members() const& { return members_; }
  std::vector<int> members() && { return std::move(members_); }
  long shift() const { return shift_; }
  // Actual generator indices after the shift, sorted.
  const std::vector<int>& generators() const& { return gens_; }
  std::vector<int> generators() && { return std::move(gens_); }
  bool contains(int i) const;

private:
  int r_;
  std::vector<int> members_;
  long shift_;
  std::vector<int> gens_;
};

std::vector<WindowPerm> parabolic_elements(const ParabolicIndex& pi);
WindowPerm longest_element(const ParabolicIndex& pi);
// Poincare polynomial sum_{w in W_pi} q^{l(w)}, returned as exponents of q
// with multiplicities: entry k counts elements of length k.
std::vector<long> length_distribution(const ParabolicIndex& pi);

// w = first * second, first in W_pi, second distinguished.
std::pair<WindowPerm, WindowPerm> coset_decompose(const WindowPerm& w, const ParabolicIndex& pi);
// (t)w < (t+1)w for every generator t of pi.
bool is_distinguished(const WindowPerm& w, const ParabolicIndex& pi);
// w^{-1} distinguished, i.e. no right descents in pi.
bool is_distinguished_right(const WindowPerm& w, const ParabolicIndex& pi);

WindowPerm double_coset_rep(const WindowPerm& w, const ParabolicIndex& left,
                            const ParabolicIndex& right);
bool is_double_distinguished(const WindowPerm& w, const ParabolicIndex& left,
                             const ParabolicIndex& right);
// Every element of W_left d W_right, without duplicates.
std::vector<WindowPerm> double_coset(const WindowPerm& d, const ParabolicIndex& left,
                                     const ParabolicIndex& right);
WindowPerm longest_double_coset_elt(const WindowPerm& d, const ParabolicIndex& left,
                                    const ParabolicIndex& right);

}  // namespace aqs
