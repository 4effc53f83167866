#pragma once

// Compositions of r into n parts and their Young parabolics.

#include <compare>
#include <string>
#include <vector>

#include "aqs/weyl/parabolic.hpp"

namespace aqs {

class Weight {
public:
  explicit Weight(std::vector<int> parts);

  int n() const { return static_cast<int>(parts_.size()); }
  int r() const { return r_; }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

  bool operator==(const Weight& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Weight& o) const { return parts_ <=> o.parts_; }
  std::string to_string() const;

private:
  std::vector<int> parts_;
  int r_ = 0;
};

// All compositions of r into n parts, in lexicographically decreasing order.
std::vector<Weight> all_weights(int n, int r);
// (1^r, 0^{n-r}); requires n >= r.
Weight omega(int n, int r);
// Generators s_i with i, i+1 in the same block (never s_r).
ParabolicIndex young_parabolic(const Weight& lambda);
// The tensor index l(lambda) = (1^{lambda_1}, 2^{lambda_2}, ...).
std::vector<long> ell_key(const Weight& lambda);
// Block of position t (1-based) in l(lambda).
int block_of(const Weight& lambda, int t);

}  // namespace aqs
