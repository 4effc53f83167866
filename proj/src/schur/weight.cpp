#include "aqs/schur/weight.hpp"

#include <numeric>
#include <sstream>

namespace aqs {

Weight::Weight(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvariantError("weight needs at least one part");
  for (int p : parts_)
    if (p < 0) throw InvariantError("weight parts must be non-negative");
  r_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {

void compositions(int n, int r, std::vector<int>& cur, std::vector<Weight>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(r);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = r; k >= 0; --k) {
    cur.push_back(k);
    compositions(n, r - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Weight> all_weights(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("all_weights: bad parameters");
  std::vector<Weight> out;
  std::vector<int> cur;
  compositions(n, r, cur, out);
  return out;
}

Weight omega(int n, int r) {
  if (n < r)
    throw InvariantError("omega(" + std::to_string(n) + "," + std::to_string(r) +
                         ") needs n >= r");
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < r; ++i) parts[static_cast<std::size_t>(i)] = 1;
  return Weight(parts);
}

ParabolicIndex young_parabolic(const Weight& lambda) {
  std::vector<int> members;
  int pos = 0;
  for (int p : lambda.parts()) {
    for (int k = 1; k < p; ++k) members.push_back(pos + k);
    pos += p;
  }
  return ParabolicIndex(lambda.r(), members);
}

std::vector<long> ell_key(const Weight& lambda) {
  std::vector<long> key;
  for (int i = 1; i <= lambda.n(); ++i)
    for (int k = 0; k < lambda[i]; ++k) key.push_back(i);
  return key;
}

int block_of(const Weight& lambda, int t) {
  int pos = 0;
  for (int i = 1; i <= lambda.n(); ++i) {
    pos += lambda[i];
    if (t <= pos) return i;
  }
  throw std::out_of_range("position beyond the weight");
}

}  // namespace aqs
