#pragma once

// Rank of Laurent-polynomial matrices, computed modulo a large prime after
// substituting v by a random unit.  A rank found this way never exceeds the
// true rank over Q(v); equality holds for all but finitely many choices.

#include <cstdint>
#include <random>
#include <vector>

#include "aqs/coeff/laurent.hpp"

namespace aqs::modp {

inline constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t inv(std::uint64_t a);

// Incremental row echelon form over F_p.
class RankAccumulator {
public:
  explicit RankAccumulator(std::size_t cols) : cols_(cols) {}
  // Returns true when the row is independent of those added before.
  bool add_row(std::vector<std::uint64_t> row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

private:
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

// A random evaluation point in [2, p-2].
std::uint64_t random_point(std::mt19937_64& rng);

std::vector<std::uint64_t> evaluate_row(const std::vector<LaurentPoly>& row, std::uint64_t at);

std::size_t rank(const std::vector<std::vector<LaurentPoly>>& rows, std::uint64_t at);

// Dimension of the null space {x : M x = 0} for a matrix given by rows.
std::size_t nullity(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols);

}  // namespace aqs::modp
