#include "aqs/util/modrank.hpp"

#include <stdexcept>

namespace aqs::modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  std::uint64_t r = 1, e = kPrime - 2;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool RankAccumulator::add_row(std::vector<std::uint64_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint64_t c = row[pivots_[k]];
    if (c == 0) continue;
    const auto& pr = rows_[k];
    for (std::size_t j = pivots_[k]; j < cols_; ++j)
      if (pr[j]) row[j] = sub(row[j], mul(c, pr[j]));
  }
  std::size_t p = 0;
  while (p < cols_ && row[p] == 0) ++p;
  if (p == cols_) return false;
  const std::uint64_t s = inv(row[p]);
  for (std::size_t j = p; j < cols_; ++j) row[j] = mul(row[j], s);
  // keep rows fully reduced against the new pivot so elimination stays one pass
  for (auto& other : rows_) {
    const std::uint64_t c = other[p];
    if (c == 0) continue;
    for (std::size_t j = p; j < cols_; ++j)
      if (row[j]) other[j] = sub(other[j], mul(c, row[j]));
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

std::uint64_t random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(2, kPrime - 2);
  return d(rng);
}

std::vector<std::uint64_t> evaluate_row(const std::vector<LaurentPoly>& row, std::uint64_t at) {
  std::vector<std::uint64_t> out;
  out.reserve(row.size());
  for (const auto& c : row) out.push_back(c.evaluate_mod(at, kPrime));
  return out;
}

std::size_t rank(const std::vector<std::vector<LaurentPoly>>& rows, std::uint64_t at) {
  if (rows.empty()) return 0;
  RankAccumulator acc(rows.front().size());
  for (const auto& r : rows) acc.add_row(evaluate_row(r, at));
  return acc.rank();
}

std::size_t nullity(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
  RankAccumulator acc(cols);
  for (const auto& r : rows) acc.add_row(r);
  return cols - acc.rank();
}

}  // namespace aqs::modp
