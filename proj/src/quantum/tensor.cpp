#include "aqs/quantum/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace aqs {

namespace {

bool congruent(long a, long b, int n) { return residue1(a, n) == residue1(b, n); }

}  // namespace

TensorVector::TensorVector(int n, int r) : n_(n), r_(r) {
  if (n < 1) throw InvariantError("n must be positive");
  if (r < 1) throw InvariantError("r must be positive");
}

TensorVector TensorVector::basis(int n, const TensorKey& key, const LaurentPoly& c) {
  TensorVector x(n, static_cast<int>(key.size()));
  x.add_term(key, c);
  return x;
}

LaurentPoly TensorVector::coeff(const TensorKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void TensorVector::add_term(const TensorKey& k, const LaurentPoly& c) {
  if (static_cast<int>(k.size()) != r_)
    throw InvariantError("tensor key has " + std::to_string(k.size()) + " entries, expected " +
                         std::to_string(r_));
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

std::string TensorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c << ")*e(";
    for (std::size_t t = 0; t < k.size(); ++t) os << (t ? "," : "") << k[t];
    os << ")";
    first = false;
  }
  return os.str();
}

std::optional<VImage> act_V(const Letter& g, long t, int n) {
  switch (g.g) {
    case Gen::E:
      if (congruent(t - 1, g.i, n)) return VImage{t - 1, 0};
      return std::nullopt;
    case Gen::F:
      if (congruent(t, g.i, n)) return VImage{t + 1, 0};
      return std::nullopt;
    case Gen::K: return VImage{t, congruent(t, g.i, n) ? 1 : 0};
    case Gen::Kinv: return VImage{t, congruent(t, g.i, n) ? -1 : 0};
    case Gen::R: return VImage{t + 1, 0};
    case Gen::Rinv: return VImage{t - 1, 0};
  }
  return std::nullopt;
}

TensorVector act_letter(const Letter& g, const TensorVector& x) {
  const int n = x.n();
  const int r = x.r();
  TensorVector out(n, r);
  const int i = g.i;
  const int i1 = i % n + 1;
  for (const auto& [key, c] : x.terms()) {
    switch (g.g) {
      case Gen::E: {
        // sum_t 1 (x) ... (x) E_i (x) K_i K_{i+1}^{-1} (x) ...
        int tail = 0;
        for (int t = r - 1; t >= 0; --t) {
          const long j = key[static_cast<std::size_t>(t)];
          if (congruent(j - 1, i, n)) {
            TensorKey k = key;
            k[static_cast<std::size_t>(t)] = j - 1;
            out.add_term(k, c.shifted(tail));
          }
          tail += (congruent(j, i, n) ? 1 : 0) - (congruent(j, i1, n) ? 1 : 0);
        }
        break;
      }
      case Gen::F: {
        // sum_t K_i^{-1} K_{i+1} (x) ... (x) F_i (x) 1 (x) ...
        int head = 0;
        for (int t = 0; t < r; ++t) {
          const long j = key[static_cast<std::size_t>(t)];
          if (congruent(j, i, n)) {
            TensorKey k = key;
            k[static_cast<std::size_t>(t)] = j + 1;
            out.add_term(k, c.shifted(head));
          }
          head += (congruent(j, i1, n) ? 1 : 0) - (congruent(j, i, n) ? 1 : 0);
        }
        break;
      }
      default: {
        TensorKey k = key;
        int e = 0;
        for (auto& j : k) {
          const auto im = act_V(g, j, n);
          j = im->t;
          e += im->exp;
        }
        out.add_term(k, c.shifted(e));
      }
    }
  }
  return out;
}

TensorVector act_word(const GeneratorWord& w, const TensorVector& x) {
  TensorVector y = x;
  for (auto it = w.rbegin(); it != w.rend() && !y.is_zero(); ++it) y = act_letter(*it, y);
  return y;
}

TensorVector act_tensor(const UElement& u, const TensorVector& x) {
  if (u.n() != x.n()) throw std::invalid_argument("rank mismatch between U and tensor space");
  TensorVector out(x.n(), x.r());
  for (const auto& [w, c] : u.terms()) out += act_word(w, x) * c;
  return out;
}

Weight weight_of(const TensorKey& key, int n) {
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (long j : key) ++parts[static_cast<std::size_t>(residue1(j, n) - 1)];
  return Weight(std::move(parts));
}

TensorVector project_weight(const TensorVector& x, const Weight& lambda) {
  if (lambda.n() != x.n() || lambda.r() != x.r())
    throw InvariantError("weight " + lambda.to_string() + " does not match tensor space");
  TensorVector out(x.n(), x.r());
  for (const auto& [k, c] : x.terms())
    if (weight_of(k, x.n()) == lambda) out.add_term(k, c);
  return out;
}

TensorVector apply(const TensorOperator& op, const TensorVector& x) {
  TensorVector out(x.n(), x.r());
  for (const auto& [k, c] : x.terms()) out += op(k) * c;
  return out;
}

TensorOperator y_op(int n, int t, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("y_op sign must be +-1");
  return [n, t, sign](const TensorKey& key) {
    if (t < 1 || t > static_cast<int>(key.size()))
      throw InvariantError("y index " + std::to_string(t) + " out of range");
    TensorKey k = key;
    k[static_cast<std::size_t>(t - 1)] -= sign * n;
    return TensorVector::basis(n, k);
  };
}

TensorKey shift_key(const TensorKey& key, const std::vector<long>& c, int n) {
  TensorKey k = key;
  for (std::size_t t = 0; t < k.size(); ++t) k[t] -= static_cast<long>(n) * c[t];
  return k;
}

std::vector<TensorKey> window_keys(int r, long lo, long hi) {
  std::vector<TensorKey> out;
  TensorKey k(static_cast<std::size_t>(r), lo);
  if (hi < lo) return out;
  while (true) {
    out.push_back(k);
    int t = r - 1;
    while (t >= 0 && k[static_cast<std::size_t>(t)] == hi) k[static_cast<std::size_t>(t--)] = lo;
    if (t < 0) break;
    ++k[static_cast<std::size_t>(t)];
  }
  return out;
}

}  // namespace aqs
