#include "aqs/quantum/right_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace aqs {

namespace {

void check_index(const TensorVector& x, int i) {
  if (i < 1 || i >= x.r())
    throw InvariantError("sigma index " + std::to_string(i) + " outside 1.." +
                         std::to_string(x.r() - 1));
}

const LaurentPoly& q_minus_one() {
  static const LaurentPoly p = LaurentPoly::q() - 1;
  return p;
}

// finite action on one key, accumulated into out with coefficient c
void finite_key(const TensorKey& j, int i, const LaurentPoly& c, const YExponent& shift, int n,
                TensorVector& out) {
  const long a = j[static_cast<std::size_t>(i - 1)];
  const long b = j[static_cast<std::size_t>(i)];
  if (a == b) {
    out.add_term(shift_key(j, shift, n), c.shifted(2));
    return;
  }
  TensorKey js = j;
  std::swap(js[static_cast<std::size_t>(i - 1)], js[static_cast<std::size_t>(i)]);
  out.add_term(shift_key(js, shift, n), c.shifted(1));
  if (a > b) out.add_term(shift_key(j, shift, n), c * q_minus_one());
}

}  // namespace

TensorVector finite_hecke_right_action(const TensorVector& x, int i) {
  check_index(x, i);
  const YExponent zero(static_cast<std::size_t>(x.r()), 0);
  TensorVector out(x.n(), x.r());
  for (const auto& [j, c] : x.terms()) {
    for (long t : j)
      if (t < 1 || t > x.n())
        throw InvariantError("finite Hecke action needs entries in 1.." + std::to_string(x.n()));
    finite_key(j, i, c, zero, x.n(), out);
  }
  return out;
}

SplitKey split_key(const TensorKey& j, int n) {
  SplitKey s{j, YExponent(j.size(), 0)};
  for (std::size_t t = 0; t < j.size(); ++t) {
    s.k[t] = residue1(j[t], n);
    s.c[t] = (s.k[t] - j[t]) / n;
  }
  return s;
}

TensorVector right_sigma(const TensorVector& x, int i) {
  check_index(x, i);
  const int n = x.n();
  TensorVector out(x.n(), x.r());
  const LaurentPoly& qm = q_minus_one();
  for (const auto& [j, c] : x.terms()) {
    const SplitKey s = split_key(j, n);
    // y^c sigma_i = sigma_i y^{s_i c} + (q - 1) Delta(y^c)
    YExponent sc = s.c;
    std::swap(sc[static_cast<std::size_t>(i - 1)], sc[static_cast<std::size_t>(i)]);
    finite_key(s.k, i, c, sc, n, out);
    const LaurentPoly cq = c * qm;
    for (const auto& [m, sign] : divided_difference(s.c, i))
      out.add_term(shift_key(s.k, m, n), sign > 0 ? cq : -cq);
  }
  return out;
}

TensorVector right_sigma_inverse(const TensorVector& x, int i) {
  // T^{-1} = q^{-1} T + (q^{-1} - 1)
  TensorVector out = right_sigma(x, i) * LaurentPoly::v(-2);
  out += x * (LaurentPoly::v(-2) - 1);
  return out;
}

TensorVector right_y(const TensorVector& x, const YExponent& c) {
  if (static_cast<int>(c.size()) != x.r()) throw InvariantError("y exponent has wrong length");
  TensorVector out(x.n(), x.r());
  for (const auto& [j, co] : x.terms()) out.add_term(shift_key(j, c, x.n()), co);
  return out;
}

TensorVector right_rho(const TensorVector& x, int sign) {
  const int r = x.r();
  YExponent y1(static_cast<std::size_t>(r), 0);
  if (sign == 1) {
    TensorVector y = x;
    for (int i = r - 1; i >= 1; --i) y = right_sigma(y, i);
    y1[0] = 1;
    return right_y(y, y1) * LaurentPoly::v(-(r - 1));
  }
  if (sign == -1) {
    y1[0] = -1;
    TensorVector y = right_y(x, y1);
    for (int i = 1; i <= r - 1; ++i) y = right_sigma_inverse(y, i);
    return y * LaurentPoly::v(r - 1);
  }
  throw std::invalid_argument("right_rho sign must be +-1");
}

TensorVector right_generator(const TensorVector& x, int i) {
  if (i == x.r()) return right_rho(right_sigma(right_rho(x, 1), 1), -1);
  return right_sigma(x, i);
}

TensorVector hecke_right_action(const TensorVector& x, const WindowPerm& w) {
  if (w.r() != x.r()) throw InvariantError("period of Hecke element does not match tensor space");
  const ReducedWord rw = reduced_word(w);
  TensorVector y = x;
  for (long k = 0; k < std::abs(rw.z); ++k) y = right_rho(y, rw.z > 0 ? 1 : -1);
  for (int s : rw.word) y = right_generator(y, s);
  return y;
}

TensorVector hecke_right_action(const TensorVector& x, const HeckeElement& h) {
  TensorVector out(x.n(), x.r());
  for (const auto& [w, c] : h.terms()) out += hecke_right_action(x, w) * c;
  return out;
}

TensorVector right_sigma_letterwise(const TensorVector& x, int i, std::mt19937_64& rng) {
  check_index(x, i);
  const int n = x.n();
  const std::size_t r = static_cast<std::size_t>(x.r());
  const std::size_t a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
  const LaurentPoly& qm = q_minus_one();
  TensorVector out(x.n(), x.r());
  struct Letter1 {
    std::size_t t;
    int e;
  };
  for (const auto& [j, c] : x.terms()) {
    const SplitKey s = split_key(j, n);
    std::vector<Letter1> letters;
    for (std::size_t t = 0; t < r; ++t)
      for (long m = 0; m < std::abs(s.c[t]); ++m) letters.push_back({t, s.c[t] > 0 ? 1 : -1});
    std::shuffle(letters.begin(), letters.end(), rng);
    // prefix sums of the letter word, for the terms that lose sigma
    std::vector<YExponent> prefix(letters.size() + 1, YExponent(r, 0));
    for (std::size_t m = 0; m < letters.size(); ++m) {
      prefix[m + 1] = prefix[m];
      prefix[m + 1][letters[m].t] += letters[m].e;
    }
    // letters[0..m) sigma y^tail, moving sigma left one letter at a time
    YExponent tail(r, 0);
    for (std::size_t m = letters.size(); m > 0; --m) {
      const Letter1 l = letters[m - 1];
      std::size_t moved = l.t;
      int extra_sign = 0;
      std::size_t extra_t = 0;
      if (l.t == a && l.e == 1) {
        moved = b, extra_sign = -1, extra_t = b;  // y_i s = s y_{i+1} - (q-1) y_{i+1}
      } else if (l.t == b && l.e == 1) {
        moved = a, extra_sign = 1, extra_t = b;  // y_{i+1} s = s y_i + (q-1) y_{i+1}
      } else if (l.t == b && l.e == -1) {
        moved = a, extra_sign = -1, extra_t = a;  // y_{i+1}^-1 s = s y_i^-1 - (q-1) y_i^-1
      } else if (l.t == a && l.e == -1) {
        moved = b, extra_sign = 1, extra_t = a;  // y_i^-1 s = s y_{i+1}^-1 + (q-1) y_i^-1
      }
      if (extra_sign != 0) {
        YExponent m2 = prefix[m - 1];
        m2[extra_t] += l.e;
        for (std::size_t t = 0; t < r; ++t) m2[t] += tail[t];
        const LaurentPoly cq = c * qm;
        out.add_term(shift_key(s.k, m2, n), extra_sign > 0 ? cq : -cq);
      }
      tail[moved] += l.e;
    }
    finite_key(s.k, i, c, tail, n, out);
  }
  return out;
}

}  // namespace aqs
