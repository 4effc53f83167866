#pragma once

// Extended affine Weyl group of period r as periodic permutations of Z in
// window notation.  Permutations act on the right: (t)(uw) = ((t)u)w.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqs {

inline constexpr int kMaxPeriod = 10;

// Floor division and residue in 1..m, used throughout for index classes.
inline long floor_div(long a, long m) {
  long q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}
inline long residue1(long t, long m) { return t - m * floor_div(t - 1, m); }

class InvariantError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class WindowPerm {
public:
  // Validates the window (complete residue system mod r) and r >= 3.
  WindowPerm(int r, std::span<const long> window);
  WindowPerm(int r, std::initializer_list<long> window)
      : WindowPerm(r, std::span<const long>(window.begin(), window.size())) {}

  static WindowPerm identity(int r);
  // The simple reflection s_i, 1 <= i <= r.
  static WindowPerm gen_s(int r, int i);
  // rho^z: t -> t + z.
  static WindowPerm gen_rho(int r, long z);
  // Translation adding r * shift[i] to every t in residue class i + 1.
  static WindowPerm translation(int r, std::span<const long> shift);

  int r() const { return r_; }
  long operator[](int t) const { return window_[static_cast<std::size_t>(t - 1)]; }
  std::vector<long> window() const;

  // (t)w for any integer t.
  long apply(long t) const;

  WindowPerm operator*(const WindowPerm& w) const;  // this first, then w
  WindowPerm inverse() const;

  // Crossing count of the cylindrical diagram, equal to the Coxeter length.
  int length() const;
  // Power z in the unique factorisation w = rho^z c with c in W.
  long rho_power() const;
  bool in_coxeter_part() const { return rho_power() == 0; }

  bool is_left_descent(int i) const { return apply(i) > apply(i + 1); }
  bool is_right_descent(int i) const;
  std::vector<int> left_descents() const;
  std::vector<int> right_descents() const;

  bool operator==(const WindowPerm& o) const = default;
  auto operator<=>(const WindowPerm& o) const = default;

  std::size_t hash() const;
  std::string to_string() const;

private:
  WindowPerm() = default;
  int r_ = 0;
  std::array<long, kMaxPeriod> window_{};
};

struct WindowPermHash {
  std::size_t operator()(const WindowPerm& w) const { return w.hash(); }
};

struct RhoDecomposition {
  long z;
  WindowPerm coxeter;  // element of W
};
RhoDecomposition rho_decompose(const WindowPerm& w);

struct ReducedWord {
  long z;
  std::vector<int> word;  // w = rho^z s_{word[0]} s_{word[1]} ...
};
ReducedWord reduced_word(const WindowPerm& w);
WindowPerm from_word(int r, long z, std::span<const int> word);

struct SemidirectDecomposition {
  WindowPerm finite;              // permutation of {1..r}
  std::vector<long> translation;  // t_i: class i shifted by r * t_i
};
// w = finite * translation.
SemidirectDecomposition semidirect_decompose(const WindowPerm& w);

// Strong Bruhat order, extended to the full group by requiring equal
// rho-powers.
bool bruhat_leq(const WindowPerm& y, const WindowPerm& w);

// All elements below w in Bruhat order (w included).
std::vector<WindowPerm> bruhat_interval_below(const WindowPerm& w);

// Elements of W (or of rho^z W for |z| <= rho_bound when extended) with
// length at most max_len.
std::vector<WindowPerm> enumerate_up_to_length(int r, int max_len, bool extended = false,
                                               long rho_bound = 0);

}  // namespace aqs

template <>
struct std::hash<aqs::WindowPerm> {
  std::size_t operator()(const aqs::WindowPerm& w) const { return w.hash(); }
};
