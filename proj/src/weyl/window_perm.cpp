#include "aqs/weyl/window_perm.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace aqs {

namespace {

void check_period(int r) {
  if (r < 3) throw InvariantError("period r must be at least 3, got " + std::to_string(r));
  if (r > kMaxPeriod)
    throw InvariantError("period r exceeds supported maximum " + std::to_string(kMaxPeriod));
}

}  // namespace

WindowPerm::WindowPerm(int r, std::span<const long> window) : r_(r) {
  check_period(r);
  if (static_cast<int>(window.size()) != r)
    throw InvariantError("window has " + std::to_string(window.size()) + " entries, expected " +
                         std::to_string(r));
  std::array<bool, kMaxPeriod> seen{};
  for (int t = 0; t < r; ++t) {
    const long res = residue1(window[static_cast<std::size_t>(t)], r);
    if (seen[static_cast<std::size_t>(res - 1)])
      throw InvariantError("window entries collide modulo r (residue " + std::to_string(res) + ")");
    seen[static_cast<std::size_t>(res - 1)] = true;
    window_[static_cast<std::size_t>(t)] = window[static_cast<std::size_t>(t)];
  }
}

WindowPerm WindowPerm::identity(int r) { return gen_rho(r, 0); }

WindowPerm WindowPerm::gen_s(int r, int i) {
  check_period(r);
  if (i < 1 || i > r) throw std::out_of_range("generator index out of range: " + std::to_string(i));
  WindowPerm w = identity(r);
  if (i < r) {
    std::swap(w.window_[static_cast<std::size_t>(i - 1)], w.window_[static_cast<std::size_t>(i)]);
  } else {
    w.window_[0] = 0;
    w.window_[static_cast<std::size_t>(r - 1)] = r + 1;
  }
  return w;
}

WindowPerm WindowPerm::gen_rho(int r, long z) {
  check_period(r);
  WindowPerm w;
  w.r_ = r;
  for (int t = 1; t <= r; ++t) w.window_[static_cast<std::size_t>(t - 1)] = t + z;
  return w;
}

WindowPerm WindowPerm::translation(int r, std::span<const long> shift) {
  check_period(r);
  if (static_cast<int>(shift.size()) != r) throw InvariantError("translation vector has wrong size");
  WindowPerm w;
  w.r_ = r;
  for (int t = 1; t <= r; ++t)
    w.window_[static_cast<std::size_t>(t - 1)] = t + r * shift[static_cast<std::size_t>(t - 1)];
  return w;
}

std::vector<long> WindowPerm::window() const {
  return {window_.begin(), window_.begin() + r_};
}

long WindowPerm::apply(long t) const {
  const long k = floor_div(t - 1, r_);
  return window_[static_cast<std::size_t>(t - 1 - k * r_)] + k * r_;
}

WindowPerm WindowPerm::operator*(const WindowPerm& w) const {
  if (r_ != w.r_) throw std::invalid_argument("period mismatch in composition");
  WindowPerm out;
  out.r_ = r_;
  for (int t = 0; t < r_; ++t) out.window_[static_cast<std::size_t>(t)] = w.apply(window_[static_cast<std::size_t>(t)]);
  return out;
}

WindowPerm WindowPerm::inverse() const {
  WindowPerm out;
  out.r_ = r_;
  for (int t = 1; t <= r_; ++t) {
    const long a = window_[static_cast<std::size_t>(t - 1)];
    const long k = floor_div(a - 1, r_);
    // (a)w^{-1} = t, so (a - k r)w^{-1} = t - k r.
    out.window_[static_cast<std::size_t>(a - k * r_ - 1)] = t - k * r_;
  }
  return out;
}

int WindowPerm::length() const {
  // Pairs (i, j) with 1 <= i <= r, j > i, (i)w > (j)w.  Write j = b + k r with
  // 1 <= b <= r; the admissible k form an interval.
  long count = 0;
  for (int i = 1; i <= r_; ++i) {
    for (int b = 1; b <= r_; ++b) {
      const long diff = (*this)[i] - (*this)[b];
      const long k_min = b > i ? 0 : 1;
      const long k_max = floor_div(diff - 1, r_);
      if (k_max >= k_min) count += k_max - k_min + 1;
    }
  }
  return static_cast<int>(count);
}

long WindowPerm::rho_power() const {
  long sum = 0;
  for (int t = 0; t < r_; ++t) sum += window_[static_cast<std::size_t>(t)];
  return (sum - static_cast<long>(r_) * (r_ + 1) / 2) / r_;
}

bool WindowPerm::is_right_descent(int i) const {
  const WindowPerm inv = inverse();
  return inv.apply(i) > inv.apply(i + 1);
}

std::vector<int> WindowPerm::left_descents() const {
  std::vector<int> out;
  for (int i = 1; i <= r_; ++i)
    if (is_left_descent(i)) out.push_back(i);
  return out;
}

std::vector<int> WindowPerm::right_descents() const {
  const WindowPerm inv = inverse();
  std::vector<int> out;
  for (int i = 1; i <= r_; ++i)
    if (inv.apply(i) > inv.apply(i + 1)) out.push_back(i);
  return out;
}

std::size_t WindowPerm::hash() const {
  std::size_t h = static_cast<std::size_t>(r_);
  for (int t = 0; t < r_; ++t)
    h = h * 1000003u ^ static_cast<std::size_t>(window_[static_cast<std::size_t>(t)] + 0x9e3779b9);
  return h;
}

std::string WindowPerm::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int t = 0; t < r_; ++t) os << (t ? "," : "") << window_[static_cast<std::size_t>(t)];
  os << "]";
  return os.str();
}

RhoDecomposition rho_decompose(const WindowPerm& w) {
  const long z = w.rho_power();
  return {z, WindowPerm::gen_rho(w.r(), -z) * w};
}

ReducedWord reduced_word(const WindowPerm& w) {
  auto [z, c] = rho_decompose(w);
  std::vector<int> rev;
  while (true) {
    const auto d = c.right_descents();
    if (d.empty()) break;
    rev.push_back(d.front());
    c = c * WindowPerm::gen_s(w.r(), d.front());
  }
  std::reverse(rev.begin(), rev.end());
  return {z, rev};
}

WindowPerm from_word(int r, long z, std::span<const int> word) {
  WindowPerm w = WindowPerm::gen_rho(r, z);
  for (int i : word) w = w * WindowPerm::gen_s(r, i);
  return w;
}

SemidirectDecomposition semidirect_decompose(const WindowPerm& w) {
  const int r = w.r();
  std::vector<long> fin(static_cast<std::size_t>(r));
  std::vector<long> shift(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    const long f = residue1(w[i], r);
    fin[static_cast<std::size_t>(i - 1)] = f;
    shift[static_cast<std::size_t>(f - 1)] = (w[i] - f) / r;
  }
  return {WindowPerm(r, fin), shift};
}

bool bruhat_leq(const WindowPerm& y, const WindowPerm& w) {
  if (y.r() != w.r()) throw std::invalid_argument("period mismatch in Bruhat comparison");
  if (y.rho_power() != w.rho_power()) return false;
  WindowPerm a = y;
  WindowPerm b = w;
  int la = a.length();
  int lb = b.length();
  // Descend along right descents of b; min(a, a s) <= b s iff a <= b.
  while (lb > 0) {
    if (la > lb) return false;
    const int s = b.right_descents().front();
    const WindowPerm gs = WindowPerm::gen_s(w.r(), s);
    b = b * gs;
    --lb;
    if (a.is_right_descent(s)) {
      a = a * gs;
      --la;
    }
  }
  return a == b;
}

std::vector<WindowPerm> bruhat_interval_below(const WindowPerm& w) {
  const auto d = w.right_descents();
  if (d.empty()) return {w};
  const WindowPerm gs = WindowPerm::gen_s(w.r(), d.front());
  auto lower = bruhat_interval_below(w * gs);
  std::unordered_set<WindowPerm, WindowPermHash> seen(lower.begin(), lower.end());
  const std::size_t n = lower.size();
  for (std::size_t k = 0; k < n; ++k) {
    WindowPerm x = lower[k] * gs;
    if (seen.insert(x).second) lower.push_back(x);
  }
  return lower;
}

std::vector<WindowPerm> enumerate_up_to_length(int r, int max_len, bool extended, long rho_bound) {
  if (max_len < 0) throw std::invalid_argument("length bound must be non-negative");
  std::vector<WindowPerm> coxeter{WindowPerm::identity(r)};
  std::vector<WindowPerm> layer = coxeter;
  for (int len = 1; len <= max_len; ++len) {
    std::unordered_set<WindowPerm, WindowPermHash> next;
    std::vector<WindowPerm> ordered;
    for (const auto& w : layer) {
      for (int i = 1; i <= r; ++i) {
        if (w.is_right_descent(i)) continue;
        WindowPerm x = w * WindowPerm::gen_s(r, i);
        if (next.insert(x).second) ordered.push_back(x);
      }
    }
    coxeter.insert(coxeter.end(), ordered.begin(), ordered.end());
    layer = std::move(ordered);
  }
  if (!extended) return coxeter;
  std::vector<WindowPerm> out;
  for (long z = -rho_bound; z <= rho_bound; ++z)
    for (const auto& c : coxeter) out.push_back(WindowPerm::gen_rho(r, z) * c);
  return out;
}

}  // namespace aqs
