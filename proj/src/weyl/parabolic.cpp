#include "aqs/weyl/parabolic.hpp"

#include <algorithm>
#include <unordered_set>

namespace aqs {

ParabolicIndex::ParabolicIndex(int r, std::vector<int> members, long shift)
    : r_(r), members_(std::move(members)), shift_(shift) {
  if (r < 3) throw InvariantError("period r must be at least 3");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int i : members_)
    if (i < 1 || i > r) throw InvariantError("parabolic member out of range: " + std::to_string(i));
  if (static_cast<int>(members_.size()) == r)
    throw InvariantError("parabolic subset must be proper");
  for (int i : members_) gens_.push_back(static_cast<int>(residue1(i + shift_, r_)));
  std::sort(gens_.begin(), gens_.end());
}

bool ParabolicIndex::contains(int i) const {
  return std::binary_search(gens_.begin(), gens_.end(), i);
}

std::vector<WindowPerm> parabolic_elements(const ParabolicIndex& pi) {
  const int r = pi.r();
  std::vector<WindowPerm> out{WindowPerm::identity(r)};
  std::unordered_set<WindowPerm, WindowPermHash> seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : pi.generators()) {
      WindowPerm x = out[k] * WindowPerm::gen_s(r, i);
      if (seen.insert(x).second) out.push_back(x);
    }
  }
  return out;
}

WindowPerm longest_element(const ParabolicIndex& pi) {
  // Multiply up along ascents until none remain inside pi.
  WindowPerm w = WindowPerm::identity(pi.r());
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : pi.generators()) {
      if (!w.is_right_descent(i)) {
        w = w * WindowPerm::gen_s(pi.r(), i);
        grew = true;
      }
    }
  }
  return w;
}

std::vector<long> length_distribution(const ParabolicIndex& pi) {
  std::vector<long> out;
  for (const auto& w : parabolic_elements(pi)) {
    const auto l = static_cast<std::size_t>(w.length());
    if (out.size() <= l) out.resize(l + 1, 0);
    ++out[l];
  }
  return out;
}

std::pair<WindowPerm, WindowPerm> coset_decompose(const WindowPerm& w, const ParabolicIndex& pi) {
  WindowPerm head = WindowPerm::identity(w.r());
  WindowPerm tail = w;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (int i : pi.generators()) {
      if (tail.is_left_descent(i)) {
        const WindowPerm s = WindowPerm::gen_s(w.r(), i);
        tail = s * tail;
        head = head * s;
        stripped = true;
      }
    }
  }
  return {head, tail};
}

bool is_distinguished(const WindowPerm& w, const ParabolicIndex& pi) {
  return std::none_of(pi.generators().begin(), pi.generators().end(),
                      [&](int i) { return w.is_left_descent(i); });
}

bool is_distinguished_right(const WindowPerm& w, const ParabolicIndex& pi) {
  return is_distinguished(w.inverse(), pi);
}

WindowPerm double_coset_rep(const WindowPerm& w, const ParabolicIndex& left,
                            const ParabolicIndex& right) {
  WindowPerm d = w;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (int i : left.generators()) {
      if (d.is_left_descent(i)) {
        d = WindowPerm::gen_s(w.r(), i) * d;
        stripped = true;
      }
    }
    for (int i : right.generators()) {
      if (d.is_right_descent(i)) {
        d = d * WindowPerm::gen_s(w.r(), i);
        stripped = true;
      }
    }
  }
  return d;
}

bool is_double_distinguished(const WindowPerm& w, const ParabolicIndex& left,
                             const ParabolicIndex& right) {
  return is_distinguished(w, left) && is_distinguished_right(w, right);
}

std::vector<WindowPerm> double_coset(const WindowPerm& d, const ParabolicIndex& left,
                                     const ParabolicIndex& right) {
  std::vector<WindowPerm> out{d};
  std::unordered_set<WindowPerm, WindowPermHash> seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : left.generators()) {
      WindowPerm x = WindowPerm::gen_s(d.r(), i) * out[k];
      if (seen.insert(x).second) out.push_back(x);
    }
    for (int i : right.generators()) {
      WindowPerm x = out[k] * WindowPerm::gen_s(d.r(), i);
      if (seen.insert(x).second) out.push_back(x);
    }
  }
  return out;
}

WindowPerm longest_double_coset_elt(const WindowPerm& d, const ParabolicIndex& left,
                                    const ParabolicIndex& right) {
  const auto coset = double_coset(d, left, right);
  int best = -1;
  int count = 0;
  const WindowPerm* arg = nullptr;
  for (const auto& w : coset) {
    const int l = w.length();
    if (l > best) {
      best = l;
      count = 1;
      arg = &w;
    } else if (l == best) {
      ++count;
    }
  }
  if (count != 1) throw std::logic_error("double coset has no unique longest element");
  return *arg;
}

}  // namespace aqs
