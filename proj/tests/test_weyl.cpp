#include <set>

#include "aqs/weyl/parabolic.hpp"
#include "aqs/weyl/window_perm.hpp"
#include "doctest.h"
#include "oracles.hpp"

using aqs::ParabolicIndex;
using aqs::WindowPerm;

namespace {

std::vector<ParabolicIndex> proper_subsets(int r) {
  std::vector<ParabolicIndex> out;
  for (int mask = 0; mask < (1 << r) - 1; ++mask) {
    std::vector<int> m;
    for (int i = 1; i <= r; ++i)
      if (mask >> (i - 1) & 1) m.push_back(i);
    out.emplace_back(r, m);
  }
  return out;
}

}  // namespace

TEST_CASE("generators and application") {
  CHECK(WindowPerm::gen_s(3, 1).window() == std::vector<long>{2, 1, 3});
  CHECK(WindowPerm::gen_rho(3, 1).window() == std::vector<long>{2, 3, 4});
  CHECK(WindowPerm::identity(3).window() == std::vector<long>{1, 2, 3});
  CHECK(WindowPerm::gen_s(3, 3).window() == std::vector<long>{0, 2, 4});
  CHECK(WindowPerm{3, {2, 1, 3}}.apply(4) == 5);
  CHECK(WindowPerm{3, {2, 3, 4}}.apply(-2) == -1);
  for (long t = -7; t < 8; ++t) CHECK(WindowPerm::identity(4).apply(t) == t);
  CHECK_THROWS_AS(WindowPerm::gen_s(3, 4), std::out_of_range);
  CHECK_THROWS_AS(WindowPerm::gen_s(3, 0), std::out_of_range);
}

TEST_CASE("invariants are enforced") {
  CHECK_THROWS_AS((WindowPerm{3, {1, 1, 3}}), aqs::InvariantError);
  CHECK_THROWS_AS((WindowPerm{2, {1, 2}}), aqs::InvariantError);
  CHECK_THROWS_AS((WindowPerm{3, {1, 2}}), aqs::InvariantError);
  CHECK_NOTHROW((WindowPerm{3, {4, 2, 3}}));
  CHECK_THROWS_AS(ParabolicIndex(3, {1, 2, 3}), aqs::InvariantError);
}

TEST_CASE("composition and inverse") {
  const WindowPerm rho = WindowPerm::gen_rho(3, 1);
  CHECK(rho * WindowPerm::gen_s(3, 2) == WindowPerm::gen_s(3, 1) * rho);
  for (int r = 3; r <= 5; ++r)
    for (int i = 1; i <= r; ++i) {
      const int j = i % r + 1;
      CHECK(WindowPerm::gen_rho(r, 1) * WindowPerm::gen_s(r, j) ==
            WindowPerm::gen_s(r, i) * WindowPerm::gen_rho(r, 1));
    }
  CHECK(rho.inverse().window() == std::vector<long>{0, 1, 2});
  CHECK(WindowPerm::gen_s(3, 2).inverse() == WindowPerm::gen_s(3, 2));
  const WindowPerm w{4, {7, -2, 4, 1}};
  CHECK(w * w.inverse() == WindowPerm::identity(4));
  CHECK(w.inverse() * w == WindowPerm::identity(4));
  CHECK(WindowPerm::gen_s(3, 1) * WindowPerm::gen_s(3, 1) == WindowPerm::identity(3));
  // apply is a right action
  const WindowPerm u{4, {0, 5, 3, 2}};
  for (long t = -9; t < 9; ++t) CHECK((u * w).apply(t) == w.apply(u.apply(t)));
}

TEST_CASE("braid relations") {
  for (int r = 3; r <= 5; ++r)
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        const WindowPerm a = WindowPerm::gen_s(r, i), b = WindowPerm::gen_s(r, j);
        const bool adjacent = (i % r + 1 == j) || (j % r + 1 == i);
        if (i == j) continue;
        if (adjacent)
          CHECK(a * b * a == b * a * b);
        else
          CHECK(a * b == b * a);
      }
}

TEST_CASE("length agrees with word distance") {
  for (int r : {3, 4}) {
    const oracle::WordBall ball(r, 8);
    for (const auto& w : ball.order) {
      CHECK(w.length() == ball.dist.at(w));
      for (long z : {-2L, 1L, 3L}) CHECK((WindowPerm::gen_rho(r, z) * w).length() == w.length());
    }
  }
  const WindowPerm w{3, {4, 2, 3}};
  CHECK(w.length() == 2);
  CHECK(WindowPerm::gen_rho(5, 7).length() == 0);
}

TEST_CASE("descents match length changes") {
  for (int r : {3, 4}) {
    const oracle::WordBall ball(r, 7);
    for (const auto& w : ball.order) {
      if (ball.dist.at(w) > 6) continue;
      for (int i = 1; i <= r; ++i) {
        const WindowPerm s = WindowPerm::gen_s(r, i);
        CHECK(w.is_left_descent(i) == (ball.dist.at(s * w) < ball.dist.at(w)));
        CHECK(w.is_right_descent(i) == (ball.dist.at(w * s) < ball.dist.at(w)));
      }
    }
  }
  CHECK(WindowPerm::gen_s(3, 1).left_descents() == std::vector<int>{1});
  CHECK(WindowPerm::gen_rho(3, 1).left_descents().empty());
  CHECK(WindowPerm::gen_rho(3, 1).right_descents().empty());
  CHECK(WindowPerm::identity(3).left_descents().empty());
}

TEST_CASE("rho decomposition, reduced words, semidirect product") {
  const WindowPerm w{3, {4, 2, 3}};
  auto [z, c] = aqs::rho_decompose(w);
  CHECK(z == 1);
  CHECK(c == WindowPerm::gen_rho(3, -1) * w);
  CHECK(c.length() == 2);
  CHECK(c.in_coxeter_part());
  CHECK(aqs::rho_decompose(WindowPerm::gen_rho(3, 2)).z == 2);
  CHECK(aqs::rho_decompose(WindowPerm::gen_rho(3, 2)).coxeter == WindowPerm::identity(3));
  CHECK(aqs::reduced_word(WindowPerm::identity(3)).word.empty());
  CHECK(aqs::reduced_word(WindowPerm::gen_s(3, 2)).word == std::vector<int>{2});
  const auto rw = aqs::reduced_word(w);
  CHECK(rw.z == 1);
  CHECK(rw.word.size() == 2);
  CHECK(aqs::from_word(3, rw.z, rw.word) == w);

  const auto sd = aqs::semidirect_decompose(w);
  CHECK(sd.finite == WindowPerm::identity(3));
  CHECK(sd.translation == std::vector<long>{1, 0, 0});
  CHECK(aqs::semidirect_decompose(WindowPerm::gen_s(3, 1)).finite.window() ==
        std::vector<long>{2, 1, 3});

  const oracle::WordBall ball(4, 6);
  for (const auto& x : ball.order) {
    for (long zz : {-1L, 0L, 2L}) {
      const WindowPerm y = WindowPerm::gen_rho(4, zz) * x;
      const auto r = aqs::reduced_word(y);
      CHECK(static_cast<int>(r.word.size()) == ball.dist.at(x));
      CHECK(aqs::from_word(4, r.z, r.word) == y);
      const auto d = aqs::semidirect_decompose(y);
      CHECK(d.finite * WindowPerm::translation(4, d.translation) == y);
      long sum = 0;
      for (long t : d.translation) sum += t;
      CHECK(sum == zz);
    }
  }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (int r : {3, 4}) {
    const oracle::WordBall ball(r, 5);
    for (const auto& w : ball.order) {
      const auto below = oracle::subword_products(r, 0, ball.word.at(w));
      for (const auto& y : ball.order) CHECK(aqs::bruhat_leq(y, w) == (below.count(y) > 0));
      const auto interval = aqs::bruhat_interval_below(w);
      CHECK(std::set<WindowPerm>(interval.begin(), interval.end()) == below);
      const WindowPerm rho = WindowPerm::gen_rho(r, 1);
      CHECK_FALSE(aqs::bruhat_leq(rho * w, w));
      CHECK(aqs::bruhat_leq(rho * w, rho * w));
    }
  }
  const WindowPerm s1 = WindowPerm::gen_s(3, 1), s2 = WindowPerm::gen_s(3, 2),
                   s3 = WindowPerm::gen_s(3, 3);
  CHECK(aqs::bruhat_leq(WindowPerm::identity(3), s1 * s2));
  CHECK_FALSE(aqs::bruhat_leq(s3, s1 * s2));
}

TEST_CASE("enumeration") {
  CHECK(aqs::enumerate_up_to_length(3, 0).size() == 1);
  CHECK(aqs::enumerate_up_to_length(3, 1).size() == 4);
  CHECK(aqs::enumerate_up_to_length(3, 2).size() == 10);
  for (int r : {3, 4}) {
    const oracle::WordBall ball(r, 5);
    const auto all = aqs::enumerate_up_to_length(r, 5);
    CHECK(all.size() == ball.order.size());
    CHECK(std::set<WindowPerm>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(aqs::enumerate_up_to_length(3, 2, true, 2).size() == 50);
}

TEST_CASE("parabolic subgroups") {
  CHECK(aqs::parabolic_elements(ParabolicIndex(3, {1})).size() == 2);
  CHECK(aqs::parabolic_elements(ParabolicIndex(3, {1, 2})).size() == 6);
  const auto shifted = aqs::parabolic_elements(ParabolicIndex(3, {1}, 1));
  CHECK(std::set<WindowPerm>(shifted.begin(), shifted.end()) ==
        std::set<WindowPerm>{WindowPerm::identity(3), WindowPerm::gen_s(3, 2)});
  CHECK(aqs::longest_element(ParabolicIndex(3, {1})) == WindowPerm::gen_s(3, 1));
  const WindowPerm w0 = aqs::longest_element(ParabolicIndex(3, {1, 2}));
  CHECK(w0.window() == std::vector<long>{3, 2, 1});
  CHECK(w0.length() == 3);
  CHECK(aqs::longest_element(ParabolicIndex(3, {})) == WindowPerm::identity(3));
  // the affine pair {2,3} and the shifted A3 inside r = 5
  for (const auto& pi : {ParabolicIndex(3, {2, 3}), ParabolicIndex(5, {1, 2, 3}, 2)}) {
    const auto el = aqs::parabolic_elements(pi);
    int best = 0;
    for (const auto& x : el) best = std::max(best, x.length());
    CHECK(aqs::longest_element(pi).length() == best);
  }
}

TEST_CASE("coset decomposition is unique and length additive") {
  for (int r : {3, 4}) {
    const oracle::WordBall ball(r, 6);
    for (const auto& pi : proper_subsets(r)) {
      const auto sub = aqs::parabolic_elements(pi);
      for (const auto& base : ball.order)
        for (long z : {0L, 1L}) {
          const WindowPerm w = WindowPerm::gen_rho(r, z) * base;
          const auto [a, b] = aqs::coset_decompose(w, pi);
          CHECK(a * b == w);
          CHECK(a.length() + b.length() == w.length());
          CHECK(aqs::is_distinguished(b, pi));
          int found = 0;
          for (const auto& u : sub) {
            const WindowPerm rest = u.inverse() * w;
            if (u.length() + rest.length() == w.length() && aqs::is_distinguished(rest, pi)) ++found;
          }
          CHECK(found == 1);
        }
    }
  }
  const WindowPerm s1 = WindowPerm::gen_s(3, 1), s2 = WindowPerm::gen_s(3, 2);
  const auto [a, b] = aqs::coset_decompose(s1 * s2, ParabolicIndex(3, {1}));
  CHECK(a == s1);
  CHECK(b == s2);
  const auto [c, d] = aqs::coset_decompose(WindowPerm::gen_rho(3, 1), ParabolicIndex(3, {1, 2}));
  CHECK(c == WindowPerm::identity(3));
  CHECK(d == WindowPerm::gen_rho(3, 1));
  CHECK(aqs::is_distinguished(WindowPerm::identity(3), ParabolicIndex(3, {1, 2})));
  CHECK_FALSE(aqs::is_distinguished(s1, ParabolicIndex(3, {1})));
  CHECK(aqs::is_distinguished(WindowPerm::gen_rho(3, 1), ParabolicIndex(3, {2, 3})));
}

TEST_CASE("double cosets") {
  const ParabolicIndex p1(3, {1}), p2(3, {2}), none(3, {});
  const WindowPerm s1 = WindowPerm::gen_s(3, 1), s2 = WindowPerm::gen_s(3, 2);
  CHECK(aqs::double_coset_rep(s1, p1, none) == WindowPerm::identity(3));
  CHECK(aqs::double_coset_rep(WindowPerm::gen_s(3, 3), p1, p2) == WindowPerm::gen_s(3, 3));
  for (int r : {3, 4}) {
    const oracle::WordBall ball(r, 4);
    const auto subsets = proper_subsets(r);
    for (const auto& w : ball.order)
      for (std::size_t a = 0; a < subsets.size(); a += 3)
        for (std::size_t b = 1; b < subsets.size(); b += 2) {
          const auto& l = subsets[a];
          const auto& rr = subsets[b];
          const WindowPerm d = aqs::double_coset_rep(w, l, rr);
          CHECK(aqs::is_double_distinguished(d, l, rr));
          const auto coset = aqs::double_coset(w, l, rr);
          int min_len = 1000;
          int n_min = 0;
          for (const auto& x : coset) {
            if (x.length() < min_len) {
              min_len = x.length();
              n_min = 1;
            } else if (x.length() == min_len) {
              ++n_min;
            }
          }
          CHECK(n_min == 1);
          CHECK(d.length() == min_len);
          CHECK(aqs::double_coset_rep(d, l, rr) == d);
          const WindowPerm top = aqs::longest_double_coset_elt(d, l, rr);
          CHECK(aqs::double_coset_rep(top, l, rr) == d);
        }
  }
  // brute force over the product set for s1 s2
  std::set<WindowPerm> prod;
  for (const auto& u : aqs::parabolic_elements(p1))
    for (const auto& v : aqs::parabolic_elements(p2)) prod.insert(u * s1 * s2 * v);
  int m = 100;
  for (const auto& x : prod) m = std::min(m, x.length());
  CHECK(aqs::double_coset_rep(s1 * s2, p1, p2).length() == m);

  CHECK(aqs::longest_double_coset_elt(s1 * s2, none, none) == s1 * s2);
  CHECK(aqs::longest_double_coset_elt(WindowPerm::identity(3), p1, p1) == s1);
  // rho with pi1 = {1}, pi2 = {2}: W_1 rho W_2 = rho W_{2}... of the form rho w'
  const WindowPerm rho = WindowPerm::gen_rho(3, 1);
  const WindowPerm top = aqs::longest_double_coset_elt(rho, p1, p2);
  CHECK(top.rho_power() == 1);
  CHECK(top == rho * s2);
}
