#include "aqs/quantum/hopf.hpp"

#include <sstream>
#include <stdexcept>

namespace aqs {

namespace {

int wrap(int i, int n) { return static_cast<int>(residue1(i, n)); }

bool adjacent(int i, int j, int n) { return i != j && (wrap(i + 1, n) == j || wrap(j + 1, n) == i); }

int eps_plus(int i, int j, int n) {
  if (j == i) return 1;
  if (j == wrap(i - 1, n)) return -1;
  return 0;
}

int eps_minus(int i, int j, int n) {
  if (j == wrap(i - 1, n)) return 1;
  if (j == i) return -1;
  return 0;
}

// A word acting on V: a monomial map.
std::optional<VImage> word_on_V(const GeneratorWord& w, long t, int n) {
  VImage cur{t, 0};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto im = act_V(*it, cur.t, n);
    if (!im) return std::nullopt;
    cur = {im->t, cur.exp + im->exp};
  }
  return cur;
}

bool word_counit(const GeneratorWord& w) {
  for (const auto& l : w)
    if (l.g == Gen::E || l.g == Gen::F) return false;
  return true;
}

TensorVector triple_action(const std::vector<TripleTerm>& terms, const TensorKey& key, int n) {
  TensorVector out(n, 3);
  for (const auto& t : terms) {
    const auto a = word_on_V(t.a, key[0], n);
    if (!a) continue;
    const auto b = word_on_V(t.b, key[1], n);
    if (!b) continue;
    const auto c = word_on_V(t.c, key[2], n);
    if (!c) continue;
    out.add_term({a->t, b->t, c->t}, t.coeff.shifted(a->exp + b->exp + c->exp));
  }
  return out;
}

std::string key_string(const TensorKey& k) {
  std::ostringstream os;
  os << "e(";
  for (std::size_t t = 0; t < k.size(); ++t) os << (t ? "," : "") << k[t];
  os << ")";
  return os.str();
}

std::vector<UElement> hopf_samples(int n) {
  std::vector<UElement> out;
  std::vector<Letter> letters;
  for (int i = 1; i <= n; ++i)
    for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv}) letters.push_back(make_letter(g, i, n));
  letters.push_back(make_letter(Gen::R, 0, n));
  letters.push_back(make_letter(Gen::Rinv, 0, n));
  for (const auto& l : letters) out.push_back(UElement::word(n, {l}));
  // a few products, including ones mixing E, F and R
  out.push_back(UElement::word(n, {make_letter(Gen::E, 1, n), make_letter(Gen::F, 1, n)}));
  out.push_back(UElement::word(n, {make_letter(Gen::F, 2, n), make_letter(Gen::E, 1, n)}));
  out.push_back(UElement::word(n, {make_letter(Gen::R, 0, n), make_letter(Gen::E, n, n)}));
  out.push_back(UElement::word(n, {make_letter(Gen::E, 1, n), make_letter(Gen::E, 2, n),
                                   make_letter(Gen::Kinv, 3, n)}));
  out.push_back(UElement::word(n, {make_letter(Gen::F, n, n), make_letter(Gen::Rinv, 0, n),
                                   make_letter(Gen::F, 1, n)}));
  return out;
}

}  // namespace

std::vector<RelationInstance> defining_relations(int n) {
  if (n < 3) throw InvariantError("relation check needs n >= 3");
  auto L = [n](Gen g, int i = 0) { return make_letter(g, i, n); };
  auto W = [n](GeneratorWord w, const LaurentPoly& c = 1) { return UElement::word(n, std::move(w), c); };
  const UElement one = UElement::one(n);
  const LaurentPoly two = LaurentPoly::v(1) + LaurentPoly::v(-1);
  std::vector<RelationInstance> out;
  auto add = [&](int num, const std::string& label, UElement a, UElement b) {
    out.push_back({num, label, std::move(a), std::move(b)});
  };
  for (int i = 1; i <= n; ++i) {
    const int i1 = wrap(i + 1, n);
    const std::string si = std::to_string(i);
    for (int j = 1; j <= n; ++j) {
      const std::string sij = si + "," + std::to_string(j);
      add(1, "K" + sij, W({L(Gen::K, i), L(Gen::K, j)}), W({L(Gen::K, j), L(Gen::K, i)}));
      add(3, "K" + sij, W({L(Gen::K, i), L(Gen::E, j)}),
          W({L(Gen::E, j), L(Gen::K, i)}, LaurentPoly::v(eps_plus(i, j, n))));
      add(4, "K" + sij, W({L(Gen::K, i), L(Gen::F, j)}),
          W({L(Gen::F, j), L(Gen::K, i)}, LaurentPoly::v(eps_minus(i, j, n))));
      UElement lhs5 = W({L(Gen::E, i), L(Gen::F, j)}) - W({L(Gen::F, j), L(Gen::E, i)});
      lhs5 *= LaurentPoly::v(1) - LaurentPoly::v(-1);
      UElement rhs5(n);
      if (i == j)
        rhs5 = W({L(Gen::K, i), L(Gen::Kinv, i1)}) - W({L(Gen::Kinv, i), L(Gen::K, i1)});
      add(5, "EF" + sij, lhs5, rhs5);
      if (i != j && !adjacent(i, j, n)) {
        add(6, "E" + sij, W({L(Gen::E, i), L(Gen::E, j)}), W({L(Gen::E, j), L(Gen::E, i)}));
        add(7, "F" + sij, W({L(Gen::F, i), L(Gen::F, j)}), W({L(Gen::F, j), L(Gen::F, i)}));
      }
      if (adjacent(i, j, n)) {
        UElement e = W({L(Gen::E, i), L(Gen::E, i), L(Gen::E, j)}) -
                     W({L(Gen::E, i), L(Gen::E, j), L(Gen::E, i)}, two) +
                     W({L(Gen::E, j), L(Gen::E, i), L(Gen::E, i)});
        add(8, "E" + sij, e, UElement(n));
        UElement f = W({L(Gen::F, j), L(Gen::F, j), L(Gen::F, i)}) -
                     W({L(Gen::F, j), L(Gen::F, i), L(Gen::F, j)}, two) +
                     W({L(Gen::F, i), L(Gen::F, j), L(Gen::F, j)});
        add(9, "F" + sij, f, UElement(n));
      }
    }
    add(2, "K" + si, W({L(Gen::K, i), L(Gen::Kinv, i)}), one);
    add(2, "Kinv" + si, W({L(Gen::Kinv, i), L(Gen::K, i)}), one);
    add(11, "K" + si, W({L(Gen::Rinv), L(Gen::K, i1), L(Gen::R)}), W({L(Gen::K, i)}));
    add(12, "Kinv" + si, W({L(Gen::Rinv), L(Gen::Kinv, i1), L(Gen::R)}), W({L(Gen::Kinv, i)}));
    add(13, "E" + si, W({L(Gen::Rinv), L(Gen::E, i1), L(Gen::R)}), W({L(Gen::E, i)}));
    add(14, "F" + si, W({L(Gen::Rinv), L(Gen::F, i1), L(Gen::R)}), W({L(Gen::F, i)}));
  }
  add(10, "RRinv", W({L(Gen::R), L(Gen::Rinv)}), one);
  add(10, "RinvR", W({L(Gen::Rinv), L(Gen::R)}), one);
  return out;
}

std::vector<TripleTerm> coproduct_left(const UElement& u) {
  std::vector<TripleTerm> out;
  for (const auto& t : coproduct(u))
    for (const auto& s : coproduct(u.n(), t.left)) out.push_back({t.coeff * s.coeff, s.left, s.right, t.right});
  return out;
}

std::vector<TripleTerm> coproduct_right(const UElement& u) {
  std::vector<TripleTerm> out;
  for (const auto& t : coproduct(u))
    for (const auto& s : coproduct(u.n(), t.right)) out.push_back({t.coeff * s.coeff, t.left, s.left, s.right});
  return out;
}

SuiteReport verify_hopf(int n, int r_max, long window) {
  if (r_max < 1) throw InvariantError("r_max must be positive");
  SuiteReport rep;
  rep.suite = "hopf";
  rep.params = {{"n", std::to_string(n)}, {"r_max", std::to_string(r_max)},
                {"window", std::to_string(window)}};
  const auto rels = defining_relations(n);
  const std::string tag = " n=" + std::to_string(n);
  // relations
  for (int num = 1; num <= 14; ++num) {
    Check chk("relation-" + std::string(num < 10 ? "0" : "") + std::to_string(num) + tag);
    for (int k = 1; k <= r_max; ++k)
      for (const auto& key : window_keys(k, -window, window)) {
        const TensorVector x = TensorVector::basis(n, key);
        for (const auto& rel : rels) {
          if (rel.number != num) continue;
          const TensorVector a = act_tensor(rel.lhs, x), b = act_tensor(rel.rhs, x);
          chk.record(a == b, [&] {
            return rel.label + " on " + key_string(key) + ": " + a.to_string() + " vs " + b.to_string();
          });
        }
      }
    rep.add(chk);
  }
  const auto samples = hopf_samples(n);
  // coassociativity, and agreement with the iterated action on V^(x)3
  {
    Check chk("coassociativity" + tag);
    Check iter("coproduct-matches-tensor-action" + tag);
    const auto keys3 = window_keys(3, -window, window);
    for (const auto& u : samples) {
      const auto left = coproduct_left(u), right = coproduct_right(u);
      for (const auto& key : keys3) {
        const TensorVector a = triple_action(left, key, n), b = triple_action(right, key, n);
        chk.record(a == b, [&] { return u.to_string() + " on " + key_string(key); });
        const TensorVector c = act_tensor(u, TensorVector::basis(n, key));
        iter.record(a == c, [&] { return u.to_string() + " on " + key_string(key); });
      }
    }
    rep.add(chk);
    rep.add(iter);
  }
  // counit and antipode on V
  {
    Check cl("counit-left" + tag), cr("counit-right" + tag);
    Check sl("antipode-left" + tag), sr("antipode-right" + tag);
    for (const auto& u : samples) {
      const auto delta = coproduct(u);
      const LaurentPoly eu = counit(u);
      UElement mul_left(n), mul_right(n), eps_left(n), eps_right(n);
      for (const auto& t : delta) {
        if (word_counit(t.left)) eps_left += UElement::word(n, t.right, t.coeff);
        if (word_counit(t.right)) eps_right += UElement::word(n, t.left, t.coeff);
        mul_left += antipode(UElement::word(n, t.left, t.coeff)) * UElement::word(n, t.right);
        mul_right += UElement::word(n, t.left, t.coeff) * antipode(UElement::word(n, t.right));
      }
      for (long t = -window; t <= window; ++t) {
        const TensorVector x = TensorVector::basis(n, {t});
        const TensorVector ux = act_tensor(u, x);
        const auto w = [&] { return u.to_string() + " on e(" + std::to_string(t) + ")"; };
        cl.record(act_tensor(eps_left, x) == ux, w);
        cr.record(act_tensor(eps_right, x) == ux, w);
        sl.record(act_tensor(mul_left, x) == x * eu, w);
        sr.record(act_tensor(mul_right, x) == x * eu, w);
      }
    }
    rep.add(cl);
    rep.add(cr);
    rep.add(sl);
    rep.add(sr);
  }
  return rep;
}

}  // namespace aqs
