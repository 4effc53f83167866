#pragma once

// Elements of U(gl_n^) as linear combinations of words in the generators.
// No relations are applied; equality is tested through module actions.

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "aqs/coeff/laurent.hpp"

namespace aqs {

enum class Gen { E, F, K, Kinv, R, Rinv };

struct Letter {
  Gen g;
  int i = 0;  // 1..n for E, F, K, Kinv; 0 for R, Rinv
  auto operator<=>(const Letter&) const = default;
  bool operator==(const Letter&) const = default;
};

// The word a_1 a_2 ... a_k; on a module a_k acts first.
using GeneratorWord = std::vector<Letter>;

Letter make_letter(Gen g, int i, int n);
std::string to_string(const Letter& l);
std::string to_string(const GeneratorWord& w);
// Parses "E1", "F2", "K3", "K3^-1", "R", "R^-1" (also "Ki" for Kinv, "Ri").
Letter parse_letter(const std::string& s, int n);

class UElement {
public:
  using Terms = std::map<GeneratorWord, LaurentPoly>;
  explicit UElement(int n) : n_(n) {}
  static UElement word(int n, GeneratorWord w, const LaurentPoly& c = 1);
  static UElement one(int n) { return word(n, {}); }
  static UElement letter(int n, Gen g, int i = 0) { return word(n, {make_letter(g, i, n)}); }

  int n() const { return n_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GeneratorWord& w, const LaurentPoly& c);
  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const LaurentPoly& c);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(UElement a, const LaurentPoly& c) { return a *= c; }
  friend UElement operator*(const LaurentPoly& c, UElement a) { return a *= c; }
  bool operator==(const UElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

private:
  int n_;
  Terms terms_;
};

// Concatenation product.
UElement operator*(const UElement& a, const UElement& b);

LaurentPoly counit(const UElement& u);
UElement antipode(const UElement& u);

// Delta(u) as terms c * (left word) (x) (right word).
struct CoproductTerm {
  LaurentPoly coeff;
  GeneratorWord left;
  GeneratorWord right;
};
std::vector<CoproductTerm> coproduct(int n, const GeneratorWord& w);
std::vector<CoproductTerm> coproduct(const UElement& u);

}  // namespace aqs
