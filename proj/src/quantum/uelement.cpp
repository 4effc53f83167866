#include "aqs/quantum/uelement.hpp"

#include <sstream>
#include <stdexcept>

#include "aqs/weyl/window_perm.hpp"

namespace aqs {

Letter make_letter(Gen g, int i, int n) {
  if (n < 1) throw InvariantError("n must be positive");
  if (g == Gen::R || g == Gen::Rinv) return {g, 0};
  if (i < 1 || i > n)
    throw InvariantError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return {g, i};
}

std::string to_string(const Letter& l) {
  switch (l.g) {
    case Gen::E: return "E" + std::to_string(l.i);
    case Gen::F: return "F" + std::to_string(l.i);
    case Gen::K: return "K" + std::to_string(l.i);
    case Gen::Kinv: return "K" + std::to_string(l.i) + "^-1";
    case Gen::R: return "R";
    case Gen::Rinv: return "R^-1";
  }
  return "?";
}

std::string to_string(const GeneratorWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + to_string(w[k]);
  return s;
}

Letter parse_letter(const std::string& s, int n) {
  if (s == "R") return make_letter(Gen::R, 0, n);
  if (s == "R^-1" || s == "Ri") return make_letter(Gen::Rinv, 0, n);
  if (s.size() < 2) throw InvariantError("cannot parse generator '" + s + "'");
  std::string body = s.substr(1);
  bool inverse = false;
  if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
    inverse = true;
    body.resize(body.size() - 3);
  }
  int i = 0;
  try {
    std::size_t used = 0;
    i = std::stoi(body, &used);
    if (used != body.size()) throw std::invalid_argument(body);
  } catch (const std::exception&) {
    throw InvariantError("cannot parse generator '" + s + "'");
  }
  switch (s[0]) {
    case 'E':
      if (!inverse) return make_letter(Gen::E, i, n);
      break;
    case 'F':
      if (!inverse) return make_letter(Gen::F, i, n);
      break;
    case 'K': return make_letter(inverse ? Gen::Kinv : Gen::K, i, n);
    default: break;
  }
  throw InvariantError("cannot parse generator '" + s + "'");
}

UElement UElement::word(int n, GeneratorWord w, const LaurentPoly& c) {
  UElement u(n);
  u.add_term(w, c);
  return u;
}

void UElement::add_term(const GeneratorWord& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

UElement& UElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

std::string UElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c << ")*" << aqs::to_string(w);
    first = false;
  }
  return os.str();
}

UElement operator*(const UElement& a, const UElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("rank mismatch in U product");
  UElement out(a.n());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      GeneratorWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

LaurentPoly counit(const UElement& u) {
  LaurentPoly s;
  for (const auto& [w, c] : u.terms()) {
    bool zero = false;
    for (const auto& l : w) zero = zero || l.g == Gen::E || l.g == Gen::F;
    if (!zero) s += c;
  }
  return s;
}

namespace {

int next_index(int i, int n) { return i % n + 1; }

UElement antipode_letter(int n, const Letter& l) {
  const int j = next_index(l.i, n);
  switch (l.g) {
    case Gen::E:
      return UElement::word(n, {l, {Gen::Kinv, l.i}, {Gen::K, j}}, -1);
    case Gen::F:
      return UElement::word(n, {{Gen::K, l.i}, {Gen::Kinv, j}, l}, -1);
    case Gen::K: return UElement::word(n, {{Gen::Kinv, l.i}});
    case Gen::Kinv: return UElement::word(n, {{Gen::K, l.i}});
    case Gen::R: return UElement::word(n, {{Gen::Rinv, 0}});
    case Gen::Rinv: return UElement::word(n, {{Gen::R, 0}});
  }
  throw std::logic_error("unknown generator");
}

std::vector<CoproductTerm> coproduct_letter(int n, const Letter& l) {
  const int j = next_index(l.i, n);
  switch (l.g) {
    case Gen::E:
      return {{1, {l}, {{Gen::K, l.i}, {Gen::Kinv, j}}}, {1, {}, {l}}};
    case Gen::F:
      return {{1, {{Gen::Kinv, l.i}, {Gen::K, j}}, {l}}, {1, {l}, {}}};
    default: return {{1, {l}, {l}}};
  }
}

}  // namespace

UElement antipode(const UElement& u) {
  UElement out(u.n());
  for (const auto& [w, c] : u.terms()) {
    UElement acc = UElement::word(u.n(), {}, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * antipode_letter(u.n(), *it);
    out += acc;
  }
  return out;
}

std::vector<CoproductTerm> coproduct(int n, const GeneratorWord& w) {
  std::vector<CoproductTerm> acc{{1, {}, {}}};
  for (const auto& l : w) {
    std::vector<CoproductTerm> next;
    for (const auto& a : acc)
      for (const auto& b : coproduct_letter(n, l)) {
        CoproductTerm t{a.coeff * b.coeff, a.left, a.right};
        t.left.insert(t.left.end(), b.left.begin(), b.left.end());
        t.right.insert(t.right.end(), b.right.begin(), b.right.end());
        next.push_back(std::move(t));
      }
    acc = std::move(next);
  }
  return acc;
}

std::vector<CoproductTerm> coproduct(const UElement& u) {
  std::vector<CoproductTerm> out;
  for (const auto& [w, c] : u.terms())
    for (auto t : coproduct(u.n(), w)) {
      t.coeff *= c;
      out.push_back(std::move(t));
    }
  return out;
}

}  // namespace aqs
