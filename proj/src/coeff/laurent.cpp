#include "aqs/coeff/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace aqs {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long>> terms) {
  for (const auto& [e, c] : terms) terms_.push_back({e, mpz_class(c)});
  normalize();
}

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({exp, c});
  return p;
}

void LaurentPoly::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

mpz_class LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

namespace {

template <bool Subtract>
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      if constexpr (Subtract) {
        out.push_back({b[j].exp, -b[j].coeff});
      } else {
        out.push_back(b[j]);
      }
      ++j;
    } else {
      mpz_class c = Subtract ? mpz_class(a[i].coeff - b[j].coeff)
                             : mpz_class(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (b.terms_.size() == 1) {
    out.terms_ = a.terms_;
    for (auto& t : out.terms_) {
      t.exp += b.terms_[0].exp;
      t.coeff *= b.terms_[0].coeff;
    }
    return out;
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpz_addmul(dense[x.exp + y.exp - lo].get_mpz_t(), x.coeff.get_mpz_t(),
                 y.coeff.get_mpz_t());
    }
  }
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (dense[k] != 0) out.terms_.push_back({static_cast<int>(k) + lo, std::move(dense[k])});
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::shift(int k) {
  for (auto& t : terms_) t.exp += k;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  return p.shift(k);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exp <=> o.terms_[i].exp; c != 0) return c;
    const int cmp = ::cmp(terms_[i].coeff, o.terms_[i].coeff);
    if (cmp != 0) return cmp < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> o.terms_.size();
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.push_back({-it->exp, it->coeff});
  return p;
}

mpz_class LaurentPoly::specialize_v1() const {
  mpz_class s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

mpq_class LaurentPoly::evaluate(const mpq_class& at) const {
  if (at == 0) throw std::domain_error("LaurentPoly::evaluate at v = 0");
  mpq_class s = 0;
  for (const auto& t : terms_) {
    mpq_class power = 1;
    const mpq_class base = t.exp >= 0 ? at : mpq_class(1) / at;
    for (int k = 0; k < std::abs(t.exp); ++k) power *= base;
    s += power * t.coeff;
  }
  s.canonicalize();
  return s;
}

namespace {

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long p) {
  return static_cast<unsigned long long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long p) {
  unsigned long long r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

unsigned long long LaurentPoly::evaluate_mod(unsigned long long x, unsigned long long p) const {
  const unsigned long long xinv = powmod(x, p - 2, p);
  unsigned long long s = 0;
  for (const auto& t : terms_) {
    const unsigned long long base = t.exp >= 0 ? x : xinv;
    const unsigned long long pw = powmod(base, static_cast<unsigned long long>(std::abs(t.exp)), p);
    mpz_class c = t.coeff % mpz_class(static_cast<unsigned long>(p));
    if (c < 0) c += static_cast<unsigned long>(p);
    s = (s + mulmod(c.get_ui(), pw, p)) % p;
  }
  return s;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("LaurentPoly::divide_exact by zero");
  if (is_zero()) return LaurentPoly{};
  // Long division from the top: work with the remainder as a dense map.
  std::map<int, mpz_class> rem;
  for (const auto& t : terms_) rem[t.exp] = t.coeff;
  const Term& lead = divisor.terms_.back();
  const int span = divisor.max_exp() - divisor.min_exp();
  LaurentPoly quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (top->first - span < rem.begin()->first) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    const mpz_class qc = top->second / lead.coeff;
    const int qe = top->first - lead.exp;
    quotient.terms_.push_back({qe, qc});
    for (const auto& d : divisor.terms_) {
      auto& slot = rem[qe + d.exp];
      slot -= qc * d.coeff;
      if (slot == 0) rem.erase(qe + d.exp);
    }
  }
  std::reverse(quotient.terms_.begin(), quotient.terms_.end());
  return quotient;
}

LaurentPoly LaurentPoly::nonnegative_part() const {
  LaurentPoly p;
  for (const auto& t : terms_)
    if (t.exp >= 0) p.terms_.push_back(t);
  return p;
}

bool LaurentPoly::is_q_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.exp >= 0 && t.exp % 2 == 0; });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << "-";
      c = abs(c);
    }
    first = false;
    const bool unit = (c == 1);
    if (it->exp == 0) {
      os << c;
      continue;
    }
    if (!unit) os << c << "*";
    os << "v";
    if (it->exp != 1) os << "^" << it->exp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace aqs
