#include "aqs/io/json_io.hpp"

#include <charconv>

namespace aqs {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<long> long_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<long> out;
  for (const auto& x : j) out.push_back(as_long(x, what));
  return out;
}

Weight weight_from_json(const Json& j, int n, int r) {
  const auto parts = long_array(j, "weight");
  if (static_cast<int>(parts.size()) != n) throw InputError("weight must have n = " + std::to_string(n) + " parts");
  long sum = 0;
  std::vector<int> p;
  for (long x : parts) {
    if (x < 0) throw InvariantError("weight parts must be non-negative");
    sum += x;
    p.push_back(static_cast<int>(x));
  }
  if (sum != r) throw InvariantError("weight parts must sum to r = " + std::to_string(r));
  return Weight(std::move(p));
}

int period_of(const Json& j) {
  const long r = as_long(field(j, "r"), "r");
  if (r < 3 || r > kMaxPeriod) throw InvariantError("r must lie in 3.." + std::to_string(kMaxPeriod));
  return static_cast<int>(r);
}

WindowPerm window_of(int r, const Json& j) {
  const auto w = long_array(j, "window");
  return WindowPerm(r, w);
}

const Json& terms_of(const Json& j) {
  const Json& t = field(j, "terms");
  if (!t.is_array()) throw InputError("terms must be an array");
  return t;
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& t : p.terms()) {
    const mpz_class& c = t.coeff;
    if (c.fits_slong_p()) out[std::to_string(t.exp)] = c.get_si();
    else out[std::to_string(t.exp)] = c.get_str();
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (j.is_number_integer()) return LaurentPoly(j.get<long>());
  if (!j.is_object()) throw InputError("Laurent polynomial must be an object of exponent: coefficient");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    const auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), e);
    if (ec != std::errc() || ptr != k.data() + k.size()) throw InputError("bad exponent '" + k + "'");
    mpz_class c;
    if (v.is_number_integer()) c = v.get<long>();
    else if (v.is_string() && c.set_str(v.get<std::string>(), 10) == 0) {
    } else throw InputError("bad coefficient for exponent " + k);
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

Json to_json(const WindowPerm& w) { return Json{{"r", w.r()}, {"window", w.window()}}; }

WindowPerm perm_from_json(const Json& j) { return window_of(period_of(j), field(j, "window")); }

Json to_json(const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [w, c] : h.terms()) terms.push_back({{"window", w.window()}, {"coeff", to_json(c)}});
  return Json{{"r", h.r()}, {"terms", terms}};
}

HeckeElement hecke_from_json(const Json& j) {
  const int r = period_of(j);
  HeckeElement h(r);
  for (const auto& t : terms_of(j)) h.add_term(window_of(r, field(t, "window")), laurent_from_json(field(t, "coeff")));
  return h;
}

Json to_json(const SchurElement& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms())
    terms.push_back({{"lambda", k.lambda.parts()},
                     {"mu", k.mu.parts()},
                     {"d", Json{{"window", k.d.window()}}},
                     {"coeff", to_json(c)}});
  return Json{{"n", s.n()}, {"r", s.r()}, {"terms", terms}};
}

SchurElement schur_from_json(const Json& j) {
  const int r = period_of(j);
  const long n = as_long(field(j, "n"), "n");
  if (n < 1 || n > 12) throw InvariantError("n must lie in 1..12");
  SchurElement s(static_cast<int>(n), r);
  for (const auto& t : terms_of(j)) {
    const Weight l = weight_from_json(field(t, "lambda"), static_cast<int>(n), r);
    const Weight m = weight_from_json(field(t, "mu"), static_cast<int>(n), r);
    const Json& d = field(t, "d");
    const WindowPerm w = window_of(r, d.is_object() ? field(d, "window") : d);
    s += phi(l, m, w, true) * laurent_from_json(field(t, "coeff"));
  }
  return s;
}

Json to_json(const TensorVector& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms()) terms.push_back({{"key", k}, {"coeff", to_json(c)}});
  return Json{{"n", x.n()}, {"r", x.r()}, {"terms", terms}};
}

TensorVector tensor_from_json(const Json& j) {
  const long n = as_long(field(j, "n"), "n");
  const long r = as_long(field(j, "r"), "r");
  if (n < 1 || r < 1) throw InvariantError("n and r must be positive");
  TensorVector x(static_cast<int>(n), static_cast<int>(r));
  for (const auto& t : terms_of(j)) {
    const auto key = long_array(field(t, "key"), "key");
    if (static_cast<long>(key.size()) != r) throw InputError("tensor key must have r entries");
    x.add_term(key, laurent_from_json(field(t, "coeff")));
  }
  return x;
}

Json to_json(const SuiteReport& rep) {
  Json params = Json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e{{"name", c.name}, {"pass", c.pass}, {"instances", c.instances}, {"failures", c.failures}};
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(e);
  }
  return Json{{"suite", rep.suite}, {"pass", rep.passed()}, {"params", params}, {"checks", checks}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace aqs
