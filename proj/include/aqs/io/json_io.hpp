#pragma once

// JSON encodings used by the command-line tool.

#include <string>

#include "json.hpp"

#include "aqs/coeff/laurent.hpp"
#include "aqs/hecke/hecke_element.hpp"
#include "aqs/quantum/tensor.hpp"
#include "aqs/schur/schur_element.hpp"
#include "aqs/verify/report.hpp"
#include "aqs/weyl/window_perm.hpp"

namespace aqs {

using Json = nlohmann::ordered_json;

// Malformed input: wrong shape, wrong types, inconsistent sizes.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// {"-1": 2, "0": 1}: exponent of v to integer coefficient.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"r": 3, "window": [...]}
Json to_json(const WindowPerm& w);
WindowPerm perm_from_json(const Json& j);

// {"r": 3, "terms": [{"window": [...], "coeff": {...}}]}
Json to_json(const HeckeElement& h);
HeckeElement hecke_from_json(const Json& j);

// {"n": 3, "r": 3, "terms": [{"lambda": [...], "mu": [...], "d": {"window": [...]}, "coeff": {...}}]}
Json to_json(const SchurElement& s);
SchurElement schur_from_json(const Json& j);

// {"n": 3, "r": 3, "terms": [{"key": [...], "coeff": {...}}]}
Json to_json(const TensorVector& x);
TensorVector tensor_from_json(const Json& j);

Json to_json(const SuiteReport& rep);

// Parses text, raising InputError on syntax errors.
Json parse_json(const std::string& text);

}  // namespace aqs
