#include "aqs/io/json_io.hpp"
#include "doctest.h"

using namespace aqs;

TEST_CASE("laurent round trip") {
  const LaurentPoly p{{-1, 2}, {0, 1}, {3, -4}};
  CHECK(to_json(p).dump() == R"({"-1":2,"0":1,"3":-4})");
  CHECK(laurent_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(laurent_from_json(parse_json(R"({"x":1})")), InputError);
}

TEST_CASE("element round trips") {
  const WindowPerm w(3, {2, 1, 6});
  CHECK(perm_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(perm_from_json(parse_json(R"({"r":3,"window":[1,1,3]})")), InvariantError);

  HeckeElement h = t_basis(w) * LaurentPoly::v(-1);
  h += t_basis(WindowPerm::gen_s(3, 3));
  CHECK(hecke_from_json(parse_json(to_json(h).dump())) == h);

  const SchurElement s = phi(Weight({2, 1, 0}), Weight({1, 1, 1}), WindowPerm::identity(3)) * LaurentPoly::q();
  CHECK(schur_from_json(parse_json(to_json(s).dump())) == s);
  const auto sj = parse_json(
      R"({"n":3,"r":3,"terms":[{"lambda":[2,1,0],"mu":[1,1,1],"d":{"window":[1,2,3]},"coeff":{"0":1}}]})");
  CHECK(schur_from_json(sj) == phi(Weight({2, 1, 0}), Weight({1, 1, 1}), WindowPerm::identity(3)));
  CHECK_THROWS(schur_from_json(parse_json(
      R"({"n":3,"r":3,"terms":[{"lambda":[2,1,0],"mu":[2,1,0],"d":{"window":[2,1,3]},"coeff":{"0":1}}]})")));

  TensorVector x(3, 3);
  x.add_term({1, 2, 3}, 1);
  x.add_term({0, -4, 7}, LaurentPoly::v(2));
  CHECK(tensor_from_json(parse_json(to_json(x).dump())) == x);
  CHECK_THROWS_AS(tensor_from_json(parse_json(R"({"n":3,"r":3,"terms":[{"key":[1,2],"coeff":{"0":1}}]})")),
                  InputError);
}

TEST_CASE("malformed text") { CHECK_THROWS_AS(parse_json("{"), InputError); }

TEST_CASE("report json") {
  SuiteReport rep;
  rep.suite = "demo";
  rep.add("b", true);
  rep.add("a", false, "witness");
  rep.sort_checks();
  const Json j = to_json(rep);
  CHECK(j["pass"] == false);
  CHECK(j["checks"][0]["name"] == "a");
  CHECK(j["checks"][0]["witness"] == "witness");
  CHECK_FALSE(j["checks"][1].contains("witness"));
}
