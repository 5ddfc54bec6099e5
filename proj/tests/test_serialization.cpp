#include <catch2/catch_amalgamated.hpp>

#include <cycleforge/cycle_polynomials.hpp>
#include <cycleforge/factorization.hpp>
#include <cycleforge/serialization.hpp>

using namespace cycleforge;

TEST_CASE("polynomials round-trip through json") {
  const Polynomial p({0, 1, 0, Rational(1, 2)}, Indet::q);
  const Json j = poly_to_json(p);
  REQUIRE(j.is_array());
  CHECK(j == Json::array({"0", "1", "0", "1/2"}));
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(j, Indet::t).indeterminate() == Indet::t);

  // Integer entries are accepted on the way in.
  CHECK(poly_from_json(Json::array({0, 1, 0, 1})) ==
        Polynomial({0, 1, 0, 1}, Indet::q));
  CHECK(poly_to_json(Polynomial(Indet::q)) == Json::array());
  CHECK(poly_from_json(Json::array()).is_zero());
  CHECK_THROWS_AS(poly_from_json(Json::array({"1/0"})), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(Json{{"not", "array"}}), std::invalid_argument);
}

TEST_CASE("partition serialization") {
  CHECK(partition_to_json(Partition({3, 3, 2})) == Json::array({3, 3, 2}));
  CHECK(partition_to_json(Partition()) == Json::array());
}

TEST_CASE("result envelopes carry the agreed keys") {
  const CyclePolynomial cp = p_lambda(Partition({3}));
  const Json pj = poly_result_json(3, cp.lambda, method_name(cp.method), cp.poly);
  CHECK(pj["n"] == 3);
  CHECK(pj["lambda"] == Json::array({3}));
  CHECK(pj["method"] == "operator");
  CHECK(pj["poly"] == Json::array({"0", "1", "0", "1"}));

  const Json prob = probability_json(pi_closed(4, 2));
  CHECK(prob["n"] == 4);
  CHECK(prob["k"] == 2);
  CHECK(prob["method"] == "closed");
  CHECK(prob["value"] == "7/18");

  const Json rep = report_to_json(verify_real_part(cp.poly, Rational(0)));
  CHECK(rep["verdict"] == true);
  CHECK(rep["alpha"] == "0");
  CHECK(rep["poly"] == Json::array({"0", "1", "0", "1"}));
  CHECK(rep.contains("witness"));
}

TEST_CASE("coefficient lists parse") {
  CHECK(parse_coeff_list("1,0,2") == std::vector<Rational>{1, 0, 2});
  CHECK(parse_coeff_list("-1/2") == std::vector<Rational>{Rational(-1, 2)});
  CHECK_THROWS_AS(parse_coeff_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_coeff_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coeff_list("1,x"), std::invalid_argument);
}
