#include "doctest.h"
#include "jetci/json_io.hpp"

using namespace jetci;

TEST_CASE("polynomials round-trip") {
  const auto d1 = MultidegreePoly::variable(2, 0), d2 = MultidegreePoly::variable(2, 1);
  const auto p = d1 * d2 * BigInt("123456789012345678901234567890") - d1 + MultidegreePoly::constant(2, 15);
  const Json j = poly_to_json(p);
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(Json::parse(j.dump())) == p);
  CHECK(j["text"] == p.to_string());
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"num_vars": 2})")), std::invalid_argument);
}

TEST_CASE("Segre table layout") {
  const ModelParams params(4, 2);
  const Json j = segre_table_to_json(params, 0, segre_cotangent(params, 0));
  CHECK(j["N"] == 4);
  CHECK(j["c"] == 2);
  REQUIRE(j["classes"].size() == 3);
  CHECK(j["classes"][2][0] == 2);
  CHECK(poly_from_json(j["classes"][2][1]) == segre_closed_form(params, 2));
}

TEST_CASE("certificate and bound reports") {
  const JetTower tower(ModelParams(4, 2));
  const Json cert = certificate_to_json(tower.morse_certificate(4, {34, 34}));
  CHECK(cert["value"] == "15");
  CHECK(cert["positive"] == true);
  CHECK(cert["kappa"] == 1);
  CHECK(certificate_to_json(tower.morse_certificate(4))["value"].is_null());

  const Json bound = bound_report_to_json(bound_report(4, 2, 4, BoundMethod::dim2));
  CHECK(bound["gamma"] == "34");
  CHECK(bound["method"] == "dim2");
  CHECK(bound["coefficients"] == Json::array({"15", "-17", "1"}));
}

TEST_CASE("tangency report") {
  const UniversalChart chart(2, {2});
  const auto field = build_Tj(chart, 1);
  const Json j = tangency_to_json("tj", true, point_tangency_check(chart, field, 5, 42), field.pole_orders());
  CHECK(j["identical_vanishing"] == true);
  CHECK(j["seed"] == 42);
  CHECK(j["residuals"].empty());
  CHECK(tangency_to_json("talpha", std::nullopt, {}, {})["identical_vanishing"] == "n/a");
}
