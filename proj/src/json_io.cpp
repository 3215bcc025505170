#include "jetci/json_io.hpp"

#include <stdexcept>

namespace jetci {

namespace {

Json partition_json(const Partition& p) { return p.parts(); }

}  // namespace

Json poly_to_json(const MultidegreePoly& p) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) terms.push_back({{"coeff", coeff.get_str()}, {"exps", exps}});
  return {{"num_vars", p.num_vars()}, {"terms", terms}, {"text", p.to_string()}};
}

MultidegreePoly poly_from_json(const Json& j) {
  try {
    MultidegreePoly p(j.at("num_vars").get<int>());
    for (const auto& term : j.at("terms")) {
      BigInt coeff;
      if (coeff.set_str(term.at("coeff").get<std::string>(), 10) != 0) {
        throw std::invalid_argument("poly_from_json: bad coefficient");
      }
      p.add_term(term.at("exps").get<Exponents>(), coeff);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("poly_from_json: ") + e.what());
  }
}

Json segre_table_to_json(const ModelParams& params, int twist, const std::vector<ChowClass>& classes) {
  Json rows = Json::array();
  for (int j = 0; j < static_cast<int>(classes.size()) && j <= params.n(); ++j) {
    rows.push_back(Json::array({j, poly_to_json(classes[static_cast<std::size_t>(j)].coeff(j))}));
  }
  return {{"N", params.N()}, {"n", params.n()}, {"c", params.c()}, {"m", twist}, {"classes", rows}};
}

Json certificate_to_json(const MorseCertificate& cert) {
  Json out = {{"N", cert.params.N()},
              {"n", cert.params.n()},
              {"c", cert.params.c()},
              {"kappa", cert.params.kappa()},
              {"a", cert.a},
              {"m", cert.m},
              {"difference", poly_to_json(cert.difference)}};
  Json at = Json::array();
  for (const auto& d : cert.evaluated_at) at.push_back(d.get_str());
  out["evaluated_at"] = at;
  out["value"] = cert.value ? Json(cert.value->get_str()) : Json(nullptr);
  out["positive"] = cert.positive ? Json(*cert.positive) : Json(nullptr);
  return out;
}

Json elementary_expansion_to_json(const std::vector<std::pair<int, BigInt>>& coeffs) {
  Json out = Json::array();
  for (const auto& [j, v] : coeffs) out.push_back({{"j", j}, {"coeff", v.get_str()}});
  return out;
}

Json schur_report_to_json(const SchurReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    records.push_back({{"lambda", partition_json(r.lambda)},
                       {"conjugate", partition_json(r.conjugate)},
                       {"full", poly_to_json(r.full)},
                       {"dominant", poly_to_json(r.dominant)},
                       {"dominant_positive", r.dominant_positive},
                       {"schur_identity", r.schur_identity},
                       {"dominant_determinant_identity", r.dominant_determinant_identity},
                       {"threshold", r.threshold.get_str()},
                       {"threshold_method", r.threshold_method}});
  }
  return {{"N", report.params.N()},
          {"n", report.params.n()},
          {"c", report.params.c()},
          {"a", report.a},
          {"records", records},
          {"threshold", report.threshold.get_str()},
          {"threshold_ceil", ceil_rational(report.threshold).get_str()}};
}

Json bound_report_to_json(const BoundReport& report) {
  Json coeffs = Json::array();
  for (const auto& c : report.coefficients) coeffs.push_back(c.get_str());
  Json out = {{"N", report.N},
              {"n", report.n},
              {"a", report.a},
              {"coefficients", coeffs},
              {"gamma", report.gamma.get_str()},
              {"gamma_ceil", ceil_rational(report.gamma).get_str()},
              {"method", to_string(report.method)},
              {"found", report.found}};
  if (report.scan_limit) out["scan_limit"] = *report.scan_limit;
  return out;
}

Json tangency_to_json(const std::string& family, std::optional<bool> identical_vanishing,
                      const TangencyReport& report, const PoleOrders& poles) {
  Json residuals = Json::array();
  for (const auto& r : report.nonzero) {
    residuals.push_back({{"sample", r.sample}, {"equation", r.equation}, {"value", r.value.get_str()}});
  }
  return {{"family", family},
          {"identical_vanishing", identical_vanishing ? Json(*identical_vanishing) : Json("n/a")},
          {"samples", report.samples},
          {"checks", report.checks},
          {"resamples", report.resamples},
          {"residuals", residuals},
          {"pole_orders", {{"z_degree", poles.z_degree}, {"a_degree", poles.a_degree}}},
          {"seed", report.seed}};
}

}  // namespace jetci
