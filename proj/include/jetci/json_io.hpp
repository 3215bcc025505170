#pragma once

// JSON encodings of the computed objects. Big integers and rationals are
// written as decimal strings so no precision is lost.

#include "json.hpp"

#include "jetci/bounds.hpp"
#include "jetci/chow.hpp"
#include "jetci/jet_tower.hpp"
#include "jetci/schur.hpp"
#include "jetci/vecfields.hpp"

namespace jetci {

using Json = nlohmann::json;

/// {"num_vars", "terms": [{"coeff", "exps"}], "text"}; terms in graded-lex order.
Json poly_to_json(const MultidegreePoly& p);
/// Inverse of poly_to_json ("text" is ignored). Throws std::invalid_argument on malformed input.
MultidegreePoly poly_from_json(const Json& j);

/// {"N", "n", "c", "m", "classes": [[j, poly]]}: s_j(Omega_X(m)) = poly * h^j.
Json segre_table_to_json(const ModelParams& params, int twist, const std::vector<ChowClass>& classes);

Json certificate_to_json(const MorseCertificate& cert);
/// Present when the certificate is symbolic: the D_a^{N,n,j} coefficients.
Json elementary_expansion_to_json(const std::vector<std::pair<int, BigInt>>& coeffs);

Json schur_report_to_json(const SchurReport& report);
Json bound_report_to_json(const BoundReport& report);

Json tangency_to_json(const std::string& family, std::optional<bool> identical_vanishing,
                      const TangencyReport& report, const PoleOrders& poles);

}  // namespace jetci
