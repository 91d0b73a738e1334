#pragma once

#include <string>

#include <json.hpp>

#include "qsiegel/certifier.hpp"
#include "qsiegel/cone_integrals.hpp"
#include "qsiegel/kernel.hpp"

namespace qsiegel {

using ojson = nlohmann::ordered_json;

/// Complex scalars are [re, im] pairs.
ojson complex_json(Complex c);
ojson complex_vector_json(const CVec& v);
ojson real_vector_json(const Vec& v);
ojson point_json(const SiegelPoint& p);

/// Accepts {"z": [[re, im], ...], "v": [[re, im], ...]}. Throws SpecError.
SiegelPoint point_from_json(const nlohmann::json& j);

ojson certificate_json(const Certificate& c);
ojson certify_report_json(const CertifyReport& r);
ojson gram_report_json(const GramReport& r);
ojson bergman_json(const BergmanEstimate& b);

}  // namespace qsiegel
