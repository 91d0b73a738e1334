#include "qsiegel/report.hpp"

#include "qsiegel/error.hpp"

namespace qsiegel {

namespace {

// -0.0 prints as "-0.0"; reports should not depend on the sign of zero.
double clean(double x) { return x + 0.0; }

}  // namespace

ojson complex_json(Complex c) { return ojson::array({clean(c.real()), clean(c.imag())}); }

ojson complex_vector_json(const CVec& v) {
  auto a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v(i)));
  return a;
}

ojson real_vector_json(const Vec& v) {
  auto a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(clean(v(i)));
  return a;
}

ojson point_json(const SiegelPoint& p) {
  ojson j;
  j["z"] = complex_vector_json(p.z);
  j["v"] = complex_vector_json(p.v);
  return j;
}

namespace {

CVec complex_vector_from(const nlohmann::json& a, const char* what) {
  if (!a.is_array()) throw Error(ErrorCode::SpecError, std::string(what) + " must be an array");
  CVec out(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& c = a[i];
    if (c.is_number()) {
      out(static_cast<Eigen::Index>(i)) = c.get<double>();
    } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
      out(static_cast<Eigen::Index>(i)) = Complex(c[0].get<double>(), c[1].get<double>());
    } else {
      throw Error(ErrorCode::SpecError,
                  std::string(what) + " entries must be numbers or [re, im] pairs");
    }
  }
  return out;
}

}  // namespace

SiegelPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("z") || !j.contains("v")) {
    throw Error(ErrorCode::SpecError, "a point needs 'z' and 'v'");
  }
  return {complex_vector_from(j["z"], "z"), complex_vector_from(j["v"], "v")};
}

ojson certificate_json(const Certificate& c) {
  ojson j;
  j["condition"] = c.condition;
  j["verdict"] = c.verdict;
  j["residual"] = c.residual;
  if (c.witness) {
    ojson w;
    auto vecs = ojson::array();
    for (const Vec& v : c.witness->vectors) vecs.push_back(real_vector_json(v));
    w["vectors"] = vecs;
    if (c.witness->point) w["point"] = point_json(*c.witness->point);
    if (c.witness->x) w["x"] = real_vector_json(*c.witness->x);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["tol"] = c.tol;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  if (c.metric_scale) {
    j["metric_scale"] = *c.metric_scale;
  } else {
    j["metric_scale"] = nullptr;
  }
  return j;
}

ojson certify_report_json(const CertifyReport& r) {
  ojson j;
  j["consistent"] = r.consistent;
  j["mf"] = r.mf;
  auto certs = ojson::array();
  certs.push_back(certificate_json(r.imq));
  certs.push_back(certificate_json(r.coisotropic));
  certs.push_back(certificate_json(r.orbit));
  j["certificates"] = certs;
  j["orthocomplement"] = r.orthocomplement ? certificate_json(*r.orthocomplement) : ojson(nullptr);
  return j;
}

ojson gram_report_json(const GramReport& r) {
  ojson j;
  j["points"] = r.points;
  j["min_eigenvalue"] = r.min_eigenvalue;
  j["norm"] = r.norm;
  j["hermitian_defect"] = r.hermitian_defect;
  j["verdict"] = r.psd ? "PSD" : "not PSD";
  return j;
}

ojson bergman_json(const BergmanEstimate& b) {
  ojson j;
  j["value"] = complex_json(b.value);
  j["std_error"] = b.std_error;
  j["method"] = b.quadrature ? "gauss_kronrod" : "importance_sampling";
  j["samples"] = b.samples;
  return j;
}

}  // namespace qsiegel
