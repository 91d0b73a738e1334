#include <set>

#include <doctest.h>

#include "qsiegel/catalog.hpp"
#include "qsiegel/certifier.hpp"
#include "qsiegel/error.hpp"
#include "qsiegel/spec_file.hpp"
#include "support.hpp"

using namespace qsiegel;
using namespace qsiegel::testing;

namespace {

// Definition-chasing oracle for Im Q(S, S) = 0: S = i (W^perp) in C^n,
// Im Q_k(a, b) = Im 2 b^H R_k a, scanned over a basis.
bool imq_oracle(const JordanRepresentation& rep, const Mat& w_basis) {
  const int n = rep.n();
  Mat perp;
  if (w_basis.cols() == 0) {
    perp = Mat::Identity(2 * n, 2 * n);
  } else {
    Eigen::FullPivLU<Mat> lu(w_basis.transpose());
    perp = lu.kernel();
    if (lu.rank() == 2 * n) perp.resize(2 * n, 0);
  }
  std::vector<CVec> s;
  for (Eigen::Index c = 0; c < perp.cols(); ++c) {
    const CVec v = perp.col(c).head(n).cast<Complex>() + Complex(0, 1) * perp.col(c).tail(n).cast<Complex>();
    s.push_back(Complex(0, 1) * v);
  }
  double worst = 0.0;
  for (const auto& a : s)
    for (const auto& b : s)
      for (int k = 0; k < rep.algebra().dim(); ++k)
        worst = std::max(worst, std::abs((2.0 * b.dot(rep.r_basis(k) * a)).imag()));
  return worst < 1e-9;
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto names = catalog_list();
  CHECK(names.size() == catalog_entries().size());
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const char* expected : {"heisenberg-rank1", "sym2-main2", "sym2-skew"}) {
    CHECK(catalog_get(expected).name == expected);
  }
  CHECK_THROWS_AS(catalog_get("spin-factor"), Error);
  CHECK_THROWS_AS(catalog_get("diag2").variant("W=nope"), Error);

  const auto& h = catalog_get("heisenberg-rank1");
  CHECK(h.variant("W=C").expected_mf);
  CHECK(h.variant("W=R").expected_mf);
  CHECK_FALSE(h.variant("W=0").expected_mf);

  int mf = 0, not_mf = 0;
  for (const auto& e : catalog_entries()) {
    for (const auto& v : e.variants) (v.expected_mf ? mf : not_mf)++;
  }
  CHECK(mf + not_mf >= 6);
  CHECK(mf > 0);
  CHECK(not_mf > 0);
}

TEST_CASE("catalog variants load and match the oracle") {
  for (const auto& e : catalog_entries()) {
    const auto rep = e.representation();
    for (const auto& v : e.variants) {
      CAPTURE(e.name);
      CAPTURE(v.name);
      CHECK(v.basis.rows() == 2 * rep.n());
      CHECK(e.subspace(v).dim() == v.basis.cols());
      CHECK(imq_oracle(rep, v.basis) == v.expected_mf);
    }
  }
}

TEST_CASE("catalog verdicts") {
  CertifyConfig cfg;
  cfg.coisotropic_samples = 5;
  cfg.orbit_samples = 10;
  cfg.orthocomplement_samples = 5;
  for (const auto& e : catalog_entries()) {
    const auto rep = e.representation();
    for (const auto& v : e.variants) {
      CAPTURE(e.name);
      CAPTURE(v.name);
      const auto r = certify_all(rep, e.subspace(v), cfg);
      CHECK(r.consistent);
      CHECK(r.mf == v.expected_mf);
    }
  }
}

TEST_CASE("spec export round trip") {
  const auto& e = catalog_get("sym2-main2");
  const auto spec = spec_from_catalog(e, e.variant("W=P+S"));
  const auto again = parse_spec(nlohmann::json::parse(spec_to_json(spec).dump()));
  CHECK(again.algebra_kind == "sym_real");
  CHECK(again.algebra_param == 2);
  CHECK(again.w().equals(e.subspace(e.variant("W=P+S"))));
  REQUIRE(again.e1.has_value());
  CHECK((*again.e1 - *e.e1).norm() == 0.0);
}

TEST_CASE("spec validation") {
  using nlohmann::json;
  const json ok = json::parse(R"({"algebra":{"kind":"rank1"},"W":{"basis":[[1,0]]}})");
  CHECK(parse_spec(ok).w().dim() == 1);
  CHECK(parse_spec(json::parse(R"({"algebra":{"kind":"rank1"},"W":{"basis":[]}})")).w().dim() == 0);

  for (const char* bad : {
           R"({"W":{"basis":[[1,0]]}})",
           R"({"algebra":{"kind":"rank1"}})",
           R"({"algebra":{"kind":"rank1"},"W":{"basis":[[1,0,0]]}})",
           R"({"algebra":{"kind":"rank1"},"W":{"basis":[[1,0],[2,0]]}})",
           R"({"algebra":{"kind":"sym_real"},"W":{"basis":[]}})",
           R"({"algebra":{"kind":"octonion","n":3},"W":{"basis":[]}})",
           R"({"algebra":{"kind":"rank1"},"W":{"basis":[["a",0]]}})",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_spec(json::parse(bad)), Error);
  }
}
