// Acceptance suite: one PASS/FAIL line per criterion.
// Exit status 2 when the certifiers disagree on a catalog entry, 1 on any
// other failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qsiegel/catalog.hpp"
#include "qsiegel/certifier.hpp"
#include "qsiegel/cone_integrals.hpp"
#include "qsiegel/kernel.hpp"
#include "qsiegel/report.hpp"
#include "support.hpp"

using namespace qsiegel;
using namespace qsiegel::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<EuclideanJordanAlgebra> builtin_algebras() {
  return {EuclideanJordanAlgebra::diagonal(1),     EuclideanJordanAlgebra::diagonal(2),
          EuclideanJordanAlgebra::diagonal(3),     EuclideanJordanAlgebra::sym_real(2),
          EuclideanJordanAlgebra::sym_real(3),     EuclideanJordanAlgebra::sym_real(4),
          EuclideanJordanAlgebra::herm_complex(2), EuclideanJordanAlgebra::herm_complex(3)};
}

struct MfCase {
  const CatalogEntry* entry;
  const WVariant* variant;
};

std::vector<MfCase> mf_cases() {
  std::vector<MfCase> out;
  for (const auto& e : catalog_entries())
    for (const auto& v : e.variants)
      if (v.expected_mf) out.push_back({&e, &v});
  return out;
}

Outcome c1_axioms() {
  double worst = 0.0;
  int samples = 0;
  for (const auto& alg : builtin_algebras()) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      CounterRng rng(101, s);
      const Vec a = random_element(alg, rng), b = random_element(alg, rng),
                c = random_element(alg, rng);
      const Vec ab = alg.product(a, b), a2 = alg.product(a, a);
      worst = std::max(worst, (ab - alg.product(b, a)).norm());
      worst = std::max(worst, (alg.product(a, alg.product(a2, b)) - alg.product(a2, ab)).norm());
      worst = std::max(worst, std::abs(ab.dot(c) - b.dot(alg.product(a, c))));
      const Mat ta = left_mult(alg, a), tb = left_mult(alg, b), tc = left_mult(alg, c);
      const Mat tbc = left_mult(alg, alg.product(b, c)), tca = left_mult(alg, alg.product(c, a)),
                tab = left_mult(alg, ab);
      worst = std::max(worst,
                       (ta * tbc - tbc * ta + tb * tca - tca * tb + tc * tab - tab * tc).norm());
      ++samples;
    }
  }
  return {worst <= 1e-9, fmt("max residual %.2e over %d samples", worst, samples)};
}

Outcome c2_spectral() {
  double worst = 0.0;  // residual divided by its allowance
  int samples = 0;
  std::vector<EuclideanJordanAlgebra> algs = builtin_algebras();
  for (const auto& base : {EuclideanJordanAlgebra::sym_real(3), EuclideanJordanAlgebra::herm_complex(2)}) {
    std::vector<Mat> mult;
    for (int i = 0; i < base.dim(); ++i) mult.push_back(base.basis_multiplication(i));
    algs.emplace_back(mult, base.unit(), base.rank(), base.labels());
  }
  for (const auto& alg : algs) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      CounterRng rng(102, s);
      const Vec x = random_element(alg, rng);
      const auto sd = spectral_decompose(alg, x);
      Vec recon = Vec::Zero(alg.dim()), total = Vec::Zero(alg.dim());
      double det = 1.0, lmax = 0.0, lmin = std::numeric_limits<double>::infinity();
      double orth = 0.0;
      for (std::size_t k = 0; k < sd.idempotents.size(); ++k) {
        const Vec& c = sd.idempotents[k];
        recon += sd.eigenvalues[k] * c;
        total += c;
        det *= std::pow(sd.eigenvalues[k], sd.multiplicities[k]);
        lmax = std::max(lmax, std::abs(sd.eigenvalues[k]));
        lmin = std::min(lmin, std::abs(sd.eigenvalues[k]));
        orth = std::max(orth, (alg.product(c, c) - c).norm());
        for (std::size_t l = k + 1; l < sd.idempotents.size(); ++l)
          orth = std::max(orth, alg.product(c, sd.idempotents[l]).norm());
      }
      const double cond = std::max(1.0, lmax / lmin);
      const double scale = std::max(1.0, x.norm());
      const double allow = 1e-8 * cond;
      worst = std::max(worst, (recon - x).norm() / scale / allow);
      worst = std::max(worst, (total - alg.unit()).norm() / allow);
      worst = std::max(worst, orth / allow);
      if (alg.has_realization()) {
        const double ref = alg.to_matrix(x).determinant().real();
        worst = std::max(worst, std::abs(det - ref) / std::max(1.0, std::abs(ref)) / allow);
      }
      // inversion is checked on invertible elements with spectral values bounded away from 0
      const Vec z = random_invertible(alg, rng);
      const auto sz = spectral_decompose(alg, z);
      double zmax = 0.0, zmin = std::numeric_limits<double>::infinity();
      for (double l : sz.eigenvalues) {
        zmax = std::max(zmax, std::abs(l));
        zmin = std::min(zmin, std::abs(l));
      }
      const Vec zi = invert(alg, z);
      worst = std::max(worst, (alg.product(z, zi) - alg.unit()).norm() / (1e-8 * zmax / zmin));
      ++samples;
    }
  }
  return {worst <= 1.0, fmt("worst residual/allowance %.2e over %d samples", worst, samples)};
}

Outcome c3_triple_complement() {
  double worst = 0.0;
  int models = 0;
  for (const auto& entry : catalog_entries()) {
    const auto rep = entry.representation();
    const auto& alg = rep.algebra();
    const Eigen::Index m = 2 * rep.n();
    for (std::uint64_t s = 0; s < 100; ++s) {
      CounterRng rng(103, s);
      const auto d = static_cast<Eigen::Index>(rng.next_u64() % (m + 1));
      const auto w = random_subspace(m, d, rng);
      const Vec x = random_invertible(alg, rng), y = random_invertible(alg, rng);
      const Mat gx = g_form(rep, x), gy = g_form(rep, y);
      const auto lhs = complement_wrt(gx, complement_wrt(gy, complement_wrt(gx, w)));
      const auto rhs = complement_wrt(g_form(rep, quad_rep(alg, x) * invert(alg, y)), w);
      worst = std::max(worst, lhs.distance(rhs));
    }
    ++models;
  }
  return {worst <= 1e-7, fmt("max projector distance %.2e over %d models x 100", worst, models)};
}

Outcome c4_propagation() {
  double worst = 0.0;
  int cases = 0;
  for (const auto& [entry, variant] : mf_cases()) {
    const auto rep = entry->representation();
    const auto w = entry->subspace(*variant);
    for (std::uint64_t s = 0; s < 50; ++s) {
      CounterRng rng(104, s);
      const Vec x = random_element(rep.algebra(), rng);
      const auto c = complement_wrt(g_form(rep, x), w);
      for (Eigen::Index a = 0; a < c.dim(); ++a)
        for (Eigen::Index b = 0; b < c.dim(); ++b)
          worst = std::max(worst, std::abs(x.dot(im_q(rep, c.basis().col(a), c.basis().col(b)))));
    }
    ++cases;
  }
  return {worst <= 1e-8, fmt("max |<x, Im Q>| %.2e over %d MF variants x 50", worst, cases)};
}

Outcome c5_equivalence() {
  int total = 0, mf_true = 0, bad = 0;
  std::string failures;
  CertifyConfig cfg;
  for (const auto& entry : catalog_entries()) {
    const auto rep = entry.representation();
    for (const auto& v : entry.variants) {
      const auto r = certify_all(rep, entry.subspace(v), cfg);
      ++total;
      if (v.expected_mf) ++mf_true;
      if (!r.consistent || r.mf != v.expected_mf) {
        ++bad;
        failures += " " + entry.name + "/" + v.name;
      }
    }
  }
  const bool pass = bad == 0 && total >= 6 && mf_true > 0 && mf_true < total;
  return {pass, fmt("%d variants (%d mf, %d not), %d coisotropic and %d orbit samples each, "
                    "%d disagreements",
                    total, mf_true, total - mf_true, cfg.coisotropic_samples, cfg.orbit_samples,
                    bad) +
                    failures};
}

Outcome c6_orthocomplement() {
  double worst = 0.0;
  int cases = 0;
  CertifyConfig cfg;
  cfg.orthocomplement_samples = 20;
  for (const auto& [entry, variant] : mf_cases()) {
    const auto c = check_orthocomplement(entry->representation(), entry->subspace(*variant), cfg);
    worst = std::max(worst, c.residual);
    ++cases;
  }
  return {worst <= 1e-7, fmt("max distance %.2e over %d MF variants x %d points", worst, cases,
                             cfg.orthocomplement_samples)};
}

// x in Lambda: open cone, closed-cone boundary, or a Gaussian draw that
// classifies; the kind rotates with the sample index.
Vec lambda_sample(const JordanRepresentation& rep, const RealSubspace& w, CounterRng& rng,
                  int kind, int counts[3]) {
  const auto& alg = rep.algebra();
  if (kind == 2) {
    for (int t = 0; t < 200; ++t) {
      const Vec x = random_element(alg, rng);
      if (classify_lambda(rep, w, x)) {
        ++counts[2];
        return x;
      }
    }
  }
  if (kind == 1) {
    const auto frame = jordan_frame(alg, random_element(alg, rng));
    Vec x = Vec::Zero(alg.dim());
    for (std::size_t k = 0; k < frame.idempotents.size(); ++k) {
      if (k % 2 == 0) x += (0.2 + 4.8 * rng.uniform()) * frame.idempotents[k];
    }
    if (classify_lambda(rep, w, x)) {
      ++counts[1];
      return x;
    }
  }
  ++counts[0];
  return random_cone_point(alg, rng);
}

Outcome c7_kernel_psd() {
  double worst = -std::numeric_limits<double>::infinity();  // min eig / max(1, |G|)
  int grams = 0;
  int counts[3] = {0, 0, 0};
  for (const auto& [entry, variant] : mf_cases()) {
    const auto rep = entry->representation();
    const auto w = entry->subspace(*variant);
    const auto s_dim = base_spaces(rep, w).s.dim();
    for (std::uint64_t s = 0; s < 20; ++s) {
      CounterRng rng(107, s);
      const Vec x = lambda_sample(rep, w, rng, static_cast<int>(s % 3), counts);
      Vec chi(s_dim);
      for (Eigen::Index k = 0; k < s_dim; ++k) chi(k) = rng.normal();
      const auto kp = build_kernel_params(rep, w, x, chi);
      std::vector<SiegelPoint> pts;
      for (int i = 0; i < 20; ++i) pts.push_back(random_domain_point(rep, rng));
      const auto g = gram_psd_report(kp, pts);
      worst = std::max(worst, -g.min_eigenvalue / std::max(1.0, g.norm));
      ++grams;
    }
  }

  const auto d2 = JordanRepresentation::standard(EuclideanJordanAlgebra::diagonal(2));
  KernelOptions loose;
  loose.require_lambda = false;
  const auto bad = build_kernel_params(d2, RealSubspace::whole(4), rvec({1, -1}), Vec(), loose);
  int found_at = -1;
  for (std::uint64_t s = 0; s < 100 && found_at < 0; ++s) {
    CounterRng rng(117, s);
    std::vector<SiegelPoint> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(random_domain_point(d2, rng));
    if (!gram_psd_report(bad, pts).psd) found_at = static_cast<int>(s);
  }
  const bool pass = worst <= 1e-8 && found_at >= 0;
  return {pass, fmt("%d Gram matrices (x: %d open, %d boundary, %d gaussian), worst "
                    "-min_eig/max(1,|G|) %.2e; negative control non-PSD at set %d",
                    grams, counts[0], counts[1], counts[2], worst, found_at)};
}

Outcome c8_main2() {
  const auto& entry = catalog_get("sym2-main2");
  const auto rep = entry.representation();
  const auto& alg = rep.algebra();
  const Vec e1 = *entry.e1;
  const PeirceSystem ps = peirce_system(alg, e1);

  CMat xm(2, 2);
  xm << 2, 1, 1, 1;
  const auto worked = main2_scalar_check(rep, e1, alg.from_matrix(xm), 100, 0);
  double worst = worked.deviation;
  double c_err = std::abs(worked.c - 1.0);
  for (std::uint64_t s = 0; s < 20; ++s) {
    CounterRng rng(108, s);
    const Vec x0 = ps.zero * random_cone_point(alg, rng);
    const Vec y = ps.half * random_element(alg, rng);
    const double c = 3.0 * rng.uniform();
    const Mat ty = left_mult(alg, y);
    const Vec x1 = c * e1 + 2.0 * ps.one * (left_mult(alg, e1) * ty * ty * x0);
    const Vec x = x1 + 2.0 * ty * x0 + x0;
    const auto r = main2_scalar_check(rep, e1, x, 100, s + 1);
    worst = std::max(worst, r.deviation);
    c_err = std::max(c_err, std::abs(r.c - c));
  }
  const bool pass = worst <= 1e-8 && std::abs(worked.c - 1.0) <= 1e-12 && c_err <= 1e-10;
  return {pass, fmt("worked example c = %.15g; max deviation %.2e over 21 x 100 samples; "
                    "max |c - c_built| %.2e",
                    worked.c, worst, c_err)};
}

Outcome c9_bergman() {
  const auto r1 = JordanRepresentation::standard(EuclideanJordanAlgebra::diagonal(1));
  const SiegelPoint base{CVec::Constant(1, Complex(0, 1)), CVec::Zero(1)};
  McOptions opts;
  opts.samples = 1000000;
  const auto b = bergman_kernel(r1, base, base, opts);
  const double exact = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi);
  const double diff = std::abs(b.value - exact);
  const bool value_ok = diff <= 0.02 * exact && diff <= 3.0 * b.std_error;

  // the base metric against the quadrature metric, 5 seeds per model
  double spread = 0.0, dev = 0.0;
  std::string names;
  for (const auto& entry : catalog_entries()) {
    if (entry.name == "sym2-skew") continue;  // same model as sym2-main2
    const auto rep = entry.representation();
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const double t = metric_scale(rep, 1000000, seed);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
      dev = std::max(dev, std::abs(t - 1.0));
    }
    spread = std::max(spread, (hi - lo) / (0.5 * (hi + lo)));
  }
  const bool pass = value_ok && spread <= 0.01;
  return {pass, fmt("K = %.10f (exact %.10f, %s, |diff| %.1e, err %.1e); metric scale spread %.2e over 5 "
                    "seeds, max |t - 1| %.2e",
                    b.value.real(), exact, b.quadrature ? "quadrature" : "monte carlo",
                    diff, b.std_error, spread, dev)};
}

Outcome c10_determinism() {
  int compared = 0, differ = 0;
  auto same = [&](const std::string& a, const std::string& b) {
    ++compared;
    if (a != b) ++differ;
  };
  for (const auto& entry : catalog_entries()) {
    const auto rep = entry.representation();
    for (const auto& v : entry.variants) {
      CertifyConfig cfg;
      cfg.seed = 11;
      cfg.scale_samples = 20000;
      cfg.coisotropic_samples = 5;
      cfg.orbit_samples = 10;
      cfg.orthocomplement_samples = 5;
      const auto w = entry.subspace(v);
      const std::string a = certify_report_json(certify_all(rep, w, cfg)).dump();
      same(a, certify_report_json(certify_all(rep, w, cfg)).dump());
      cfg.threads = 4;
      same(a, certify_report_json(certify_all(rep, w, cfg)).dump());
    }
  }
  const auto s2 = JordanRepresentation::standard(EuclideanJordanAlgebra::sym_real(2));
  const SiegelPoint p{s2.algebra().unit().cast<Complex>() * Complex(0, 1), CVec::Zero(2)};
  McOptions opts{50000, 5, 1};
  const std::string a = bergman_json(bergman_kernel(s2, p, p, opts)).dump();
  same(a, bergman_json(bergman_kernel(s2, p, p, opts)).dump());
  opts.threads = 4;
  same(a, bergman_json(bergman_kernel(s2, p, p, opts)).dump());
  return {differ == 0, fmt("%d report pairs compared (runs and 1 vs 4 threads), %d differ",
                           compared, differ)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"C1 jordan axioms", c1_axioms},
      {"C2 spectral suite", c2_spectral},
      {"C3 triple complement", c3_triple_complement},
      {"C4 propagation", c4_propagation},
      {"C5 certifier equivalence", c5_equivalence},
      {"C6 orbit orthocomplement", c6_orthocomplement},
      {"C7 kernel positivity", c7_kernel_psd},
      {"C8 main2 scalar", c8_main2},
      {"C9 bergman oracle", c9_bergman},
      {"C10 determinism", c10_determinism},
  };
  bool all = true, equivalence = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %-26s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
    if (std::string_view(c.name).starts_with("C5 ")) equivalence = o.pass;
  }
  if (!equivalence) return 2;
  return all ? 0 : 1;
}
