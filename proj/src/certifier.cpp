#include "qsiegel/certifier.hpp"

#include <algorithm>
#include <cmath>

#include "qsiegel/cone_integrals.hpp"
#include "qsiegel/derived_spaces.hpp"
#include "qsiegel/error.hpp"
#include "qsiegel/parallel.hpp"
#include "qsiegel/random.hpp"
#include "qsiegel/sampling.hpp"

namespace qsiegel {

BaseMetric base_metric(const JordanRepresentation& rep) {
  const auto& alg = rep.algebra();
  const int n = alg.dim();
  const int nv = rep.n();
  BaseMetric bm;
  bm.c = Mat::Zero(n, n);
  bm.e_prime = Vec::Zero(n);
  for (int k = 0; k < n; ++k) {
    const Vec bk = Vec::Unit(n, k);
    bm.e_prime(k) = 2.0 * (left_mult(alg, bk).trace() + rep.r(bk).trace().real());
    for (int l = 0; l < n; ++l) {
      const Vec kl = alg.product(bk, Vec::Unit(n, l));
      bm.c(k, l) = 0.5 * (left_mult(alg, kl).trace() + rep.r(kl).trace().real());
    }
  }
  bm.g = Mat::Zero(2 * n + 2 * nv, 2 * n + 2 * nv);
  bm.g.topLeftCorner(n, n) = bm.c;
  bm.g.block(n, n, n, n) = bm.c;
  bm.g.bottomRightCorner(2 * nv, 2 * nv) = g_form(rep, bm.e_prime);
  if (min_eigenvalue(bm.g) <= 0.0) {
    throw Error(ErrorCode::NotPositiveDefinite,
                "base metric is not positive definite");
  }
  return bm;
}

double metric_scale(const JordanRepresentation& rep, std::int64_t samples,
                    std::uint64_t seed, int threads) {
  const Mat gb = base_metric(rep).g;
  const Mat gq = quadrature_metric(rep, McOptions{samples, seed, threads});
  return (gq.array() * gb.array()).sum() / gb.squaredNorm();
}

Mat tangent_j(const JordanRepresentation& rep) {
  const int n = rep.algebra().dim();
  const int nv = rep.n();
  Mat j = Mat::Zero(2 * n + 2 * nv, 2 * n + 2 * nv);
  j.topLeftCorner(2 * n, 2 * n) = complex_structure(n);
  j.bottomRightCorner(2 * nv, 2 * nv) = complex_structure(nv);
  return j;
}

namespace {

double imq_scale(const JordanRepresentation& rep) {
  double s = 1.0;
  for (int k = 0; k < rep.algebra().dim(); ++k) {
    s = std::max(s, 2.0 * rep.r_basis(k).cwiseAbs().maxCoeff());
  }
  return s * std::sqrt(static_cast<double>(rep.algebra().dim()));
}

SiegelPoint gaussian_domain_point(const JordanRepresentation& rep, CounterRng& rng) {
  const auto& alg = rep.algebra();
  const Vec x0 = random_element(alg, rng);
  const Vec y = random_cone_point(alg, rng);
  const CVec v = gaussian_v(rep.n(), rng);
  const Vec h = y + q_real(rep, v);
  CVec z(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) z(i) = Complex(x0(i), h(i));
  return {z, v};
}

struct SampleResult {
  double residual = 0.0;
  Vec witness;
};

}  // namespace

Certificate check_imq_vanishes(const JordanRepresentation& rep,
                               const RealSubspace& w, const Tolerances& tol) {
  const BaseSpaces b = base_spaces(rep, w, tol);
  Certificate cert;
  cert.condition = "imq_vanishes";
  cert.tol = tol.zero * imq_scale(rep);
  Vec wa, wb;
  // Im Q(s, s) = 0 always, so only distinct pairs are scanned.
  for (Eigen::Index i = 0; i < b.s.dim(); ++i) {
    for (Eigen::Index j = i + 1; j < b.s.dim(); ++j) {
      const double r = im_q(rep, b.s.basis().col(i), b.s.basis().col(j)).norm();
      if (r > cert.residual) {
        cert.residual = r;
        wa = b.s.basis().col(i);
        wb = b.s.basis().col(j);
      }
    }
  }
  cert.verdict = cert.residual <= cert.tol;
  if (!cert.verdict) cert.witness = Witness{{wa, wb}, std::nullopt, std::nullopt};
  return cert;
}

Certificate check_coisotropic(const JordanRepresentation& rep,
                              const RealSubspace& w, const CertifyConfig& config) {
  const Tolerances& tol = config.tol;
  const Mat g = config.metric_factor * base_metric(rep).g;
  const Mat jt = tangent_j(rep);
  std::vector<SampleResult> results(config.coisotropic_samples);
  std::vector<SiegelPoint> points(config.coisotropic_samples);
  parallel_for(config.coisotropic_samples, config.threads, [&](std::int64_t i) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(i), 0xc015);
    const SiegelPoint p = gaussian_domain_point(rep, rng);
    points[i] = p;
    const RealSubspace t = orbit_tangent(rep, w, p, tol);
    const Transport tr = transport_to_base(rep, p, tol);
    const RealSubspace tb = image(tr.derivative, t, tol.rank);
    const RealSubspace perp = complement_wrt(g, tb, tol.rank);
    const RealSubspace jtb = image(jt, tb, tol.rank);
    SampleResult res;
    for (Eigen::Index k = 0; k < perp.dim(); ++k) {
      const double r = jtb.residual(perp.basis().col(k));
      if (r > res.residual) {
        res.residual = r;
        res.witness = tr.derivative.fullPivLu().solve(Vec(perp.basis().col(k)));
      }
    }
    results[i] = std::move(res);
  });
  Certificate cert;
  cert.condition = "coisotropic";
  cert.tol = tol.sub;
  cert.seed = config.seed;
  cert.samples = config.coisotropic_samples;
  int worst = -1;
  for (int i = 0; i < config.coisotropic_samples; ++i) {
    if (results[i].residual > cert.residual) {
      cert.residual = results[i].residual;
      worst = i;
    }
  }
  cert.verdict = cert.residual <= cert.tol;
  if (!cert.verdict) {
    // Report the first violating sample, not the worst one.
    int first = worst;
    for (int i = 0; i < config.coisotropic_samples; ++i) {
      if (results[i].residual > cert.tol) {
        first = i;
        break;
      }
    }
    cert.witness = Witness{{results[first].witness}, points[first], std::nullopt};
  }
  return cert;
}

Certificate check_orthocomplement(const JordanRepresentation& rep, const RealSubspace& w,
                          const CertifyConfig& config) {
  const Tolerances& tol = config.tol;
  const Certificate imq = check_imq_vanishes(rep, w, tol);
  if (!imq.verdict) {
    throw Error(ErrorCode::HypothesisViolated, "Im Q(S, S) does not vanish");
  }
  const auto& alg = rep.algebra();
  const int n = alg.dim();
  const int nv = rep.n();
  const BaseMetric bm = base_metric(rep);
  const Mat g = config.metric_factor * bm.g;
  const Mat jt = tangent_j(rep);
  const Mat jv = j_matrix(rep);
  const BaseSpaces b = base_spaces(rep, w, tol);
  const RealSubspace hs = image(jv, complement_wrt(g_form(rep, bm.e_prime), w, tol.rank), tol.rank);

  std::vector<double> dist(config.orthocomplement_samples);
  std::vector<SiegelPoint> points(config.orthocomplement_samples);
  parallel_for(config.orthocomplement_samples, config.threads, [&](std::int64_t i) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(i), 0x0c7);
    const Vec s = random_in(b.s, rng);
    const Vec yp = random_cone_point(alg, rng);
    const CVec js = complexify(Vec(jv * s));
    const Vec y = yp + q_real(rep, complexify(s));
    SiegelPoint c{(kI * y.cast<Complex>()).eval(), js};
    points[i] = c;

    const Transport tr = transport_to_base(rep, c, tol);
    const RealSubspace tb = image(tr.derivative, orbit_tangent(rep, w, c, tol), tol.rank);
    const RealSubspace lhs = complement_wrt(g, tb, tol.rank);

    const CMat ry = rep.r(yp);
    Mat h(2 * n + 2 * nv, n + hs.dim());
    for (int k = 0; k < n; ++k) {
      h.col(k) = tangent_coords(Vec::Unit(n, k).cast<Complex>(), CVec::Zero(nv));
    }
    for (Eigen::Index k = 0; k < hs.dim(); ++k) {
      const CVec v0 = ry * complexify(hs.basis().col(k));
      h.col(n + k) = tangent_coords(2.0 * kI * q_eval(rep, js, v0), v0);
    }
    const RealSubspace rhs = RealSubspace::span(jt * tr.derivative * h, tol.rank);
    dist[i] = lhs.distance(rhs);
  });
  Certificate cert;
  cert.condition = "orthocomplement";
  cert.tol = 1e-7;
  cert.seed = config.seed;
  cert.samples = config.orthocomplement_samples;
  int worst = -1;
  for (int i = 0; i < config.orthocomplement_samples; ++i) {
    if (dist[i] > cert.residual) {
      cert.residual = dist[i];
      worst = i;
    }
  }
  cert.verdict = cert.residual <= cert.tol;
  if (!cert.verdict) cert.witness = Witness{{}, points[worst], std::nullopt};
  return cert;
}

Certificate check_orbit_multiplicity(const JordanRepresentation& rep,
                                     const RealSubspace& w, const Vec& x,
                                     const Tolerances& tol) {
  const Mat gx = g_form(rep, x);
  const auto es = symmetric_eigen(gx);
  const double lmax = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (es.eigenvalues()(0) < -tol.psd * lmax) {
    throw Error(ErrorCode::NotPSD, "g_x is not positive semi-definite on V");
  }
  Eigen::Index r = 0;
  while (r < es.eigenvalues().size() && es.eigenvalues()(r) <= tol.psd * lmax) ++r;
  const RealSubspace ker = RealSubspace::span(es.eigenvectors().leftCols(r), tol.rank);
  const RealSubspace lhs = image(j_matrix(rep), complement_wrt(gx, w, tol.rank), tol.rank);
  const RealSubspace rhs = sum(ker, w, tol.rank);

  Certificate cert;
  cert.condition = "orbit_multiplicity_one";
  cert.tol = tol.sub;
  cert.samples = 1;
  Vec worst;
  for (Eigen::Index k = 0; k < lhs.dim(); ++k) {
    const double res = rhs.residual(lhs.basis().col(k));
    if (res > cert.residual) {
      cert.residual = res;
      worst = lhs.basis().col(k);
    }
  }
  cert.verdict = cert.residual <= cert.tol;
  if (!cert.verdict) cert.witness = Witness{{worst}, std::nullopt, x};
  return cert;
}

Certificate check_orbit_multiplicity_sampled(const JordanRepresentation& rep,
                                             const RealSubspace& w,
                                             const CertifyConfig& config) {
  std::vector<Certificate> certs(config.orbit_samples);
  parallel_for(config.orbit_samples, config.threads, [&](std::int64_t i) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(i), 0x0b1);
    certs[i] = check_orbit_multiplicity(rep, w, random_cone_point(rep.algebra(), rng),
                                        config.tol);
  });
  Certificate cert;
  cert.condition = "orbit_multiplicity_one";
  cert.tol = config.tol.sub;
  cert.seed = config.seed;
  cert.samples = config.orbit_samples;
  cert.verdict = true;
  for (const Certificate& c : certs) {
    cert.residual = std::max(cert.residual, c.residual);
    if (!c.verdict && cert.verdict) {
      cert.verdict = false;
      cert.witness = c.witness;
    }
  }
  return cert;
}

CertifyReport certify_all(const JordanRepresentation& rep, const RealSubspace& w,
                          const CertifyConfig& config) {
  CertifyReport rep_out;
  rep_out.imq = check_imq_vanishes(rep, w, config.tol);
  rep_out.coisotropic = check_coisotropic(rep, w, config);
  rep_out.orbit = check_orbit_multiplicity_sampled(rep, w, config);
  if (rep_out.imq.verdict) rep_out.orthocomplement = check_orthocomplement(rep, w, config);
  if (config.scale_samples > 0) {
    const double t = metric_scale(rep, config.scale_samples, config.seed, config.threads);
    rep_out.coisotropic.metric_scale = t;
    if (rep_out.orthocomplement) rep_out.orthocomplement->metric_scale = t;
  }
  rep_out.consistent = rep_out.imq.verdict == rep_out.coisotropic.verdict &&
                       rep_out.imq.verdict == rep_out.orbit.verdict;
  rep_out.mf = rep_out.consistent && rep_out.imq.verdict;
  return rep_out;
}

}  // namespace qsiegel
