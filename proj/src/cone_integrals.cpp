#include "qsiegel/cone_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "qsiegel/error.hpp"
#include "qsiegel/parallel.hpp"
#include "qsiegel/random.hpp"

namespace qsiegel {

namespace {

constexpr std::int64_t kChunk = 4096;

double log_cone_gamma(const EuclideanJordanAlgebra& alg, double s) {
  const int n = alg.dim(), r = alg.rank(), d = alg.peirce_multiplicity();
  double out = 0.5 * (n - r) * std::log(2.0 * std::numbers::pi);
  for (int j = 0; j < r; ++j) out += boost::math::lgamma(s - 0.5 * j * d);
  return out;
}

void require_builtin(const EuclideanJordanAlgebra& alg) {
  if (!alg.has_realization()) {
    throw Error(ErrorCode::InvalidAlgebra,
                "cone integrals need a built-in matrix algebra");
  }
}

// log det of the realizing matrix; -inf outside the closed cone.
double log_delta(const EuclideanJordanAlgebra& alg, const Vec& u) {
  const auto es = hermitian_eigen(alg.to_matrix(u));
  if (es.eigenvalues()(0) <= 0.0) return -std::numeric_limits<double>::infinity();
  return es.eigenvalues().array().log().sum();
}

// log of 1 / (I(u) I_Q(u)).
double log_density(const JordanRepresentation& rep, const Vec& u) {
  const auto& alg = rep.algebra();
  const double nr = static_cast<double>(alg.dim()) / alg.rank();
  const Eigen::LLT<Mat> llt(2.0 * g_form(rep, u));
  const double half_logdet = llt.matrixLLT().diagonal().array().log().sum();
  return nr * (log_delta(alg, u) + alg.rank() * std::log(2.0)) -
         log_cone_gamma(alg, nr) + half_logdet - rep.n() * std::log(std::numbers::pi);
}

// Draws u with density proportional to Delta(u)^{a - N/r} e^{-<sigma, u>}.
Vec sample_riesz(const EuclideanJordanAlgebra& alg, double a, const CMat& s_half,
                 CounterRng& rng) {
  const int m = alg.matrix_size();
  CMat x0;
  switch (alg.kind()) {
    case AlgebraKind::Diagonal: {
      x0 = CMat::Zero(m, m);
      for (int i = 0; i < m; ++i) x0(i, i) = rng.gamma(a);
      break;
    }
    case AlgebraKind::SymReal: {
      const double k = 2.0 * a;
      Mat lower = Mat::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        lower(i, i) = std::sqrt(2.0 * rng.gamma(0.5 * (k - i)));
        for (int j = 0; j < i; ++j) lower(i, j) = rng.normal();
      }
      x0 = (0.5 * lower * lower.transpose()).cast<Complex>();
      break;
    }
    case AlgebraKind::HermComplex: {
      CMat lower = CMat::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        lower(i, i) = std::sqrt(rng.gamma(a - i));
        for (int j = 0; j < i; ++j) {
          lower(i, j) = Complex(rng.normal(), rng.normal()) * std::sqrt(0.5);
        }
      }
      x0 = lower * lower.adjoint();
      break;
    }
    case AlgebraKind::Custom:
      throw Error(ErrorCode::InvalidAlgebra, "no sampler for custom algebras");
  }
  return alg.from_matrix(s_half * x0 * s_half);
}

CMat inverse_sqrt(const EuclideanJordanAlgebra& alg, const Vec& sigma) {
  const auto es = hermitian_eigen(alg.to_matrix(sigma));
  const Vec d = es.eigenvalues().array().rsqrt();
  return es.eigenvectors() * d.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double cone_gamma(const EuclideanJordanAlgebra& alg, double s) {
  return std::exp(log_cone_gamma(alg, s));
}

ConeIntegrals cone_integrals(const JordanRepresentation& rep, const Vec& u,
                             IntegralMethod method, std::int64_t samples,
                             std::uint64_t seed, const Tolerances& tol) {
  const auto& alg = rep.algebra();
  if (!cone_contains(alg, u, ConeMode::Open, tol)) {
    throw Error(ErrorCode::NotInCone, "u is not in the open cone");
  }
  ConeIntegrals out;
  const Eigen::LLT<Mat> llt(2.0 * g_form(rep, u));
  out.i_q = std::pow(std::numbers::pi, rep.n()) /
            llt.matrixLLT().diagonal().array().prod();

  const int n = alg.dim();
  if (method == IntegralMethod::Closed && alg.has_realization()) {
    const double nr = static_cast<double>(n) / alg.rank();
    out.i_u = std::exp(log_cone_gamma(alg, nr) -
                       nr * (log_delta(alg, u) + alg.rank() * std::log(2.0)));
    return out;
  }
  out.i_closed_form = false;
  out.samples = samples;
  out.seed = seed;
  const double log_area = std::log(2.0) + 0.5 * n * std::log(std::numbers::pi) -
                          boost::math::lgamma(0.5 * n);
  const double lg = boost::math::lgamma(static_cast<double>(n));
  double s1 = 0.0, s2 = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i), 0xc0e);
    Vec omega(n);
    for (int k = 0; k < n; ++k) omega(k) = rng.normal();
    omega.normalize();
    if (min_spectral_value(alg, omega, tol) <= 0.0) continue;
    const double val = std::exp(log_area + lg - n * std::log(2.0 * u.dot(omega)));
    s1 += val;
    s2 += val * val;
  }
  const double mean = s1 / samples;
  const double var = std::max(0.0, s2 / samples - mean * mean);
  out.i_u = mean;
  out.i_u_std_error = std::sqrt(var / samples);
  if (!(mean > 0.0) || out.i_u_std_error > 0.01 * mean) {
    throw Error(ErrorCode::MCVarianceTooHigh,
                "relative standard error of I(u) exceeds 1%");
  }
  return out;
}

namespace {

CVec w_vector(const JordanRepresentation& rep, const SiegelPoint& p1,
              const SiegelPoint& p2) {
  return p1.z - p2.z.conjugate() - 2.0 * kI * q_eval(rep, p1.v, p2.v);
}

BergmanEstimate bergman_rank1(const JordanRepresentation& rep, const CVec& w) {
  using boost::math::quadrature::gauss_kronrod;
  const Complex wc = w(0);
  auto integrand = [&](double u, bool imag) {
    if (u <= 0.0) return 0.0;
    const Vec uv = Vec::Constant(1, u);
    const Complex f = std::exp(kI * u * wc + log_density(rep, uv));
    return imag ? f.imag() : f.real();
  };
  double err_re = 0.0, err_im = 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  const double re = gauss_kronrod<double, 61>::integrate(
      [&](double u) { return integrand(u, false); }, 0.0, inf, 15, 1e-12, &err_re);
  const double im = gauss_kronrod<double, 61>::integrate(
      [&](double u) { return integrand(u, true); }, 0.0, inf, 15, 1e-12, &err_im);
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw Error(ErrorCode::QuadratureFailure, "non-finite quadrature result");
  }
  const double scale = 1.0 / (2.0 * std::numbers::pi);
  BergmanEstimate out;
  out.value = Complex(re, im) * scale;
  out.std_error = std::hypot(err_re, err_im) * scale;
  out.quadrature = true;
  if (out.std_error > 1e-6 * std::max(1e-300, std::abs(out.value))) {
    throw Error(ErrorCode::QuadratureFailure, "quadrature did not converge");
  }
  return out;
}

struct ChunkSums {
  Complex s1{0.0, 0.0};
  double s2 = 0.0;
};

}  // namespace

BergmanEstimate bergman_kernel(const JordanRepresentation& rep,
                               const SiegelPoint& p1, const SiegelPoint& p2,
                               const McOptions& options, const Tolerances& tol) {
  const auto& alg = rep.algebra();
  if (!domain_contains(rep, p1, tol) || !domain_contains(rep, p2, tol)) {
    throw Error(ErrorCode::NotInDomain, "Bergman kernel needs domain points");
  }
  const CVec w = w_vector(rep, p1, p2);
  if (alg.dim() == 1) return bergman_rank1(rep, w);
  require_builtin(alg);
  if (options.samples < 2) throw Error(ErrorCode::QuadratureFailure, "need at least 2 samples");

  const int n = alg.dim();
  const double nr = static_cast<double>(n) / alg.rank();
  const double a = 2.0 * nr;
  const Vec sigma = w.imag();
  const Vec re_w = w.real();
  const CMat s_half = inverse_sqrt(alg, sigma);
  const double log_norm = log_cone_gamma(alg, a) - a * log_delta(alg, sigma);

  const std::int64_t chunks = (options.samples + kChunk - 1) / kChunk;
  std::vector<ChunkSums> sums(chunks);
  parallel_for(chunks, options.threads, [&](std::int64_t c) {
    ChunkSums cs;
    const std::int64_t end = std::min(options.samples, (c + 1) * kChunk);
    for (std::int64_t i = c * kChunk; i < end; ++i) {
      CounterRng rng(options.seed, static_cast<std::uint64_t>(i), 0xbe6);
      const Vec u = sample_riesz(alg, a, s_half, rng);
      const double lw = log_density(rep, u) - (a - nr) * log_delta(alg, u) + log_norm;
      const Complex val = std::exp(Complex(lw, u.dot(re_w)));
      cs.s1 += val;
      cs.s2 += std::norm(val);
    }
    sums[c] = cs;
  });
  Complex s1{0.0, 0.0};
  double s2 = 0.0;
  for (const auto& cs : sums) {
    s1 += cs.s1;
    s2 += cs.s2;
  }
  const double m = static_cast<double>(options.samples);
  const Complex mean = s1 / m;
  const double var = std::max(0.0, s2 / m - std::norm(mean)) * m / (m - 1.0);
  const double scale = std::pow(2.0 * std::numbers::pi, -n);
  BergmanEstimate out;
  out.value = mean * scale;
  out.std_error = std::sqrt(var / m) * scale;
  out.samples = options.samples;
  return out;
}

Mat quadrature_metric(const JordanRepresentation& rep, const McOptions& options,
                      const Tolerances& /*tol*/) {
  const auto& alg = rep.algebra();
  require_builtin(alg);
  const int n = alg.dim();
  const double nr = static_cast<double>(n) / alg.rank();
  const double a = 2.0 * nr;
  const Vec sigma = 2.0 * alg.unit();
  const CMat s_half = inverse_sqrt(alg, sigma);

  struct Moments {
    double w = 0.0;
    Vec first;
    Mat second;
  };
  const std::int64_t chunks = (options.samples + kChunk - 1) / kChunk;
  std::vector<Moments> parts(chunks);
  parallel_for(chunks, options.threads, [&](std::int64_t c) {
    Moments mo{0.0, Vec::Zero(n), Mat::Zero(n, n)};
    const std::int64_t end = std::min(options.samples, (c + 1) * kChunk);
    for (std::int64_t i = c * kChunk; i < end; ++i) {
      CounterRng rng(options.seed, static_cast<std::uint64_t>(i), 0x3e7);
      const Vec u = sample_riesz(alg, a, s_half, rng);
      const double wt = std::exp(log_density(rep, u) - (a - nr) * log_delta(alg, u));
      mo.w += wt;
      mo.first += wt * u;
      mo.second += wt * u * u.transpose();
    }
    parts[c] = std::move(mo);
  });
  Moments total{0.0, Vec::Zero(n), Mat::Zero(n, n)};
  for (const auto& p : parts) {
    total.w += p.w;
    total.first += p.first;
    total.second += p.second;
  }
  const Vec mean = total.first / total.w;
  const Mat cov = total.second / total.w - mean * mean.transpose();
  const int nv = rep.n();
  Mat g = Mat::Zero(2 * n + 2 * nv, 2 * n + 2 * nv);
  g.topLeftCorner(n, n) = cov;
  g.block(n, n, n, n) = cov;
  g.bottomRightCorner(2 * nv, 2 * nv) = g_form(rep, 2.0 * mean);
  return g;
}

}  // namespace qsiegel
