#include "qsiegel/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "qsiegel/error.hpp"
#include "qsiegel/random.hpp"

namespace qsiegel {

LambdaReport lambda_report(const JordanRepresentation& rep,
                           const RealSubspace& w, const Vec& x,
                           const Tolerances& tol) {
  LambdaReport out;
  const BaseSpaces b = base_spaces(rep, w, tol);
  const Mat gx = g_form(rep, x);
  RealSubspace radical = RealSubspace::zero(w.ambient());
  if (b.p.dim() > 0) {
    const auto es = symmetric_eigen(b.p.basis().transpose() * gx * b.p.basis());
    const double lmax = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    out.psd_on_p = es.eigenvalues()(0) >= -tol.psd * lmax;
    if (!out.psd_on_p) return out;
    Eigen::Index r = 0;
    while (r < es.eigenvalues().size() && es.eigenvalues()(r) <= tol.psd * lmax) ++r;
    radical = RealSubspace::span(b.p.basis() * es.eigenvectors().leftCols(r), tol.rank);
  } else {
    out.psd_on_p = true;
  }
  const double gnorm = std::max(1.0, gx.cwiseAbs().maxCoeff());
  out.radical_in_kernel =
      radical.dim() == 0 || (gx * radical.basis()).norm() <= 1e-6 * gnorm;
  out.radical_complex = radical.equals(image(j_matrix(rep), radical, tol.rank), tol.sub);
  if (out.radical_in_kernel && out.radical_complex) {
    out.k = static_cast<int>(radical.dim() / 2);
  }
  return out;
}

std::optional<int> classify_lambda(const JordanRepresentation& rep,
                                   const RealSubspace& w, const Vec& x,
                                   const Tolerances& tol) {
  return lambda_report(rep, w, x, tol).k;
}

KernelParams build_kernel_params(const JordanRepresentation& rep,
                                 const RealSubspace& w, const Vec& x,
                                 const Vec& chi, const KernelOptions& options,
                                 const Tolerances& tol) {
  rep.algebra().check_element(x);
  const LambdaReport lr = lambda_report(rep, w, x, tol);
  if (options.require_lambda && !lr.k) {
    throw Error(ErrorCode::NotInLambda,
                lr.psd_on_p ? "radical of g_x on P is not a complex subspace of ker g_x"
                            : "g_x is not positive semi-definite on P");
  }
  DeriveOptions dopt;
  dopt.s_upper = options.s_upper;
  dopt.allow_indefinite = !options.require_lambda;
  KernelParams kp{rep, x, lr.k.value_or(0), chi, derive_spaces(rep, w, x, dopt, tol), {}, {}};

  const RealSubspace& s = kp.spaces.base.s;
  if (sum(s, kp.spaces.base.js, tol.rank).dim() != 2 * s.dim()) {
    throw Error(ErrorCode::DecompositionFailure, "S and jS intersect");
  }
  if (kp.chi.size() == 0) kp.chi = Vec::Zero(s.dim());
  if (kp.chi.size() != s.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "chi has length " + std::to_string(kp.chi.size()) + ", dim S is " +
                    std::to_string(s.dim()));
  }
  const int n = rep.n();
  kp.s_frame = CMat(n, s.dim());
  CMat pi(n, s.dim());
  for (Eigen::Index k = 0; k < s.dim(); ++k) {
    kp.s_frame.col(k) = complexify(s.basis().col(k));
    pi.col(k) = complexify(kp.spaces.p_proj * s.basis().col(k));
  }
  kp.a_x = 2.0 * pi.adjoint() * rep.r(x) * pi;
  return kp;
}

namespace {

// Coordinates of the (S + jS)-component of v in the complex frame.
CVec s_coords(const KernelParams& kp, const CVec& v, const Tolerances& tol) {
  if (kp.s_frame.cols() == 0) return CVec(0);
  const Vec vr = realify(v);
  const Mat& pb = kp.spaces.base.p.basis();
  const CVec rest = complexify(Vec(vr - pb * (pb.transpose() * vr)));
  const CVec alpha = kp.s_frame.colPivHouseholderQr().solve(rest);
  if ((kp.s_frame * alpha - rest).norm() > tol.sub * std::max(1.0, v.norm())) {
    throw Error(ErrorCode::DecompositionFailure, "v does not split as q + s");
  }
  return alpha;
}

}  // namespace

Complex eval_kernel(const KernelParams& kp, const SiegelPoint& p1,
                    const SiegelPoint& p2, const Tolerances& tol) {
  const auto& rep = kp.rep;
  rep.check_vector(p1.v);
  rep.check_vector(p2.v);
  const CVec xc = kp.x.cast<Complex>();
  Complex expo = kI * xc.dot(p1.z - p2.z.conjugate());
  expo += 4.0 * p2.v.dot(rep.r(kp.x) * p1.v);
  if (kp.s_frame.cols() > 0) {
    const CVec delta = s_coords(kp, p1.v, tol) - s_coords(kp, p2.v, tol).conjugate();
    expo += (delta.transpose() * kp.a_x * delta).value();
    expo -= kI * (kp.chi.cast<Complex>().transpose() * delta).value();
  }
  return std::exp(expo);
}

Complex fock_kernel(const JordanRepresentation& rep, const Vec& x,
                    const CVec& q, const CVec& q_prime) {
  return std::exp(2.0 * x.cast<Complex>().dot(q_eval(rep, q, q_prime)));
}

GramReport gram_report(const CMat& gram, const Tolerances& tol) {
  GramReport r;
  r.points = static_cast<int>(gram.rows());
  if (gram.rows() == 0) {
    r.psd = true;
    return r;
  }
  r.hermitian_defect = (gram - gram.adjoint()).norm();
  const auto es = hermitian_eigen(gram);
  r.min_eigenvalue = es.eigenvalues()(0);
  r.norm = es.eigenvalues().cwiseAbs().maxCoeff();
  r.psd = r.min_eigenvalue >= -tol.psd * std::max(1.0, r.norm);
  return r;
}

GramReport gram_psd_report(const KernelParams& params,
                           const std::vector<SiegelPoint>& points,
                           const Tolerances& tol) {
  const auto m = static_cast<Eigen::Index>(points.size());
  CMat g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      g(i, j) = eval_kernel(params, points[i], points[j], tol);
    }
  }
  return gram_report(g, tol);
}

namespace {

// Orthonormal eigenvectors of the projection 2R_c with eigenvalue 1, real
// whenever R_c is real.
CMat projection_range(const JordanRepresentation& rep, const Vec& c) {
  const CMat pr = 2.0 * rep.r(c);
  const int n = rep.n();
  std::vector<CVec> cols;
  if (pr.imag().norm() <= 1e-14 * std::max(1.0, pr.norm())) {
    const auto es = symmetric_eigen(pr.real());
    for (int i = 0; i < n; ++i) {
      if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-6) {
        cols.push_back(es.eigenvectors().col(i).cast<Complex>());
      }
    }
  } else {
    const auto es = hermitian_eigen(pr);
    for (int i = 0; i < n; ++i) {
      if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-6) {
        CVec u = es.eigenvectors().col(i);
        Eigen::Index big;
        u.cwiseAbs().maxCoeff(&big);
        u *= std::abs(u(big)) / u(big);
        cols.push_back(u);
      }
    }
  }
  CMat out(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(k) = cols[k];
  return out;
}

}  // namespace

RealSubspace main2_subspace(const JordanRepresentation& rep, const Vec& e1,
                            const Tolerances& tol) {
  const CMat s = projection_range(rep, e1);
  const CMat p = projection_range(rep, rep.algebra().unit() - e1);
  const int n = rep.n();
  Mat vecs(2 * n, s.cols() + 2 * p.cols());
  for (Eigen::Index k = 0; k < s.cols(); ++k) vecs.col(k) = realify(CVec(s.col(k)));
  for (Eigen::Index k = 0; k < p.cols(); ++k) {
    vecs.col(s.cols() + 2 * k) = realify(CVec(p.col(k)));
    vecs.col(s.cols() + 2 * k + 1) = realify(CVec(kI * p.col(k)));
  }
  return RealSubspace::span(vecs, tol.rank);
}

namespace {

Mat eigen_basis(const Mat& projector) {
  const auto es = symmetric_eigen(projector);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > 0.5) ++r;
  }
  return es.eigenvectors().rightCols(r);
}

}  // namespace

PeirceParts peirce_parts(const EuclideanJordanAlgebra& alg, const Vec& e1,
                         const Vec& x, const Tolerances& tol) {
  const PeirceSystem ps = peirce_system(alg, e1, tol);
  return {ps.one * x, ps.half * x, ps.zero * x};
}

Main2Result main2_scalar_check(const JordanRepresentation& rep, const Vec& e1,
                               const Vec& x, int samples, std::uint64_t seed,
                               const Tolerances& tol) {
  const auto& alg = rep.algebra();
  alg.check_element(x);
  PeirceSystem ps;
  try {
    ps = peirce_system(alg, e1, tol);
  } catch (const Error& err) {
    throw Error(ErrorCode::FrameInvalid, err.what());
  }
  if (std::abs(e1.squaredNorm() - 1.0) > 1e-8) {
    throw Error(ErrorCode::FrameInvalid, "<e1, e1> differs from 1");
  }
  if (std::lround(ps.one.trace()) != 1) {
    throw Error(ErrorCode::FrameInvalid, "e1 is not primitive");
  }
  const Vec x1 = ps.one * x, xh = ps.half * x, x0 = ps.zero * x;
  const Mat t0 = left_mult(alg, x0);

  const Mat b0 = eigen_basis(ps.zero);
  if (b0.cols() > 0) {
    const Mat r0 = b0.transpose() * t0 * b0;
    const auto es = symmetric_eigen(r0);
    if (es.eigenvalues()(0) < -tol.psd * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff())) {
      throw Error(ErrorCode::NotInLambda, "T_{x0} is not positive on U(e1, 0)");
    }
  }

  Main2Result out;
  const Mat bh = eigen_basis(ps.half);
  out.y = Vec::Zero(alg.dim());
  if (bh.cols() > 0) {
    const Mat a = 2.0 * t0 * bh;
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
    cod.setThreshold(tol.rank);
    const Vec beta = cod.solve(xh);
    out.y = bh * beta;
    out.factor_residual = (a * beta - xh).norm();
  } else {
    out.factor_residual = xh.norm();
  }
  if (out.factor_residual > 1e-8 * std::max(1.0, x.norm())) {
    throw Error(ErrorCode::FactorizationResidualTooLarge,
                "x_half is not of the form 2 T_y x0 (residual " +
                    std::to_string(out.factor_residual) + ")");
  }
  const Mat ty = left_mult(alg, out.y);
  out.c = (x1 - 2.0 * left_mult(alg, e1) * ty * ty * x0).dot(e1);

  const RealSubspace w = main2_subspace(rep, e1, tol);
  const KernelParams kp = build_kernel_params(rep, w, x, Vec(), {}, tol);
  const Eigen::Index ds = kp.s_frame.cols();
  out.samples = samples;
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i), 0x3a2);
    CVec alpha(ds);
    for (Eigen::Index k = 0; k < ds; ++k) alpha(k) = Complex(rng.normal(), rng.normal());
    const Complex lhs = (alpha.transpose() * kp.a_x * alpha).value();
    const Complex rhs = out.c * (alpha.transpose() * alpha).value();
    out.deviation = std::max(out.deviation, std::abs(lhs - rhs));
  }
  return out;
}

}  // namespace qsiegel
