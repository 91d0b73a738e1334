#include "qsiegel/derived_spaces.hpp"

#include <algorithm>

#include "qsiegel/error.hpp"

namespace qsiegel {

BaseSpaces base_spaces(const JordanRepresentation& rep, const RealSubspace& w,
                       const Tolerances& tol) {
  if (w.ambient() != 2 * rep.n()) {
    throw Error(ErrorCode::DimensionMismatch, "W is not a subspace of V_R");
  }
  const Mat j = j_matrix(rep);
  BaseSpaces b;
  b.w = w;
  b.p = intersect(w, image(j, w, tol.rank), tol.rank);
  b.s = image(j, w.orthogonal_complement(), tol.rank);
  b.js = image(j, b.s, tol.rank);
  return b;
}

DerivedSpaces derive_spaces(const JordanRepresentation& rep,
                            const RealSubspace& w, const Vec& x,
                            const DeriveOptions& options,
                            const Tolerances& tol) {
  const Mat j = j_matrix(rep);
  const int m = 2 * rep.n();
  DerivedSpaces d;
  d.base = base_spaces(rep, w, tol);
  d.x = x;
  d.gx = g_form(rep, x);
  d.ker_gx = kernel(d.gx, tol.rank);

  const RealSubspace& p = d.base.p;
  d.n_x = RealSubspace::zero(m);
  if (p.dim() > 0) {
    const Mat gp = p.basis().transpose() * d.gx * p.basis();
    const auto es = symmetric_eigen(gp);
    const double lmax = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    d.min_eig_on_p = es.eigenvalues()(0);
    d.psd_on_p = d.min_eig_on_p >= -tol.psd * lmax;
    if (!d.psd_on_p && !options.allow_indefinite) {
      throw Error(ErrorCode::NotALinearSpace,
                  "g_x is indefinite on P; its isotropic cone is not a subspace");
    }
    if (d.psd_on_p) {
      Eigen::Index r = 0;
      while (r < es.eigenvalues().size() && es.eigenvalues()(r) <= tol.psd * lmax) ++r;
      d.n_x = RealSubspace::span(p.basis() * es.eigenvectors().leftCols(r), tol.rank);
    }
  } else {
    d.psd_on_p = true;
  }

  d.s_x = intersect(image(j, complement_wrt(d.gx, w, tol.rank), tol.rank), w, tol.rank);
  if (options.s_upper) {
    d.s_upper = *options.s_upper;
  } else {
    d.s_upper = intersect(d.s_x, d.n_x.orthogonal_complement(), tol.rank);
  }
  d.p_upper = intersect(d.n_x.orthogonal_complement(), p, tol.rank);

  const RealSubspace target = sum(d.s_upper, image(j, d.s_upper, tol.rank), tol.rank);
  if (p.dim() + target.dim() != m) {
    throw Error(ErrorCode::DecompositionFailure,
                "P + S^x + jS^x has dimension " + std::to_string(p.dim() + target.dim()) +
                    ", expected " + std::to_string(m));
  }
  Mat frame(m, m);
  frame << p.basis(), target.basis();
  Eigen::FullPivLU<Mat> lu(frame);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::DecompositionFailure, "P and S^x + jS^x intersect");
  }
  Mat keep = Mat::Zero(m, m);
  keep.bottomRightCorner(target.dim(), target.dim()).setIdentity();
  d.p_proj = frame * keep * lu.inverse();
  return d;
}

}  // namespace qsiegel
