#include "qsiegel/subspace.hpp"

#include <algorithm>

#include "qsiegel/error.hpp"

namespace qsiegel {

namespace {

constexpr double kAbsFloor = 1e-12;

}  // namespace

RealSubspace RealSubspace::zero(Eigen::Index m) { return {m, Mat(m, 0)}; }

RealSubspace RealSubspace::whole(Eigen::Index m) {
  return {m, Mat::Identity(m, m)};
}

RealSubspace RealSubspace::span(const Mat& vectors, double rank_tol) {
  const Eigen::Index m = vectors.rows();
  if (vectors.cols() == 0 || m == 0) return zero(m);
  Eigen::BDCSVD<Mat> svd(vectors, Eigen::ComputeThinU);
  const Vec& sv = svd.singularValues();
  const double thr = std::max(rank_tol * sv(0), kAbsFloor);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return {m, svd.matrixU().leftCols(r)};
}

RealSubspace RealSubspace::orthogonal_complement() const {
  if (dim() == 0) return whole(ambient_);
  if (dim() == ambient_) return zero(ambient_);
  Eigen::BDCSVD<Mat> svd(basis_, Eigen::ComputeFullU);
  return {ambient_, svd.matrixU().rightCols(ambient_ - dim())};
}

double RealSubspace::residual(const Vec& v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "vector and subspace ambient differ");
  }
  const Vec r = v - basis_ * (basis_.transpose() * v);
  return r.norm() / std::max(1.0, v.norm());
}

bool RealSubspace::contains(const Vec& v, double tol) const {
  return residual(v) <= tol;
}

double RealSubspace::inclusion_residual(const RealSubspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "subspace ambients differ");
  }
  double worst = 0.0;
  for (Eigen::Index k = 0; k < other.dim(); ++k) {
    worst = std::max(worst, residual(other.basis_.col(k)));
  }
  return worst;
}

bool RealSubspace::contains(const RealSubspace& other, double tol) const {
  return inclusion_residual(other) <= tol;
}

double RealSubspace::distance(const RealSubspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "subspace ambients differ");
  }
  return (projector() - other.projector()).norm();
}

bool RealSubspace::equals(const RealSubspace& other, double tol) const {
  return distance(other) <= tol;
}

RealSubspace sum(const RealSubspace& a, const RealSubspace& b, double rank_tol) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "subspace ambients differ");
  }
  Mat all(a.ambient(), a.dim() + b.dim());
  all << a.basis(), b.basis();
  return RealSubspace::span(all, rank_tol);
}

RealSubspace intersect(const RealSubspace& a, const RealSubspace& b,
                       double rank_tol) {
  return sum(a.orthogonal_complement(), b.orthogonal_complement(), rank_tol)
      .orthogonal_complement();
}

RealSubspace kernel(const Mat& a, double rank_tol) {
  const Eigen::Index m = a.cols();
  if (a.rows() == 0) return RealSubspace::whole(m);
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  const double thr = sv.size() ? rank_tol * sv(0) : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return RealSubspace::span(svd.matrixV().rightCols(m - r), rank_tol);
}

RealSubspace complement_wrt(const Mat& b, const RealSubspace& w,
                            double rank_tol) {
  if (b.rows() != w.ambient() || b.cols() != w.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "form and subspace sizes differ");
  }
  if (w.dim() == 0) return RealSubspace::whole(w.ambient());
  // Scale the threshold by the form itself so that a nearly degenerate
  // restriction is not mistaken for a full-rank one.
  const Mat m = w.basis().transpose() * b;
  const double bnorm = b.size() ? b.cwiseAbs().maxCoeff() : 0.0;
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  const double smax = sv.size() ? std::max(sv(0), bnorm) : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > rank_tol * smax) ++r;
  return RealSubspace::span(svd.matrixV().rightCols(w.ambient() - r), rank_tol);
}

RealSubspace image(const Mat& a, const RealSubspace& w, double rank_tol) {
  if (a.cols() != w.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "map and subspace sizes differ");
  }
  return RealSubspace::span(a * w.basis(), rank_tol);
}

}  // namespace qsiegel
