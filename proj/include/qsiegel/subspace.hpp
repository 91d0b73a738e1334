#pragma once

#include "qsiegel/linalg.hpp"
#include "qsiegel/tolerances.hpp"

namespace qsiegel {

/// Real-linear subspace of R^m kept as an orthonormal column basis.
/// Every constructor goes through one rank-revealing SVD, so rank decisions
/// are made in a single place.
class RealSubspace {
 public:
  RealSubspace() = default;

  static RealSubspace zero(Eigen::Index m);
  static RealSubspace whole(Eigen::Index m);
  /// Column space of `vectors`; singular values at or below
  /// max(rank_tol * sigma_max, 1e-12) are dropped.
  static RealSubspace span(const Mat& vectors,
                           double rank_tol = kDefaultTolerances.rank);

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  Mat projector() const { return basis_ * basis_.transpose(); }

  RealSubspace orthogonal_complement() const;

  /// Distance of v to the subspace relative to max(1, |v|).
  double residual(const Vec& v) const;
  bool contains(const Vec& v, double tol = kDefaultTolerances.sub) const;
  /// Largest residual of the other subspace's basis vectors.
  double inclusion_residual(const RealSubspace& other) const;
  bool contains(const RealSubspace& other,
                double tol = kDefaultTolerances.sub) const;

  /// Frobenius distance between orthogonal projectors.
  double distance(const RealSubspace& other) const;
  bool equals(const RealSubspace& other,
              double tol = kDefaultTolerances.sub) const;

 private:
  RealSubspace(Eigen::Index m, Mat basis) : ambient_(m), basis_(std::move(basis)) {}

  Eigen::Index ambient_ = 0;
  Mat basis_;
};

RealSubspace sum(const RealSubspace& a, const RealSubspace& b,
                 double rank_tol = kDefaultTolerances.rank);
RealSubspace intersect(const RealSubspace& a, const RealSubspace& b,
                       double rank_tol = kDefaultTolerances.rank);

/// {v : b(v, w) = 0 for all w in W}, the kernel of basis(W)^T b.
RealSubspace complement_wrt(const Mat& b, const RealSubspace& w,
                            double rank_tol = kDefaultTolerances.rank);

/// Image a(W).
RealSubspace image(const Mat& a, const RealSubspace& w,
                   double rank_tol = kDefaultTolerances.rank);

/// Null space of a (as a subspace of R^{a.cols()}).
RealSubspace kernel(const Mat& a, double rank_tol = kDefaultTolerances.rank);

}  // namespace qsiegel
