#include "qsiegel/linalg.hpp"

#include "qsiegel/error.hpp"

namespace qsiegel {

Vec realify(const CVec& v) {
  const Eigen::Index n = v.size();
  Vec out(2 * n);
  out.head(n) = v.real();
  out.tail(n) = v.imag();
  return out;
}

CVec complexify(const Vec& v) {
  if (v.size() % 2 != 0) {
    throw Error(ErrorCode::DimensionMismatch, "odd real dimension");
  }
  const Eigen::Index n = v.size() / 2;
  CVec out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = Complex(v(i), v(n + i));
  return out;
}

Mat realify(const CMat& m) {
  const Eigen::Index r = m.rows(), c = m.cols();
  Mat out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = m.real();
  out.topRightCorner(r, c) = -m.imag();
  out.bottomLeftCorner(r, c) = m.imag();
  out.bottomRightCorner(r, c) = m.real();
  return out;
}

Mat complex_structure(Eigen::Index n) {
  return realify(CMat(kI * CMat::Identity(n, n)));
}

Eigen::SelfAdjointEigenSolver<Mat> symmetric_eigen(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (a + a.transpose()));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigSolverFailure, "symmetric eigensolver did not converge");
  }
  return es;
}

Eigen::SelfAdjointEigenSolver<CMat> hermitian_eigen(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (a + a.adjoint()));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigSolverFailure, "hermitian eigensolver did not converge");
  }
  return es;
}

double min_eigenvalue(const Mat& a) {
  if (a.size() == 0) return 0.0;
  return symmetric_eigen(a).eigenvalues()(0);
}

Mat symmetric_exp(const Mat& a) {
  auto es = symmetric_eigen(a);
  const Vec d = es.eigenvalues().array().exp();
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace qsiegel
