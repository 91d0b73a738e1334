#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qsiegel {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Real coordinates of a complex vector: (Re v_1..Re v_n, Im v_1..Im v_n).
Vec realify(const CVec& v);

/// Inverse of realify.
CVec complexify(const Vec& v);

/// Real 2n x 2n matrix of a complex-linear map in realify coordinates.
Mat realify(const CMat& m);

/// Multiplication by i in realify coordinates.
Mat complex_structure(Eigen::Index n);

/// Eigen-decomposition of a real symmetric matrix, eigenvalues ascending.
/// Throws EigSolverFailure when the solver does not converge.
Eigen::SelfAdjointEigenSolver<Mat> symmetric_eigen(const Mat& a);

/// Same for complex Hermitian matrices.
Eigen::SelfAdjointEigenSolver<CMat> hermitian_eigen(const CMat& a);

/// Smallest eigenvalue of a symmetric matrix (0 for an empty matrix).
double min_eigenvalue(const Mat& a);

/// exp of a real symmetric matrix through its eigen-decomposition.
Mat symmetric_exp(const Mat& a);

}  // namespace qsiegel
