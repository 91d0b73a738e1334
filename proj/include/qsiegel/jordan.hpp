#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsiegel/linalg.hpp"
#include "qsiegel/tolerances.hpp"

namespace qsiegel {

enum class AlgebraKind { Diagonal, SymReal, HermComplex, Custom };

std::string_view to_string(AlgebraKind kind);

/// A finite-dimensional Euclidean Jordan algebra given by its structure
/// tensor over an orthonormal basis of (U, <.,.>_U).
///
/// The tensor is stored as the left-multiplication matrices T_{b_i} of the
/// basis vectors, so that (T_{b_i})(k, j) is the k-th coordinate of
/// b_i o b_j. Built-in matrix algebras also keep their realization as
/// Hermitian matrices with <A, B> = Re tr(AB); the realization feeds the
/// standard representations and the Jordan-frame refiner.
class EuclideanJordanAlgebra {
 public:
  /// Validates commutativity, the unit, associativity of the inner product
  /// and the Jordan identity on a deterministic sample; throws
  /// InvalidAlgebra on violation.
  EuclideanJordanAlgebra(std::vector<Mat> basis_multiplications, Vec unit,
                         int rank, std::vector<std::string> labels,
                         const Tolerances& tol = kDefaultTolerances);

  static EuclideanJordanAlgebra diagonal(int r);
  static EuclideanJordanAlgebra sym_real(int n);
  static EuclideanJordanAlgebra herm_complex(int n);

  /// "diagonal" (r), "rank1", "sym_real" (n), "herm_complex" (n).
  static EuclideanJordanAlgebra from_kind(std::string_view kind, int param);

  int dim() const { return static_cast<int>(mult_.size()); }
  int rank() const { return rank_; }
  AlgebraKind kind() const { return kind_; }
  /// Size of the realizing matrices; 0 for custom algebras.
  int matrix_size() const { return matrix_size_; }
  /// Peirce multiplicity d (0 diagonal, 1 real symmetric, 2 Hermitian).
  int peirce_multiplicity() const { return peirce_d_; }

  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double structure_constant(int i, int j, int k) const {
    return mult_[i](k, j);
  }
  const Mat& basis_multiplication(int i) const { return mult_[i]; }

  /// Gram matrix of the inner product in basis coordinates (identity).
  Mat inner_gram() const { return Mat::Identity(dim(), dim()); }
  double inner(const Vec& x, const Vec& y) const { return x.dot(y); }

  Vec product(const Vec& x, const Vec& y) const;

  bool has_realization() const { return !realization_.empty(); }
  const std::vector<CMat>& realization_basis() const { return realization_; }
  CMat to_matrix(const Vec& x) const;
  Vec from_matrix(const CMat& m) const;

  void check_element(const Vec& x) const;

 private:
  EuclideanJordanAlgebra() = default;
  static EuclideanJordanAlgebra from_realization(
      AlgebraKind kind, int matrix_size, int peirce_d,
      std::vector<CMat> basis, std::vector<std::string> labels);

  std::vector<Mat> mult_;
  Vec unit_;
  int rank_ = 0;
  std::vector<std::string> labels_;
  AlgebraKind kind_ = AlgebraKind::Custom;
  int matrix_size_ = 0;
  int peirce_d_ = 0;
  std::vector<CMat> realization_;
};

/// x = sum_k eigenvalues[k] * idempotents[k], eigenvalues sorted descending.
struct SpectralDecomposition {
  std::vector<Vec> idempotents;
  std::vector<double> eigenvalues;
  /// Number of primitive idempotents summed in each idempotent.
  std::vector<int> multiplicities;
};

/// Projectors onto the Peirce spaces U(c,1), U(c,1/2), U(c,0).
struct PeirceSystem {
  Vec idempotent;
  Mat one;
  Mat half;
  Mat zero;
};

/// T_x, the matrix of y -> x o y.
Mat left_mult(const EuclideanJordanAlgebra& alg, const Vec& x);

/// P(x) = 2 T_x^2 - T_{x^2}.
Mat quad_rep(const EuclideanJordanAlgebra& alg, const Vec& x);

/// x^{-1} = P(x)^{-1} x. Throws SingularError when P(x) is singular at
/// tol.rank relative to its largest singular value.
Vec invert(const EuclideanJordanAlgebra& alg, const Vec& x,
           const Tolerances& tol = kDefaultTolerances);

/// Spectral decomposition with eigenvalues grouped at the relative gap
/// tol.eig * max(1, |x|). The idempotents are found as eigenvectors of T_x
/// restricted to the associative subalgebra R[x], which is the Krylov space
/// of T_x started at e.
SpectralDecomposition spectral_decompose(
    const EuclideanJordanAlgebra& alg, const Vec& x,
    const Tolerances& tol = kDefaultTolerances);

/// Decomposition over a Jordan frame (primitive idempotents, r terms).
/// Requires a matrix realization.
SpectralDecomposition jordan_frame(const EuclideanJordanAlgebra& alg,
                                   const Vec& x);

/// det x, the product of eigenvalues counted with multiplicity.
double determinant(const EuclideanJordanAlgebra& alg, const Vec& x,
                   const Tolerances& tol = kDefaultTolerances);

enum class SpectralFunction { Exp, Log, PseudoInverse, Abs, Step };

struct SpectralMapOptions {
  /// pseudo_inverse maps a zero eigenvalue to 1 instead of 0.
  bool proof_convention = false;
};

/// Applies f eigenvalue-wise. Log throws DomainError unless every
/// eigenvalue is positive.
Vec spectral_map(const EuclideanJordanAlgebra& alg, const Vec& x,
                 SpectralFunction f, SpectralMapOptions options = {},
                 const Tolerances& tol = kDefaultTolerances);

enum class ConeMode { Open, Closed };

bool cone_contains(const EuclideanJordanAlgebra& alg, const Vec& x,
                   ConeMode mode, const Tolerances& tol = kDefaultTolerances);

/// Smallest spectral eigenvalue of x.
double min_spectral_value(const EuclideanJordanAlgebra& alg, const Vec& x,
                          const Tolerances& tol = kDefaultTolerances);

/// u box u' = T_{uu'} + [T_u, T_{u'}].
Mat box_operator(const EuclideanJordanAlgebra& alg, const Vec& u,
                 const Vec& u_prime);

/// Throws NotIdempotent when c o c != c within tol.zero or when T_c has an
/// eigenvalue away from {0, 1/2, 1}.
PeirceSystem peirce_system(const EuclideanJordanAlgebra& alg, const Vec& c,
                           const Tolerances& tol = kDefaultTolerances);

/// e^{T_u}, evaluated as P(exp(u/2)) so that e^{T_u} e = exp(u).
Mat exp_left_mult(const EuclideanJordanAlgebra& alg, const Vec& u,
                  const Tolerances& tol = kDefaultTolerances);

}  // namespace qsiegel
