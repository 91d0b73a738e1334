#include "qsiegel/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsiegel/error.hpp"
#include "qsiegel/random.hpp"

namespace qsiegel {

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Diagonal: return "diagonal";
    case AlgebraKind::SymReal: return "sym_real";
    case AlgebraKind::HermComplex: return "herm_complex";
    case AlgebraKind::Custom: return "custom";
  }
  return "custom";
}

namespace {

Vec sample_vector(std::uint64_t index, int n) {
  CounterRng rng(0x51ea1ULL, index);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  return v;
}

// Groups descending eigenvalues whose gap is below `gap`; returns the
// index ranges [begin, end) of each group.
std::vector<std::pair<int, int>> group_sorted(const std::vector<double>& lam,
                                              double gap) {
  std::vector<std::pair<int, int>> groups;
  int begin = 0;
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i) {
    if (i == static_cast<int>(lam.size()) || lam[i - 1] - lam[i] > gap) {
      groups.emplace_back(begin, i);
      begin = i;
    }
  }
  return groups;
}

}  // namespace

EuclideanJordanAlgebra::EuclideanJordanAlgebra(
    std::vector<Mat> basis_multiplications, Vec unit, int rank,
    std::vector<std::string> labels, const Tolerances& tol)
    : mult_(std::move(basis_multiplications)),
      unit_(std::move(unit)),
      rank_(rank),
      labels_(std::move(labels)) {
  const int n = dim();
  if (n == 0) throw Error(ErrorCode::InvalidAlgebra, "empty basis");
  if (rank_ < 1 || rank_ > n) {
    throw Error(ErrorCode::InvalidAlgebra, "rank out of range");
  }
  if (unit_.size() != n) {
    throw Error(ErrorCode::InvalidAlgebra, "unit has wrong length");
  }
  for (const Mat& m : mult_) {
    if (m.rows() != n || m.cols() != n) {
      throw Error(ErrorCode::InvalidAlgebra, "structure tensor is not N x N x N");
    }
    if (!m.allFinite()) {
      throw Error(ErrorCode::InvalidAlgebra, "non-finite structure constant");
    }
  }
  if (labels_.empty()) {
    for (int i = 0; i < n; ++i) labels_.push_back("b" + std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::InvalidAlgebra, "label count differs from dimension");
  }

  double scale = 1.0;
  for (const Mat& m : mult_) scale = std::max(scale, m.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((mult_[i].col(j) - mult_[j].col(i)).norm() > tol.zero * scale) {
        throw Error(ErrorCode::InvalidAlgebra, "product is not commutative");
      }
    }
    // <b_i o y, z> = <y, b_i o z> means T_{b_i} is symmetric.
    if ((mult_[i] - mult_[i].transpose()).norm() > tol.zero * scale) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "inner product is not associative with the product");
    }
  }
  if ((left_mult(*this, unit_) - Mat::Identity(n, n)).norm() > tol.zero * scale * n) {
    throw Error(ErrorCode::InvalidAlgebra, "unit is not a two-sided unit");
  }
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Vec x = sample_vector(2 * s, n);
    const Vec y = sample_vector(2 * s + 1, n);
    const Vec x2 = product(x, x);
    const Vec lhs = product(x, product(x2, y));
    const Vec rhs = product(x2, product(x, y));
    const double bound =
        tol.zero * scale * scale * (1.0 + std::pow(x.norm(), 3) * y.norm());
    if ((lhs - rhs).norm() > bound) {
      throw Error(ErrorCode::InvalidAlgebra, "Jordan identity fails");
    }
  }
}

EuclideanJordanAlgebra EuclideanJordanAlgebra::from_realization(
    AlgebraKind kind, int matrix_size, int peirce_d, std::vector<CMat> basis,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(basis.size());
  std::vector<Mat> mult(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CMat prod = 0.5 * (basis[i] * basis[j] + basis[j] * basis[i]);
      for (int k = 0; k < n; ++k) {
        mult[i](k, j) = (basis[k] * prod).trace().real();
      }
    }
  }
  Vec unit(n);
  for (int k = 0; k < n; ++k) unit(k) = basis[k].trace().real();
  EuclideanJordanAlgebra alg(std::move(mult), std::move(unit), matrix_size,
                             std::move(labels));
  alg.kind_ = kind;
  alg.matrix_size_ = matrix_size;
  alg.peirce_d_ = peirce_d;
  alg.realization_ = std::move(basis);
  return alg;
}

EuclideanJordanAlgebra EuclideanJordanAlgebra::diagonal(int r) {
  if (r < 1) throw Error(ErrorCode::InvalidAlgebra, "diagonal rank must be positive");
  std::vector<CMat> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) {
    CMat b = CMat::Zero(r, r);
    b(i, i) = 1.0;
    basis.push_back(b);
    labels.push_back("e" + std::to_string(i + 1));
  }
  return from_realization(AlgebraKind::Diagonal, r, 0, std::move(basis),
                          std::move(labels));
}

EuclideanJordanAlgebra EuclideanJordanAlgebra::sym_real(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidAlgebra, "matrix size must be positive");
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<CMat> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    CMat b = CMat::Zero(n, n);
    b(i, i) = 1.0;
    basis.push_back(b);
    labels.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CMat b = CMat::Zero(n, n);
      b(i, j) = b(j, i) = s;
      basis.push_back(b);
      labels.push_back("F" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return from_realization(AlgebraKind::SymReal, n, n > 1 ? 1 : 0,
                          std::move(basis), std::move(labels));
}

EuclideanJordanAlgebra EuclideanJordanAlgebra::herm_complex(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidAlgebra, "matrix size must be positive");
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<CMat> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    CMat b = CMat::Zero(n, n);
    b(i, i) = 1.0;
    basis.push_back(b);
    labels.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CMat b = CMat::Zero(n, n);
      b(i, j) = b(j, i) = s;
      basis.push_back(b);
      labels.push_back("F" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CMat b = CMat::Zero(n, n);
      b(i, j) = Complex(0.0, -s);
      b(j, i) = Complex(0.0, s);
      basis.push_back(b);
      labels.push_back("G" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return from_realization(AlgebraKind::HermComplex, n, n > 1 ? 2 : 0,
                          std::move(basis), std::move(labels));
}

EuclideanJordanAlgebra EuclideanJordanAlgebra::from_kind(std::string_view kind,
                                                         int param) {
  if (kind == "rank1") return diagonal(1);
  if (kind == "diagonal") return diagonal(param);
  if (kind == "sym_real") return sym_real(param);
  if (kind == "herm_complex") return herm_complex(param);
  throw Error(ErrorCode::InvalidAlgebra, "unknown algebra kind '" + std::string(kind) + "'");
}

Vec EuclideanJordanAlgebra::product(const Vec& x, const Vec& y) const {
  check_element(x);
  check_element(y);
  return left_mult(*this, x) * y;
}

CMat EuclideanJordanAlgebra::to_matrix(const Vec& x) const {
  if (!has_realization()) {
    throw Error(ErrorCode::InvalidAlgebra, "algebra has no matrix realization");
  }
  check_element(x);
  CMat m = CMat::Zero(matrix_size_, matrix_size_);
  for (int k = 0; k < dim(); ++k) m += x(k) * realization_[k];
  return m;
}

Vec EuclideanJordanAlgebra::from_matrix(const CMat& m) const {
  if (!has_realization()) {
    throw Error(ErrorCode::InvalidAlgebra, "algebra has no matrix realization");
  }
  if (m.rows() != matrix_size_ || m.cols() != matrix_size_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix size differs from realization");
  }
  Vec x(dim());
  for (int k = 0; k < dim(); ++k) x(k) = (realization_[k] * m).trace().real();
  return x;
}

void EuclideanJordanAlgebra::check_element(const Vec& x) const {
  if (x.size() != dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "element has length " + std::to_string(x.size()) + ", expected " +
                    std::to_string(dim()));
  }
  if (!x.allFinite()) throw Error(ErrorCode::DomainError, "non-finite coordinates");
}

Mat left_mult(const EuclideanJordanAlgebra& alg, const Vec& x) {
  alg.check_element(x);
  Mat t = Mat::Zero(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    if (x(i) != 0.0) t += x(i) * alg.basis_multiplication(i);
  }
  return t;
}

Mat quad_rep(const EuclideanJordanAlgebra& alg, const Vec& x) {
  const Mat t = left_mult(alg, x);
  return 2.0 * t * t - left_mult(alg, t * x);
}

Vec invert(const EuclideanJordanAlgebra& alg, const Vec& x,
           const Tolerances& tol) {
  const Mat p = quad_rep(alg, x);
  Eigen::JacobiSVD<Mat> svd(p, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (smax == 0.0 || smin <= tol.rank * smax) {
    throw SingularError("P(x) is singular", smin);
  }
  return svd.solve(x);
}

namespace {

SpectralDecomposition grouped_from_matrix(const EuclideanJordanAlgebra& alg,
                                          const Vec& x, double gap) {
  const auto es = hermitian_eigen(alg.to_matrix(x));
  const int m = alg.matrix_size();
  std::vector<double> lam(m);
  for (int i = 0; i < m; ++i) lam[i] = es.eigenvalues()(m - 1 - i);
  SpectralDecomposition out;
  for (auto [b, e] : group_sorted(lam, gap)) {
    CMat proj = CMat::Zero(m, m);
    double sum = 0.0;
    for (int i = b; i < e; ++i) {
      const CVec u = es.eigenvectors().col(m - 1 - i);
      proj += u * u.adjoint();
      sum += lam[i];
    }
    out.idempotents.push_back(alg.from_matrix(proj));
    out.eigenvalues.push_back(sum / (e - b));
    out.multiplicities.push_back(e - b);
  }
  return out;
}

SpectralDecomposition grouped_from_krylov(const EuclideanJordanAlgebra& alg,
                                          const Vec& x, double gap) {
  const int n = alg.dim();
  const Mat t = left_mult(alg, x);
  const double tnorm = std::max(1.0, t.norm());
  const Vec& e = alg.unit();

  // Orthonormal basis of R[x] = span{e, x, x^2, ...}.
  Mat q(n, std::min(n, alg.rank() + 1));
  int k = 0;
  q.col(k++) = e / e.norm();
  while (k < q.cols()) {
    Vec w = t * q.col(k - 1);
    for (int pass = 0; pass < 2; ++pass) {
      w -= q.leftCols(k) * (q.leftCols(k).transpose() * w);
    }
    if (w.norm() <= 1e-10 * tnorm) break;
    q.col(k++) = w / w.norm();
  }
  const Mat basis = q.leftCols(k);
  const auto es = symmetric_eigen(basis.transpose() * t * basis);

  const double ee = e.squaredNorm();
  std::vector<double> lam;
  std::vector<Vec> idem;
  for (int i = k - 1; i >= 0; --i) {
    const Vec v = basis * es.eigenvectors().col(i);
    lam.push_back(es.eigenvalues()(i));
    idem.push_back(v * (v.dot(e) / v.squaredNorm()));
  }
  SpectralDecomposition out;
  for (auto [b, end] : group_sorted(lam, gap)) {
    Vec c = Vec::Zero(n);
    double weighted = 0.0, mass = 0.0;
    for (int i = b; i < end; ++i) {
      c += idem[i];
      const double w = idem[i].dot(e);
      weighted += lam[i] * w;
      mass += w;
    }
    const int mult = std::max(
        1, static_cast<int>(std::lround(alg.rank() * c.dot(e) / ee)));
    out.idempotents.push_back(c);
    out.eigenvalues.push_back(weighted / mass);
    out.multiplicities.push_back(mult);
  }
  return out;
}

}  // namespace

SpectralDecomposition spectral_decompose(const EuclideanJordanAlgebra& alg,
                                         const Vec& x, const Tolerances& tol) {
  alg.check_element(x);
  const double gap = tol.eig * std::max(1.0, x.norm());
  if (alg.has_realization()) return grouped_from_matrix(alg, x, gap);
  return grouped_from_krylov(alg, x, gap);
}

SpectralDecomposition jordan_frame(const EuclideanJordanAlgebra& alg,
                                   const Vec& x) {
  alg.check_element(x);
  if (!alg.has_realization()) {
    throw Error(ErrorCode::InvalidAlgebra, "Jordan frames need a matrix realization");
  }
  SpectralDecomposition out;
  const int m = alg.matrix_size();
  if (alg.kind() == AlgebraKind::Diagonal) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x(a) > x(b); });
    for (int i : order) {
      out.idempotents.push_back(Vec::Unit(m, i));
      out.eigenvalues.push_back(x(i));
      out.multiplicities.push_back(1);
    }
    return out;
  }
  const auto es = hermitian_eigen(alg.to_matrix(x));
  for (int i = m - 1; i >= 0; --i) {
    const CVec u = es.eigenvectors().col(i);
    out.idempotents.push_back(alg.from_matrix(u * u.adjoint()));
    out.eigenvalues.push_back(es.eigenvalues()(i));
    out.multiplicities.push_back(1);
  }
  return out;
}

double determinant(const EuclideanJordanAlgebra& alg, const Vec& x,
                   const Tolerances& tol) {
  const auto sd = spectral_decompose(alg, x, tol);
  double det = 1.0;
  for (std::size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    det *= std::pow(sd.eigenvalues[k], sd.multiplicities[k]);
  }
  return det;
}

Vec spectral_map(const EuclideanJordanAlgebra& alg, const Vec& x,
                 SpectralFunction f, SpectralMapOptions options,
                 const Tolerances& tol) {
  const auto sd = spectral_decompose(alg, x, tol);
  const double zero = tol.eig * std::max(1.0, x.norm());
  Vec out = Vec::Zero(alg.dim());
  for (std::size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    const double lam = sd.eigenvalues[k];
    const bool is_zero = std::abs(lam) <= zero;
    double val = 0.0;
    switch (f) {
      case SpectralFunction::Exp:
        val = std::exp(lam);
        break;
      case SpectralFunction::Log:
        if (!(lam > 0.0)) {
          throw Error(ErrorCode::DomainError, "log of an element outside the cone");
        }
        val = std::log(lam);
        break;
      case SpectralFunction::PseudoInverse:
        val = is_zero ? (options.proof_convention ? 1.0 : 0.0) : 1.0 / lam;
        break;
      case SpectralFunction::Abs:
        val = std::abs(lam);
        break;
      case SpectralFunction::Step:
        val = (!is_zero && lam > 0.0) ? 1.0 : 0.0;
        break;
    }
    out += val * sd.idempotents[k];
  }
  return out;
}

double min_spectral_value(const EuclideanJordanAlgebra& alg, const Vec& x,
                          const Tolerances& tol) {
  return spectral_decompose(alg, x, tol).eigenvalues.back();
}

bool cone_contains(const EuclideanJordanAlgebra& alg, const Vec& x,
                   ConeMode mode, const Tolerances& tol) {
  const double lmin = min_spectral_value(alg, x, tol);
  return mode == ConeMode::Open ? lmin > tol.cone : lmin >= -tol.cone;
}

Mat box_operator(const EuclideanJordanAlgebra& alg, const Vec& u,
                 const Vec& u_prime) {
  const Mat tu = left_mult(alg, u);
  const Mat tv = left_mult(alg, u_prime);
  return left_mult(alg, tu * u_prime) + tu * tv - tv * tu;
}

PeirceSystem peirce_system(const EuclideanJordanAlgebra& alg, const Vec& c,
                           const Tolerances& tol) {
  const Mat t = left_mult(alg, c);
  if ((t * c - c).norm() > tol.zero * std::max(1.0, c.norm()) * 10.0) {
    throw Error(ErrorCode::NotIdempotent, "c o c differs from c");
  }
  const auto es = symmetric_eigen(t);
  const int n = alg.dim();
  Mat one(n, 0), half(n, 0), zero(n, 0);
  auto append = [](Mat& m, const Vec& v) {
    m.conservativeResize(Eigen::NoChange, m.cols() + 1);
    m.col(m.cols() - 1) = v;
  };
  for (int i = 0; i < n; ++i) {
    const double lam = es.eigenvalues()(i);
    const Vec v = es.eigenvectors().col(i);
    if (std::abs(lam - 1.0) <= tol.eig * 100) {
      append(one, v);
    } else if (std::abs(lam - 0.5) <= tol.eig * 100) {
      append(half, v);
    } else if (std::abs(lam) <= tol.eig * 100) {
      append(zero, v);
    } else {
      throw Error(ErrorCode::NotIdempotent,
                  "T_c has eigenvalue " + std::to_string(lam));
    }
  }
  return PeirceSystem{c, one * one.transpose(), half * half.transpose(),
                      zero * zero.transpose()};
}

Mat exp_left_mult(const EuclideanJordanAlgebra& alg, const Vec& u,
                  const Tolerances& tol) {
  return quad_rep(alg, spectral_map(alg, u * 0.5, SpectralFunction::Exp, {}, tol));
}

}  // namespace qsiegel
