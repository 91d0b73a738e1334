#include "qsiegel/representation.hpp"

#include <cmath>

#include "qsiegel/error.hpp"
#include "qsiegel/random.hpp"

namespace qsiegel {

JordanRepresentation::JordanRepresentation(EuclideanJordanAlgebra alg,
                                           std::vector<CMat> r, int copies)
    : alg_(std::move(alg)), r_(std::move(r)), copies_(copies) {
  n_ = r_.empty() ? 0 : static_cast<int>(r_[0].rows());
}

JordanRepresentation JordanRepresentation::standard(
    const EuclideanJordanAlgebra& alg, int copies) {
  if (!alg.has_realization()) {
    throw Error(ErrorCode::InvalidRepresentation,
                "standard representation needs a matrix realization");
  }
  if (copies < 1) throw Error(ErrorCode::InvalidRepresentation, "copies must be positive");
  const int m = alg.matrix_size();
  std::vector<CMat> r;
  for (const CMat& b : alg.realization_basis()) {
    CMat block = CMat::Zero(m * copies, m * copies);
    for (int c = 0; c < copies; ++c) block.block(c * m, c * m, m, m) = 0.5 * b;
    r.push_back(block);
  }
  return JordanRepresentation(alg, std::move(r), copies);
}

JordanRepresentation JordanRepresentation::from_matrices(
    const EuclideanJordanAlgebra& alg, std::vector<CMat> r_basis,
    const Tolerances& tol) {
  if (static_cast<int>(r_basis.size()) != alg.dim()) {
    throw Error(ErrorCode::InvalidRepresentation, "need one matrix per basis element");
  }
  const Eigen::Index n = r_basis[0].rows();
  for (const CMat& m : r_basis) {
    if (m.rows() != n || m.cols() != n) {
      throw Error(ErrorCode::InvalidRepresentation, "matrices must be square of equal size");
    }
    if ((m - m.adjoint()).norm() > tol.zero) {
      throw Error(ErrorCode::InvalidRepresentation, "R_x is not self-adjoint");
    }
  }
  JordanRepresentation rep(alg, std::move(r_basis), 1);
  const CMat half = 0.5 * CMat::Identity(n, n);
  if ((rep.r(alg.unit()) - half).norm() > tol.zero * std::max<double>(1, n)) {
    throw Error(ErrorCode::InvalidRepresentation, "R_e differs from Id/2");
  }
  for (std::uint64_t s = 0; s < 8; ++s) {
    CounterRng rng(0x4e9ULL, s);
    Vec x(alg.dim()), y(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) x(i) = rng.normal();
    for (int i = 0; i < alg.dim(); ++i) y(i) = rng.normal();
    const CMat rx = 2.0 * rep.r(x), ry = 2.0 * rep.r(y);
    const CMat lhs = 2.0 * rep.r(alg.product(x, y));
    const CMat rhs = 0.5 * (rx * ry + ry * rx);
    if ((lhs - rhs).norm() > tol.zero * (1.0 + x.norm() * y.norm()) * 10.0) {
      throw Error(ErrorCode::InvalidRepresentation, "2R is not a Jordan homomorphism");
    }
  }
  return rep;
}

CMat JordanRepresentation::r(const Vec& x) const {
  alg_.check_element(x);
  CMat out = CMat::Zero(n_, n_);
  for (int k = 0; k < alg_.dim(); ++k) {
    if (x(k) != 0.0) out += x(k) * r_[k];
  }
  return out;
}

void JordanRepresentation::check_vector(const CVec& v) const {
  if (v.size() != n_) {
    throw Error(ErrorCode::DimensionMismatch,
                "V vector has length " + std::to_string(v.size()) + ", expected " +
                    std::to_string(n_));
  }
}

CVec q_eval(const JordanRepresentation& rep, const CVec& v, const CVec& w) {
  rep.check_vector(v);
  rep.check_vector(w);
  const int dim = rep.algebra().dim();
  CVec q(dim);
  for (int k = 0; k < dim; ++k) q(k) = 2.0 * w.dot(rep.r_basis(k) * v);
  return q;
}

Vec q_real(const JordanRepresentation& rep, const CVec& v) {
  return q_eval(rep, v, v).real();
}

Vec im_q(const JordanRepresentation& rep, const Vec& a, const Vec& b) {
  return q_eval(rep, complexify(a), complexify(b)).imag();
}

Mat g_form(const JordanRepresentation& rep, const Vec& x) {
  return realify(CMat(2.0 * rep.r(x)));
}

Mat omega_form(const JordanRepresentation& rep, const Vec& x) {
  return g_form(rep, x) * j_matrix(rep);
}

Mat j_matrix(const JordanRepresentation& rep) { return complex_structure(rep.n()); }

Vec domain_height(const JordanRepresentation& rep, const SiegelPoint& p) {
  if (p.z.size() != rep.algebra().dim()) {
    throw Error(ErrorCode::DimensionMismatch, "z has wrong length");
  }
  return p.z.imag() - q_real(rep, p.v);
}

bool domain_contains(const JordanRepresentation& rep, const SiegelPoint& p,
                     const Tolerances& tol) {
  return cone_contains(rep.algebra(), domain_height(rep, p), ConeMode::Open, tol);
}

GroupElement group_mul(const JordanRepresentation& rep, const GroupElement& a,
                       const GroupElement& b) {
  return {a.x0 + b.x0 + 0.5 * group_bracket(rep, a.v0, b.v0), a.v0 + b.v0};
}

GroupElement group_inverse(const GroupElement& a) { return {-a.x0, -a.v0}; }

Vec group_bracket(const JordanRepresentation& rep, const CVec& v1,
                  const CVec& v2) {
  return 4.0 * q_eval(rep, v1, v2).imag();
}

SiegelPoint group_act(const JordanRepresentation& rep, const GroupElement& g,
                      const SiegelPoint& p) {
  CVec z = p.z + g.x0.cast<Complex>() + 2.0 * kI * q_eval(rep, p.v, g.v0) +
           kI * q_eval(rep, g.v0, g.v0);
  return {z, p.v + g.v0};
}

Vec tangent_coords(const CVec& zeta, const CVec& gamma) {
  Vec out(2 * zeta.size() + 2 * gamma.size());
  out << realify(zeta), realify(gamma);
  return out;
}

RealSubspace orbit_tangent(const JordanRepresentation& rep,
                           const RealSubspace& w, const SiegelPoint& p,
                           const Tolerances& tol) {
  const int dim = rep.algebra().dim();
  const int n = rep.n();
  if (w.ambient() != 2 * n) {
    throw Error(ErrorCode::DimensionMismatch, "W is not a subspace of V_R");
  }
  Mat vecs(2 * dim + 2 * n, dim + w.dim());
  for (int k = 0; k < dim; ++k) {
    vecs.col(k) = tangent_coords(Vec::Unit(dim, k).cast<Complex>(), CVec::Zero(n));
  }
  for (Eigen::Index k = 0; k < w.dim(); ++k) {
    const CVec wk = complexify(w.basis().col(k));
    vecs.col(dim + k) = tangent_coords(2.0 * kI * q_eval(rep, p.v, wk), wk);
  }
  return RealSubspace::span(vecs, tol.rank);
}

CMat exp_minus_r(const JordanRepresentation& rep, const Vec& u,
                 const Tolerances& tol) {
  return 2.0 * rep.r(spectral_map(rep.algebra(), -0.5 * u, SpectralFunction::Exp, {}, tol));
}

Transport transport_to_base(const JordanRepresentation& rep,
                            const SiegelPoint& p, const Tolerances& tol) {
  const auto& alg = rep.algebra();
  const int dim = alg.dim();
  const int n = rep.n();
  rep.check_vector(p.v);
  const Vec y = domain_height(rep, p);
  if (!cone_contains(alg, y, ConeMode::Open, tol)) {
    throw Error(ErrorCode::NotInDomain, "point is outside the Siegel domain");
  }
  const Vec u = spectral_map(alg, y, SpectralFunction::Log, {}, tol);
  const Mat eu = exp_left_mult(alg, -u, tol);
  const CMat ev = exp_minus_r(rep, u, tol);

  // d n(0, -v): (zeta, gamma) -> (zeta - 2i Q(gamma, v), gamma); Q(gamma, v)
  // is complex-linear in gamma with rows 2 v^H R_k.
  CMat mq(dim, n);
  for (int k = 0; k < dim; ++k) mq.row(k) = 2.0 * (p.v.adjoint() * rep.r_basis(k));
  Mat shear = Mat::Identity(2 * dim + 2 * n, 2 * dim + 2 * n);
  shear.topRightCorner(2 * dim, 2 * n) = realify(CMat(-2.0 * kI * mq));
  Mat scale = Mat::Zero(2 * dim + 2 * n, 2 * dim + 2 * n);
  scale.topLeftCorner(2 * dim, 2 * dim) = realify(CMat(eu.cast<Complex>()));
  scale.bottomRightCorner(2 * n, 2 * n) = realify(ev);

  Transport t;
  t.image.z = (kI * (eu * y)).eval();
  t.image.v = CVec::Zero(n);
  t.derivative = scale * shear;
  t.u = u;
  return t;
}

CMat beta_box(const JordanRepresentation& rep, const Vec& u, const Vec& u_prime) {
  const CMat ru = rep.r(u), rv = rep.r(u_prime);
  return rep.r(rep.algebra().product(u, u_prime)) + ru * rv - rv * ru;
}

}  // namespace qsiegel
