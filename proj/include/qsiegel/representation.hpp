#pragma once

#include <vector>

#include "qsiegel/jordan.hpp"
#include "qsiegel/subspace.hpp"

namespace qsiegel {

/// x -> R_x on (V, h) with h(a, b) = b^H a, such that x -> 2R_x is a unital
/// Jordan homomorphism into the Hermitian operators. The Hermitian map Q is
/// determined by <x, Q(v, v')> = 2 h(R_x v, v').
class JordanRepresentation {
 public:
  /// R_x = 1/2 X on (C^m)^copies, acting blockwise; m is the realization
  /// size of the algebra.
  static JordanRepresentation standard(const EuclideanJordanAlgebra& alg,
                                       int copies = 1);

  /// Raw family R_{b_k}; validated for self-adjointness, R_e = 1/2 Id and
  /// the homomorphism property. Throws InvalidRepresentation.
  static JordanRepresentation from_matrices(
      const EuclideanJordanAlgebra& alg, std::vector<CMat> r_basis,
      const Tolerances& tol = kDefaultTolerances);

  const EuclideanJordanAlgebra& algebra() const { return alg_; }
  /// Complex dimension of V.
  int n() const { return n_; }
  int copies() const { return copies_; }
  const CMat& r_basis(int k) const { return r_[k]; }

  CMat r(const Vec& x) const;

  void check_vector(const CVec& v) const;

 private:
  JordanRepresentation(EuclideanJordanAlgebra alg, std::vector<CMat> r,
                       int copies);

  EuclideanJordanAlgebra alg_;
  std::vector<CMat> r_;
  int n_ = 0;
  int copies_ = 0;
};

struct SiegelPoint {
  CVec z;  // coordinates in U_C
  CVec v;
};

/// n(x0, v0)
struct GroupElement {
  Vec x0;
  CVec v0;
};

/// Q(v, v') as coordinates in U_C; complex-linear in v.
CVec q_eval(const JordanRepresentation& rep, const CVec& v, const CVec& w);

/// Real coordinates of Q(v, v), which lies in U.
Vec q_real(const JordanRepresentation& rep, const CVec& v);

/// Im Q(v, v') for real-coordinate vectors of V_R.
Vec im_q(const JordanRepresentation& rep, const Vec& a, const Vec& b);

/// Gram matrix of g_x(v1, v2) = <x, Re Q(v1, v2)> on V_R.
Mat g_form(const JordanRepresentation& rep, const Vec& x);

/// Matrix of omega_x(v, v') = g_x(v, j v').
Mat omega_form(const JordanRepresentation& rep, const Vec& x);

/// Complex structure j of V_R.
Mat j_matrix(const JordanRepresentation& rep);

/// Im z - Q(v, v).
Vec domain_height(const JordanRepresentation& rep, const SiegelPoint& p);

bool domain_contains(const JordanRepresentation& rep, const SiegelPoint& p,
                     const Tolerances& tol = kDefaultTolerances);

GroupElement group_mul(const JordanRepresentation& rep, const GroupElement& a,
                       const GroupElement& b);
GroupElement group_inverse(const GroupElement& a);
/// [v1, v2] = 4 Im Q(v1, v2).
Vec group_bracket(const JordanRepresentation& rep, const CVec& v1,
                  const CVec& v2);
SiegelPoint group_act(const JordanRepresentation& rep, const GroupElement& g,
                      const SiegelPoint& p);

/// Tangent coordinates are (Re z, Im z, Re v, Im v) in R^{2N + 2n}.
Vec tangent_coords(const CVec& zeta, const CVec& gamma);

/// Tangent space at p of the orbit of the group n(U, W).
RealSubspace orbit_tangent(const JordanRepresentation& rep,
                           const RealSubspace& w, const SiegelPoint& p,
                           const Tolerances& tol = kDefaultTolerances);

struct Transport {
  SiegelPoint image;
  /// Derivative of the holomorphic map sending p to (ie, 0), in tangent
  /// coordinates.
  Mat derivative;
  /// u = log(Im z - Q(v, v)).
  Vec u;
};

/// Composite of n(0, -v), n(-Re z, 0) and (e^{-T_u}, e^{-R_u}).
/// Throws NotInDomain.
Transport transport_to_base(const JordanRepresentation& rep,
                            const SiegelPoint& p,
                            const Tolerances& tol = kDefaultTolerances);

/// e^{-R_u} = 2 R_{exp(-u/2)}.
CMat exp_minus_r(const JordanRepresentation& rep, const Vec& u,
                 const Tolerances& tol = kDefaultTolerances);

/// beta(u box u') = R_{uu'} + [R_u, R_{u'}].
CMat beta_box(const JordanRepresentation& rep, const Vec& u, const Vec& u_prime);

}  // namespace qsiegel
