#pragma once

#include <optional>
#include <vector>

#include "qsiegel/derived_spaces.hpp"
#include "qsiegel/representation.hpp"

namespace qsiegel {

struct LambdaReport {
  bool psd_on_p = false;
  bool radical_in_kernel = false;
  bool radical_complex = false;
  /// Complex dimension of N_x when x is in Lambda.
  std::optional<int> k;
};

LambdaReport lambda_report(const JordanRepresentation& rep,
                           const RealSubspace& w, const Vec& x,
                           const Tolerances& tol = kDefaultTolerances);

/// k = dim_C N_x when x is in Lambda_k, nullopt otherwise.
std::optional<int> classify_lambda(const JordanRepresentation& rep,
                                   const RealSubspace& w, const Vec& x,
                                   const Tolerances& tol = kDefaultTolerances);

struct KernelParams {
  JordanRepresentation rep;
  Vec x;
  int k = 0;
  /// chi on the orthonormal basis of S, extended complex-linearly.
  Vec chi;
  DerivedSpaces spaces;
  /// Real basis of S read as complex vectors; a complex basis of S + jS.
  CMat s_frame;
  /// Matrix of A^x = 2 (p^x)^* R_x p^x in the frame.
  CMat a_x;
};

struct KernelOptions {
  bool require_lambda = true;
  std::optional<RealSubspace> s_upper;
};

/// Throws NotInLambda, or DecompositionFailure when S + jS is not a
/// complement of P.
KernelParams build_kernel_params(const JordanRepresentation& rep,
                                 const RealSubspace& w, const Vec& x,
                                 const Vec& chi,
                                 const KernelOptions& options = {},
                                 const Tolerances& tol = kDefaultTolerances);

/// L^{x,chi}(p1, p2).
Complex eval_kernel(const KernelParams& params, const SiegelPoint& p1,
                    const SiegelPoint& p2,
                    const Tolerances& tol = kDefaultTolerances);

/// e^{2 <x, Q(q, q')>}.
Complex fock_kernel(const JordanRepresentation& rep, const Vec& x,
                    const CVec& q, const CVec& q_prime);

struct GramReport {
  int points = 0;
  double min_eigenvalue = 0.0;
  double norm = 0.0;
  double hermitian_defect = 0.0;
  bool psd = false;
};

GramReport gram_report(const CMat& gram, const Tolerances& tol = kDefaultTolerances);

GramReport gram_psd_report(const KernelParams& params,
                           const std::vector<SiegelPoint>& points,
                           const Tolerances& tol = kDefaultTolerances);

/// W = P + S built from a primitive idempotent e1: S is a real form of the
/// range of 2R_{e1} and P = R_{e - e1} V.
RealSubspace main2_subspace(const JordanRepresentation& rep, const Vec& e1,
                            const Tolerances& tol = kDefaultTolerances);

struct Main2Result {
  double c = 0.0;
  Vec y;
  double factor_residual = 0.0;
  /// max |h(s, A^x conj s) - c h(s, conj s)| over the sampled s.
  double deviation = 0.0;
  int samples = 0;
};

struct PeirceParts {
  Vec x1, x_half, x0;
};

PeirceParts peirce_parts(const EuclideanJordanAlgebra& alg, const Vec& e1,
                         const Vec& x, const Tolerances& tol = kDefaultTolerances);

/// Scalar c = <x1 - 2 T_{e1} (T_y)^2 x0, e1> with x_half = 2 T_y x0, and its
/// comparison with A^x on the main2 subspace for `samples` random s.
/// Throws FrameInvalid, NotInLambda (T_{x0} not PSD on U(e1, 0)) and
/// FactorizationResidualTooLarge.
Main2Result main2_scalar_check(const JordanRepresentation& rep, const Vec& e1,
                               const Vec& x, int samples = 100,
                               std::uint64_t seed = 0,
                               const Tolerances& tol = kDefaultTolerances);

}  // namespace qsiegel
