#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsiegel/representation.hpp"
#include "qsiegel/subspace.hpp"

namespace qsiegel {

struct Witness {
  std::vector<Vec> vectors;
  std::optional<SiegelPoint> point;
  std::optional<Vec> x;
};

struct Certificate {
  std::string condition;
  bool verdict = false;
  double residual = 0.0;
  std::optional<Witness> witness;
  double tol = 0.0;
  std::uint64_t seed = 0;
  int samples = 0;
  std::optional<double> metric_scale;
};

/// Block-diagonal form on the tangent space R^{2N + 2n} at (ie, 0):
/// U-block diag(C, C) with C_kl = (tr T_{b_k b_l} + tr R_{b_k b_l}) / 2 and
/// V-block g_{e'} with <e', x> = 2 (tr T_x + tr R_x), tr R the complex trace.
struct BaseMetric {
  Mat g;
  Mat c;
  Vec e_prime;
};

/// Throws NotPositiveDefinite.
BaseMetric base_metric(const JordanRepresentation& rep);

/// Least-squares factor t with quadrature metric ~ t * base metric.
double metric_scale(const JordanRepresentation& rep, std::int64_t samples,
                    std::uint64_t seed, int threads = 1);

/// Complex structure on tangent coordinates.
Mat tangent_j(const JordanRepresentation& rep);

struct CertifyConfig {
  int coisotropic_samples = 20;
  int orbit_samples = 50;
  int orthocomplement_samples = 20;
  std::uint64_t seed = 0;
  int threads = 1;
  /// Multiplies the base metric; verdicts must not depend on it.
  double metric_factor = 1.0;
  /// Samples for the reported metric scale; 0 skips the estimate.
  std::int64_t scale_samples = 0;
  Tolerances tol = kDefaultTolerances;
};

/// Residual max |Im Q(s, s')| over an orthonormal basis of S = j(W^perp).
Certificate check_imq_vanishes(const JordanRepresentation& rep,
                               const RealSubspace& w,
                               const Tolerances& tol = kDefaultTolerances);

/// At sampled domain points: (tangent)^{perp, G} inside J (tangent) for the
/// orbit of n(U, W), after transport to (ie, 0).
Certificate check_coisotropic(const JordanRepresentation& rep,
                              const RealSubspace& w,
                              const CertifyConfig& config = {});

/// Distance between (T_c G^W c)^{perp} and J T_c H_c c at sampled c in
/// (i Omega x jS) within the domain. Throws HypothesisViolated when
/// Im Q(S, S) does not vanish.
Certificate check_orthocomplement(const JordanRepresentation& rep,
                          const RealSubspace& w,
                          const CertifyConfig& config = {});

/// j W^{perp, g_x} inside ker g_x + W. Throws NotPSD unless g_x >= 0.
Certificate check_orbit_multiplicity(const JordanRepresentation& rep,
                                     const RealSubspace& w, const Vec& x,
                                     const Tolerances& tol = kDefaultTolerances);

/// check_orbit_multiplicity at `orbit_samples` random cone points.
Certificate check_orbit_multiplicity_sampled(const JordanRepresentation& rep,
                                             const RealSubspace& w,
                                             const CertifyConfig& config = {});

struct CertifyReport {
  Certificate imq;
  Certificate coisotropic;
  Certificate orbit;
  std::optional<Certificate> orthocomplement;
  bool consistent = false;
  bool mf = false;
};

CertifyReport certify_all(const JordanRepresentation& rep,
                          const RealSubspace& w,
                          const CertifyConfig& config = {});

}  // namespace qsiegel
