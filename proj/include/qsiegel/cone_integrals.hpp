#pragma once

#include <cstdint>

#include "qsiegel/representation.hpp"

namespace qsiegel {

/// Gamma function of the symmetric cone of a built-in algebra,
/// (2 pi)^{(N - r)/2} prod_j Gamma(s - (j - 1) d / 2).
double cone_gamma(const EuclideanJordanAlgebra& alg, double s);

enum class IntegralMethod { Closed, MonteCarlo };

struct ConeIntegrals {
  double i_u = 0.0;
  double i_u_std_error = 0.0;
  bool i_closed_form = true;
  double i_q = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// I(u) = int_Omega e^{-2<u,y>} dy and I_Q(u) = int_V e^{-2<u,Q(v,v)>} dv.
/// The MC estimate of I samples directions on the unit sphere and
/// integrates the radial part exactly. Throws NotInCone and
/// MCVarianceTooHigh (relative standard error above 1%).
ConeIntegrals cone_integrals(const JordanRepresentation& rep, const Vec& u,
                             IntegralMethod method = IntegralMethod::Closed,
                             std::int64_t samples = 200000,
                             std::uint64_t seed = 0,
                             const Tolerances& tol = kDefaultTolerances);

struct BergmanEstimate {
  Complex value;
  /// Standard error of |value| (quadrature error estimate for rank 1).
  double std_error = 0.0;
  std::int64_t samples = 0;
  bool quadrature = false;
};

struct McOptions {
  std::int64_t samples = 1000000;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// K(p1, p2) = (2 pi)^{-N} int_Omega e^{i<u, z - conj z' - 2i Q(v, v')>}
/// / (I(u) I_Q(u)) du. Rank 1 uses adaptive Gauss-Kronrod on [0, inf);
/// higher rank uses importance sampling from a Wishart-type law matched to
/// the decay of the integrand. Throws NotInDomain and QuadratureFailure.
BergmanEstimate bergman_kernel(const JordanRepresentation& rep,
                               const SiegelPoint& p1, const SiegelPoint& p2,
                               const McOptions& options = {},
                               const Tolerances& tol = kDefaultTolerances);

/// Bergman metric at (ie, 0) estimated from the integral representation:
/// the U-block is Cov(u) and the V-block is g_{2E[u]} under the probability
/// law proportional to e^{-2<u,e>} / (I(u) I_Q(u)).
Mat quadrature_metric(const JordanRepresentation& rep, const McOptions& options,
                      const Tolerances& tol = kDefaultTolerances);

}  // namespace qsiegel
