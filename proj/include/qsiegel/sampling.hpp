#pragma once

#include "qsiegel/random.hpp"
#include "qsiegel/representation.hpp"

namespace qsiegel {

/// Standard Gaussian coordinates.
Vec random_element(const EuclideanJordanAlgebra& alg, CounterRng& rng);

/// Cone point with spectral values log-uniform in [lo, hi] over a random
/// Jordan frame.
Vec random_cone_point(const EuclideanJordanAlgebra& alg, CounterRng& rng,
                      double lo = 0.2, double hi = 5.0);

/// Gaussian direction with norm uniform in [0, radius].
CVec random_v(int n, CounterRng& rng, double radius = 2.0);

/// Complex Gaussian vector.
CVec gaussian_v(int n, CounterRng& rng);

/// Random vector of a real subspace (Gaussian coefficients).
Vec random_in(const RealSubspace& s, CounterRng& rng);

/// (x0 + i(y + Q(v, v)), v) with x0 Gaussian, y from random_cone_point and
/// |v| <= v_radius; in the domain by construction.
SiegelPoint random_domain_point(const JordanRepresentation& rep,
                                CounterRng& rng, double v_radius = 2.0);

/// Same, with v restricted to a real subspace of V_R.
SiegelPoint random_domain_point_in(const JordanRepresentation& rep,
                                   const RealSubspace& v_space,
                                   CounterRng& rng);

}  // namespace qsiegel
