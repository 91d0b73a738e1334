#pragma once

#include <cmath>
#include <initializer_list>

#include "qsiegel/jordan.hpp"
#include "qsiegel/random.hpp"
#include "qsiegel/sampling.hpp"

namespace qsiegel::testing {

inline CVec cvec(std::initializer_list<Complex> xs) {
  CVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

inline Vec rvec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

/// Element over a random Jordan frame with spectral values of random sign
/// and magnitude log-uniform in [0.2, 5]; invertible and well conditioned.
inline Vec random_invertible(const EuclideanJordanAlgebra& alg, CounterRng& rng) {
  // a generic element has simple spectrum, so its idempotents are primitive
  const Vec g = random_element(alg, rng);
  const auto frame = alg.has_realization() ? jordan_frame(alg, g) : spectral_decompose(alg, g);
  Vec x = Vec::Zero(alg.dim());
  for (const Vec& c : frame.idempotents) {
    const double mag = std::exp(std::log(0.2) + rng.uniform() * std::log(25.0));
    x += (rng.uniform() < 0.5 ? -mag : mag) * c;
  }
  return x;
}

/// Random real subspace of R^m of dimension d.
inline RealSubspace random_subspace(Eigen::Index m, Eigen::Index d, CounterRng& rng) {
  Mat b(m, d);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < d; ++j) b(i, j) = rng.normal();
  return RealSubspace::span(b);
}

}  // namespace qsiegel::testing
