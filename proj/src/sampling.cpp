#include "qsiegel/sampling.hpp"

#include <cmath>

namespace qsiegel {

Vec random_element(const EuclideanJordanAlgebra& alg, CounterRng& rng) {
  Vec x(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) x(i) = rng.normal();
  return x;
}

Vec random_cone_point(const EuclideanJordanAlgebra& alg, CounterRng& rng,
                      double lo, double hi) {
  const Vec a = random_element(alg, rng);
  const SpectralDecomposition sd =
      alg.has_realization() ? jordan_frame(alg, a) : spectral_decompose(alg, a);
  Vec x = Vec::Zero(alg.dim());
  const double llo = std::log(lo), lhi = std::log(hi);
  for (const Vec& c : sd.idempotents) {
    x += std::exp(llo + (lhi - llo) * rng.uniform()) * c;
  }
  return x;
}

CVec gaussian_v(int n, CounterRng& rng) {
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v;
}

CVec random_v(int n, CounterRng& rng, double radius) {
  if (n == 0) return CVec(0);
  CVec g = gaussian_v(n, rng);
  return g * (radius * rng.uniform() / g.norm());
}

Vec random_in(const RealSubspace& s, CounterRng& rng) {
  Vec c(s.dim());
  for (Eigen::Index i = 0; i < s.dim(); ++i) c(i) = rng.normal();
  return s.basis() * c;
}

SiegelPoint random_domain_point(const JordanRepresentation& rep,
                                CounterRng& rng, double v_radius) {
  const auto& alg = rep.algebra();
  const Vec x0 = random_element(alg, rng);
  const Vec y = random_cone_point(alg, rng);
  const CVec v = random_v(rep.n(), rng, v_radius);
  const Vec h = y + q_real(rep, v);
  CVec z(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) z(i) = Complex(x0(i), h(i));
  return {z, v};
}

SiegelPoint random_domain_point_in(const JordanRepresentation& rep,
                                   const RealSubspace& v_space,
                                   CounterRng& rng) {
  const auto& alg = rep.algebra();
  const Vec x0 = random_element(alg, rng);
  const Vec y = random_cone_point(alg, rng);
  const CVec v = complexify(random_in(v_space, rng));
  const Vec h = y + q_real(rep, v);
  CVec z(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) z(i) = Complex(x0(i), h(i));
  return {z, v};
}

}  // namespace qsiegel
