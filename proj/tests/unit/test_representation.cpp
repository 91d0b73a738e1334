#include <complex>

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "qsiegel/error.hpp"
#include "qsiegel/representation.hpp"
#include "qsiegel/sampling.hpp"

using namespace qsiegel;
using namespace std::complex_literals;

namespace {

CVec cvec(std::initializer_list<Complex> xs) {
  CVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

Vec rvec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

const JordanRepresentation& rank1() {
  static const auto rep = JordanRepresentation::standard(EuclideanJordanAlgebra::diagonal(1));
  return rep;
}

std::vector<JordanRepresentation> models() {
  return {JordanRepresentation::standard(EuclideanJordanAlgebra::diagonal(1)),
          JordanRepresentation::standard(EuclideanJordanAlgebra::diagonal(2)),
          JordanRepresentation::standard(EuclideanJordanAlgebra::sym_real(2)),
          JordanRepresentation::standard(EuclideanJordanAlgebra::herm_complex(2)),
          JordanRepresentation::standard(EuclideanJordanAlgebra::sym_real(3), 2)};
}

// e^{T_u} acting on complex coordinates.
CVec exp_t(const EuclideanJordanAlgebra& alg, const Vec& u, const CVec& z) {
  const Mat e = exp_left_mult(alg, u);
  return (e * z.real()).cast<Complex>() + Complex(0, 1) * (e * z.imag()).cast<Complex>();
}

}  // namespace

TEST_CASE("Q examples") {
  const CVec q = q_eval(rank1(), cvec({1.0}), cvec({1i}));
  CHECK(std::abs(q(0) - Complex(0, -1)) < 1e-14);
  CHECK(q_eval(rank1(), cvec({2.0 + 1i}), cvec({0.0})).norm() == 0.0);

  const auto s2 = JordanRepresentation::standard(EuclideanJordanAlgebra::sym_real(2));
  const CVec e1 = cvec({1.0, 0.0});
  CHECK((q_eval(s2, e1, e1) - cvec({1.0, 0.0, 0.0})).norm() < 1e-14);

  // Q(v, v') = 1/2 (v v'^* + conj(v') v^T) in Sym(2) against the inner product tr(AB).
  for (std::uint64_t s = 0; s < 20; ++s) {
    CounterRng rng(3, s);
    const CVec v = gaussian_v(2, rng), w = gaussian_v(2, rng);
    const CMat m = 0.5 * (v * w.adjoint() + w.conjugate() * v.transpose());
    CVec expected(3);
    for (int k = 0; k < 3; ++k) {
      expected(k) = (s2.algebra().realization_basis()[k] * m).trace();
    }
    CHECK((q_eval(s2, v, w) - expected).norm() < 1e-12);
  }
}

TEST_CASE("Q reconstruction identity") {
  for (const auto& rep : models()) {
    const auto& alg = rep.algebra();
    for (std::uint64_t s = 0; s < 20; ++s) {
      CounterRng rng(4, s);
      const Vec x = random_element(alg, rng);
      const CVec v = gaussian_v(rep.n(), rng), w = gaussian_v(rep.n(), rng);
      const Complex lhs = x.cast<Complex>().cwiseProduct(q_eval(rep, v, w)).sum();
      const Complex rhs = 2.0 * w.dot(rep.r(x) * v);
      CHECK(std::abs(lhs - rhs) < 1e-10);
      const Vec qq = q_real(rep, v);
      CHECK(alg.inner(alg.unit(), qq) == doctest::Approx(v.squaredNorm()));
    }
  }
}

TEST_CASE("forms") {
  CHECK((g_form(rank1(), rvec({1.0})) - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK(g_form(rank1(), rvec({0.0})).norm() == 0.0);
  for (const auto& rep : models()) {
    const int m = 2 * rep.n();
    CHECK((g_form(rep, rep.algebra().unit()) - Mat::Identity(m, m)).norm() < 1e-12);
    CounterRng rng(6, 0);
    const Vec x = random_element(rep.algebra(), rng);
    const Mat g = g_form(rep, x), w = omega_form(rep, x), j = j_matrix(rep);
    CHECK((g - g.transpose()).norm() < 1e-12);
    CHECK((w + w.transpose()).norm() < 1e-12);
    CHECK((w - g * j).norm() < 1e-12);
    CHECK((j * j + Mat::Identity(m, m)).norm() < 1e-14);
  }
}

TEST_CASE("domain membership") {
  const auto& rep = rank1();
  CHECK(domain_contains(rep, {cvec({1i}), cvec({0.0})}));
  CHECK(domain_contains(rep, {cvec({2i}), cvec({1.0})}));
  CHECK_FALSE(domain_contains(rep, {cvec({1i}), cvec({1.0})}));
  CHECK_FALSE(domain_contains(rep, {cvec({3.0}), cvec({0.0})}));
}

TEST_CASE("group law") {
  const auto& rep = rank1();
  CHECK(group_bracket(rep, cvec({1.0}), cvec({1i}))(0) == doctest::Approx(-4.0));
  const GroupElement prod =
      group_mul(rep, {rvec({0.0}), cvec({1.0})}, {rvec({0.0}), cvec({1i})});
  CHECK(prod.x0(0) == doctest::Approx(-2.0));
  CHECK(std::abs(prod.v0(0) - (1.0 + 1i)) < 1e-14);

  const SiegelPoint p = group_act(rep, {rvec({0.0}), cvec({1.0})}, {cvec({1i}), cvec({0.0})});
  CHECK(std::abs(p.z(0) - 2i) < 1e-14);
  CHECK(std::abs(p.v(0) - 1.0) < 1e-14);
  const SiegelPoint q = group_act(rep, {rvec({3.0}), cvec({0.0})}, {cvec({1.0 + 2i}), cvec({0.5})});
  CHECK(std::abs(q.z(0) - (4.0 + 2i)) < 1e-14);

  for (const auto& r : models()) {
    const auto& alg = r.algebra();
    for (std::uint64_t s = 0; s < 100; ++s) {
      CounterRng rng(10, s);
      const GroupElement g{random_element(alg, rng), gaussian_v(r.n(), rng)};
      const GroupElement h{random_element(alg, rng), gaussian_v(r.n(), rng)};
      const SiegelPoint pt = random_domain_point(r, rng);
      const SiegelPoint moved = group_act(r, g, pt);
      CHECK((domain_height(r, moved) - domain_height(r, pt)).norm() < 1e-10);
      const SiegelPoint a = group_act(r, g, group_act(r, h, pt));
      const SiegelPoint b = group_act(r, group_mul(r, g, h), pt);
      CHECK((a.z - b.z).norm() < 1e-10);
      CHECK((a.v - b.v).norm() < 1e-12);
      const GroupElement id = group_mul(r, g, group_inverse(g));
      CHECK(id.x0.norm() < 1e-12);
      CHECK(id.v0.norm() < 1e-12);
      CHECK(group_bracket(r, g.v0, g.v0).norm() < 1e-12);
      CHECK((group_bracket(r, g.v0, h.v0) + group_bracket(r, h.v0, g.v0)).norm() < 1e-12);
    }
  }
}

TEST_CASE("orbit tangent") {
  const auto& rep = rank1();
  const SiegelPoint base{cvec({1i}), cvec({0.0})};
  const auto t = orbit_tangent(rep, RealSubspace::span(rvec({1.0, 0.0})), base);
  Mat expected = Mat::Zero(4, 2);
  expected(0, 0) = 1;
  expected(2, 1) = 1;
  CHECK(t.equals(RealSubspace::span(expected)));
  CHECK(orbit_tangent(rep, RealSubspace::zero(2), base).dim() == 1);

  const auto full = orbit_tangent(rep, RealSubspace::whole(2), {cvec({2i}), cvec({1.0})});
  CHECK(full.dim() == 3);
  CHECK(full.contains(rvec({0.0, 2.0, 1.0, 0.0})));
}

TEST_CASE("transport to the base point") {
  const auto& rep = rank1();
  auto tr = transport_to_base(rep, {cvec({2.0 + 5i}), cvec({1.0})});
  CHECK(tr.u(0) == doctest::Approx(std::log(4.0)));
  CHECK(std::abs(tr.image.z(0) - 1i) < 1e-14);
  CHECK(std::abs(tr.image.v(0)) < 1e-14);
  CHECK(tr.derivative(2, 2) == doctest::Approx(0.5));
  CHECK(tr.derivative(3, 3) == doctest::Approx(0.5));

  const auto id = transport_to_base(rep, {cvec({1i}), cvec({0.0})});
  CHECK((id.derivative - Mat::Identity(4, 4)).norm() < 1e-14);

  const auto d2 = JordanRepresentation::standard(EuclideanJordanAlgebra::diagonal(2));
  tr = transport_to_base(d2, {cvec({4i, 9i}), cvec({0.0, 0.0})});
  Vec diag(8);
  diag << 0.25, 1.0 / 9, 0.25, 1.0 / 9, 0.5, 1.0 / 3, 0.5, 1.0 / 3;
  CHECK((tr.derivative - Mat(diag.asDiagonal())).norm() < 1e-14);

  CHECK_THROWS_AS(transport_to_base(rep, {cvec({1i}), cvec({1.0})}), Error);

  for (const auto& r : models()) {
    const auto& alg = r.algebra();
    for (std::uint64_t s = 0; s < 20; ++s) {
      CounterRng rng(12, s);
      const SiegelPoint p = random_domain_point(r, rng);
      const Transport t = transport_to_base(r, p);
      CHECK((t.image.z - alg.unit().cast<Complex>() * 1i).norm() < 1e-9);
      CHECK(t.image.v.norm() < 1e-9);
      // the composite is affine; its linear part, written out directly
      const CVec zeta = gaussian_v(alg.dim(), rng), gamma = gaussian_v(r.n(), rng);
      const CVec dz = exp_t(alg, -t.u, zeta - 2.0 * 1i * q_eval(r, gamma, p.v));
      const CVec dv = (-r.r(t.u)).exp() * gamma;
      CHECK((t.derivative * tangent_coords(zeta, gamma) - tangent_coords(dz, dv)).norm() < 1e-9);
      CHECK((exp_minus_r(r, t.u) - (-r.r(t.u)).exp()).norm() < 1e-9);
    }
  }
}

TEST_CASE("equivariance of the representation") {
  for (const auto& rep : models()) {
    const auto& alg = rep.algebra();
    for (std::uint64_t s = 0; s < 100; ++s) {
      CounterRng rng(14, s);
      const Vec u = 0.3 * random_element(alg, rng), u2 = 0.3 * random_element(alg, rng);
      const Vec x = random_element(alg, rng), y = random_element(alg, rng);
      const CVec v = gaussian_v(rep.n(), rng);

      // A = T_u
      const CMat eb = rep.r(u).exp();
      const Vec ax = exp_left_mult(alg, u) * x;
      const CVec vt = (-rep.r(u).adjoint()).exp() * v;
      CHECK((eb * rep.r(x) * v - rep.r(ax) * vt).norm() < 1e-8);

      // A = u box u2
      const Mat a = box_operator(alg, u, u2);
      const CMat b = beta_box(rep, u, u2);
      CHECK((beta_box(rep, u2, u) - b.adjoint()).norm() < 1e-10);
      const CVec vb = (-b.adjoint()).exp() * v;
      CHECK((b.exp() * rep.r(x) * v - rep.r(a.exp() * x) * vb).norm() < 1e-8);

      for (const Mat& op : {left_mult(alg, u), a}) {
        const double lhs = rep.r(alg.product(op * x, y)).trace().real();
        const double rhs = rep.r(alg.product(x, op.transpose() * y)).trace().real();
        CHECK(std::abs(lhs - rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("raw representations are validated") {
  const auto alg = EuclideanJordanAlgebra::diagonal(2);
  std::vector<CMat> good = {CMat::Zero(2, 2), CMat::Zero(2, 2)};
  good[0](0, 0) = 0.5;
  good[1](1, 1) = 0.5;
  const auto rep = JordanRepresentation::from_matrices(alg, good);
  CHECK(rep.n() == 2);

  std::vector<CMat> not_unital = {CMat::Identity(2, 2), CMat::Zero(2, 2)};
  CHECK_THROWS_AS(JordanRepresentation::from_matrices(alg, not_unital), Error);

  std::vector<CMat> not_hermitian = good;
  not_hermitian[0](0, 1) = 1i;
  CHECK_THROWS_AS(JordanRepresentation::from_matrices(alg, not_hermitian), Error);

  // Self-adjoint and unital, but 2R_{e1} is not idempotent.
  std::vector<CMat> not_hom = {CMat::Zero(2, 2), CMat::Zero(2, 2)};
  not_hom[0] << 0.25, 0.0, 0.0, 0.25;
  not_hom[1] << 0.25, 0.0, 0.0, 0.25;
  CHECK_THROWS_AS(JordanRepresentation::from_matrices(alg, not_hom), Error);
}
