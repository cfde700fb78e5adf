#include "ergodyn/errors.hpp"
#include "ergodyn/passive.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ergodyn;
using std::numbers::pi;

TEST_CASE("ground decomposition fixes the phase and the angle range") {
  const cplx phase = std::polar(1.0, 0.7);
  CVector v(3);
  v << phase * std::cos(pi / 5), phase * std::sin(pi / 5) * 0.6, phase * std::sin(pi / 5) * cplx(0.0, 0.8);
  const GroundDecomposition d = decompose_against_ground(Ket(v));
  CHECK(d.theta == doctest::Approx(pi / 5));
  REQUIRE(d.chi);
  CHECK(std::abs(d.chi->amplitudes()(0)) < 1e-15);
  CHECK((d.reconstruct().amplitudes() - v).norm() < 1e-14);

  const GroundDecomposition neg = decompose_against_ground(Ket(CVector{{-1.0, 1.0}}));
  CHECK(neg.theta == doctest::Approx(pi / 4));
  CHECK(neg.theta >= 0.0);
  CHECK(neg.theta <= pi / 2);
}

TEST_CASE("vacuum and excited limits") {
  const GroundDecomposition vac = decompose_against_ground(Ket(CVector{{1.0, 0.0, 0.0}}));
  CHECK(vac.theta == 0.0);
  CHECK_FALSE(vac.chi);
  CHECK((build_passive_unitary(vac).matrix() - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);

  const GroundDecomposition top = decompose_against_ground(Ket(CVector{{0.0, 0.0, 1.0}}));
  CHECK(top.theta == doctest::Approx(pi / 2));
  REQUIRE(top.chi);
}

TEST_CASE("U_p on the two-level block") {
  // Hand-derived: U_p = [[c, s], [-s, c]] in (|0>, |chi>).
  const double th = pi / 3;
  const GroundDecomposition d = decompose_against_ground(Ket(CVector{{std::cos(th), std::sin(th)}}));
  const CMatrix u = build_passive_unitary(d).matrix();
  CHECK(u(0, 0).real() == doctest::Approx(0.5));
  CHECK(u(0, 1).real() == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(u(1, 0).real() == doctest::Approx(-std::sqrt(3.0) / 2));
  CHECK(u(1, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("U_p maps the state to the ground state and is unitary") {
  CVector v(4);
  v << cplx(0.3, 0.1), cplx(-0.2, 0.5), cplx(0.7, 0.0), cplx(0.0, -0.4);
  const Ket psi(v);
  const GroundDecomposition d = decompose_against_ground(psi);
  const CMatrix u = build_passive_unitary(d).matrix();
  CHECK((u.adjoint() * u - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
  const CVector mapped = u * psi.amplitudes();
  CHECK(std::abs(mapped(0)) == doctest::Approx(1.0));
  // Acts as identity on the complement of span{|0>, chi}.
  CVector w(4);
  w << 0.0, 1.0, 0.0, 0.0;
  w -= d.chi->amplitudes() * d.chi->amplitudes().dot(w);
  CHECK((u * w - w).norm() < 1e-14);
}

TEST_CASE("decomposition against a non-vacuum ground state") {
  const Ket ground(CVector{{1.0, 1.0}});
  const Ket psi(CVector{{1.0, 0.0}});
  const GroundDecomposition d = decompose_against_ground(psi, ground);
  CHECK(d.theta == doctest::Approx(pi / 4));
  CHECK_THROWS_AS(decompose_against_ground(psi, Ket(CVector{{1.0, 0.0, 0.0}})), ValidationError);
}

TEST_CASE("passive state of a mixed state") {
  CMatrix h = CMatrix::Zero(3, 3);
  h(0, 0) = 0.0;
  h(1, 1) = 1.0;
  h(2, 2) = 3.0;
  CMatrix r = CMatrix::Zero(3, 3);
  r(0, 0) = 0.1;
  r(1, 1) = 0.2;
  r(2, 2) = 0.7;
  const DensityOperator rho(r);
  const DensityOperator p = passive_state(rho, Operator(h, true));
  CHECK(p.matrix()(0, 0).real() == doctest::Approx(0.7));
  CHECK(p.matrix()(1, 1).real() == doctest::Approx(0.2));
  CHECK(p.matrix()(2, 2).real() == doctest::Approx(0.1));
  CHECK(energy(p, Operator(h, true)) == doctest::Approx(0.2 + 0.3));

  CMatrix degenerate = CMatrix::Identity(3, 3);
  CHECK_THROWS_AS(passive_state(rho, Operator(degenerate, true)), DegenerateSpectrumError);
}
