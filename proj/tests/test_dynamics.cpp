#include "ergodyn/errors.hpp"
#include "ergodyn/dynamics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ergodyn;
using std::numbers::pi;

namespace {

CMatrix two_level_h(double de) {
  CMatrix h = CMatrix::Zero(2, 2);
  h(1, 1) = de;
  return h;
}

Ket two_level_state(double theta) { return Ket(CVector{{std::cos(theta), std::sin(theta)}}); }

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("effective generator on the two-level block") {
  const double th = pi / 3, de = 1.7;
  const auto dyn = effective_hamiltonian(Operator(two_level_h(de), true), decompose_against_ground(two_level_state(th)));
  const double c = std::cos(th), s = std::sin(th);
  CMatrix expect(2, 2);
  expect << -s * s * de, s * c * de, s * c * de, s * s * de;
  CHECK(max_abs(dyn.generator().matrix() - expect) < 1e-14);
  CHECK(dyn.energies()->delta_e == doctest::Approx(de));
  CHECK(dyn.spectral().spectral_radius() == doctest::Approx(s * de));
}

TEST_CASE("spectral propagator: identity at t=0, zero generator, non-finite time") {
  const SpectralPropagator p(two_level_h(1.0));
  CHECK(max_abs(p.at(0.0) - CMatrix::Identity(2, 2)) == 0.0);
  CHECK_THROWS_AS(p.at(std::nan("")), ValidationError);
  const SpectralPropagator z(CMatrix::Zero(3, 3));
  CHECK(z.zero_generator());
  CHECK(max_abs(z.at(5.0) - CMatrix::Identity(3, 3)) == 0.0);
  CHECK(unitarity_defect(p.at(123.4)) < 1e-13);
}

TEST_CASE("4x4 subspace generator reproduces Heisenberg evolution of the plane operators") {
  const double th = 0.9, de = 1.3;
  const Ket psi = two_level_state(th);
  const auto dyn = effective_hamiltonian(Operator(two_level_h(de), true), decompose_against_ground(psi));
  const SubspaceGenerator sg = subspace_generator(th, de);
  CHECK(max_abs(CMatrix(sg.m.cast<cplx>() - sg.m.transpose().cast<cplx>())) == 0.0);
  for (double t : {0.0, 0.4, 2.5, 11.0}) {
    const CMatrix u = dyn.spectral().at(t);
    const CMatrix tr = sg.transfer(t);
    for (int i = 0; i < 4; ++i) {
      CMatrix x = CMatrix::Zero(2, 2);
      x(i / 2, i % 2) = 1.0;  // P_0, |0><chi|, |chi><0|, P_chi
      const CMatrix heis = u.adjoint() * x * u;
      CMatrix from_subspace = CMatrix::Zero(2, 2);
      for (int j = 0; j < 4; ++j) from_subspace(j / 2, j % 2) = tr(i, j);
      CHECK(max_abs(heis - from_subspace) < 1e-13);
    }
  }
}

TEST_CASE("general generator equals -H_eff when the vacuum is an eigenstate") {
  CMatrix h = CMatrix::Zero(4, 4);
  h(0, 0) = -0.4;
  h(1, 1) = 1.0;
  h(2, 2) = 2.0;
  h(3, 3) = 3.1;
  h(1, 2) = h(2, 1) = 0.3;
  h(2, 3) = cplx(0.1, 0.2);
  h(3, 2) = cplx(0.1, -0.2);
  CVector v(4);
  v << 0.5, cplx(0.2, 0.3), -0.6, cplx(0.0, 0.4);
  const GroundDecomposition d = decompose_against_ground(Ket(v));
  const Operator hop(h, true);
  const auto dyn = effective_hamiltonian(hop, d);
  CHECK(max_abs(general_generator(hop, d).matrix() + dyn.generator().matrix()) < 1e-14);
}

TEST_CASE("RK4 agrees with the spectral route and throws on coarse steps") {
  const double th = pi / 4;
  const auto dyn = effective_hamiltonian(Operator(two_level_h(1.0), true), decompose_against_ground(two_level_state(th)));
  const auto times = uniform_grid(10.0, 101);
  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const Rk4Result r = rk4_commutator_oracle(dyn, Operator(p0, true), times, default_rk4_step(dyn));
  for (std::size_t k = 0; k < times.size(); ++k) {
    const CMatrix u = dyn.spectral().at(times[k]);
    CHECK(max_abs(r.ops[k] - u.adjoint() * p0 * u) < 1e-10);
  }
  CHECK(r.max_hermiticity_defect < 1e-12);
  CHECK_THROWS_AS(rk4_commutator_oracle(dyn, Operator(p0, true), times, 3.0), NumericalError);
  const std::vector<double> shifted{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(rk4_commutator_oracle(dyn, Operator(p0, true), shifted, 0.01), ValidationError);
}

TEST_CASE("parallel and serial observable kernels give identical series") {
  const ModeSystem sys({1.0, 1.3, 0.7}, {2, 2, 2});
  CVector v = CVector::Zero(27);
  for (Eigen::Index k = 0; k < 27; ++k) v(k) = cplx(std::sin(1.0 + k), std::cos(2.0 * k));
  const Ket psi(v);
  const auto dyn = effective_hamiltonian(free_hamiltonian(sys), decompose_against_ground(psi));
  std::vector<NamedOperator> ops;
  for (int k = 0; k < 4; ++k) ops.push_back({"p" + std::to_string(k), projector(fock_ket(sys, occupations_of(sys, k).occupations))});
  const auto times = uniform_grid(7.0, 333);
  const std::optional<Operator> number = number_operator(sys);
  const TimeSeries par = evolve_probabilities(dyn.spectral(), psi, ops, number, times);
  const TimeSeries ser = evolve_probabilities_serial(dyn.spectral(), psi, ops, number, times);
  REQUIRE(par.channels().size() == ser.channels().size());
  for (std::size_t c = 0; c < par.channels().size(); ++c) CHECK(par.channels()[c].values == ser.channels()[c].values);
}

TEST_CASE("first-order Dyson error is second order in eps") {
  CMatrix m0 = CMatrix::Zero(2, 2), m1 = CMatrix::Zero(2, 2);
  m0(1, 1) = 1.0;
  m1(0, 1) = m1(1, 0) = 1.0;
  const auto times = uniform_grid(3.0, 601);
  auto worst = [&](double eps) {
    const auto xs = first_order_dyson(m0, m1, eps, times);
    const SpectralPropagator exact(m0 + eps * m1);
    double r = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k) r = std::max(r, max_abs(xs[k] - exact.at(times[k])));
    return r;
  };
  const double ratio = worst(1e-2) / worst(1e-3);
  CHECK(ratio > 80.0);
  CHECK(ratio < 120.0);
  CHECK_THROWS_AS(first_order_dyson(m0, m1, 0.1, uniform_grid(1.0, 4)), ValidationError);
}

TEST_CASE("time series validation") {
  TimeSeries s(uniform_grid(1.0, 3));
  s.add_channel("a", {0.5, 0.5, 0.5}, true);
  s.add_channel("b", {0.5, 0.5, 0.6}, true);
  s.declare_partition({"a", "b"});
  CHECK_THROWS_AS(s.validate(), NumericalError);
  TimeSeries bad(uniform_grid(1.0, 2));
  bad.add_channel("p", {0.0, 1.1}, true);
  CHECK_THROWS_AS(bad.validate(), NumericalError);
  CHECK_THROWS(s.channel("missing"));
  CHECK_THROWS(s.add_channel("c", {1.0}, false));
  const auto g = uniform_grid(2.0, 5);
  CHECK(g.back() == 2.0);
  CHECK(g[1] == doctest::Approx(0.5));
}
