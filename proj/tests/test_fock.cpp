#include "ergodyn/errors.hpp"
#include "ergodyn/fock.hpp"

#include <doctest.h>

using namespace ergodyn;

TEST_CASE("basis enumeration is row-major with the vacuum first") {
  const ModeSystem sys({1.0, 2.0}, {2, 1});
  CHECK(sys.dimension() == 6);
  const auto basis = build_basis(sys);
  CHECK(basis[0].occupations == std::vector<int>{0, 0});
  CHECK(basis[1].occupations == std::vector<int>{0, 1});
  CHECK(basis[2].occupations == std::vector<int>{1, 0});
  for (std::size_t k = 0; k < sys.dimension(); ++k) CHECK(flat_index(sys, occupations_of(sys, k).occupations) == k);
  CHECK(sys.subsystem_dimension(0, 1) == 3);
  CHECK(sys.subsystem_dimension(1, 2) == 2);
}

TEST_CASE("mode system rejects bad inputs and oversize spaces") {
  CHECK_THROWS_AS(ModeSystem({1.0}, {-1}), ValidationError);
  CHECK_THROWS_AS(ModeSystem({0.0}, {1}), ValidationError);
  CHECK_THROWS_AS(ModeSystem({1.0, 1.0}, {1}), ValidationError);
  CHECK_THROWS_AS(ModeSystem({1.0, 1.0, 1.0}, {16, 16, 16}), SizingError);
  CHECK_THROWS_AS(ModeSystem({1.0}, {10}, 5), SizingError);
  const ModeSystem sys({1.0}, {2});
  const std::vector<int> out_of_range{3};
  CHECK_THROWS_AS(flat_index(sys, out_of_range), ValidationError);
}

TEST_CASE("kets normalize and reject zero vectors") {
  const Ket k(CVector{{3.0, 4.0}});
  CHECK(k[0].real() == doctest::Approx(0.6));
  CHECK(k[1].real() == doctest::Approx(0.8));
  CHECK_THROWS_AS(Ket(CVector::Zero(3)), ValidationError);
}

TEST_CASE("density operators are validated") {
  CMatrix bad_trace = CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityOperator{bad_trace}, ValidationError);
  CMatrix non_herm = CMatrix::Zero(2, 2);
  non_herm(0, 0) = non_herm(1, 1) = 0.5;
  non_herm(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityOperator{non_herm}, ValidationError);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityOperator{negative}, ValidationError);
  const auto rho = DensityOperator::from_ket(Ket(CVector{{1.0, 1.0}}));
  CHECK(rho.matrix()(0, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("free Hamiltonian and number operators are diagonal in the Fock basis") {
  const ModeSystem sys({1.0, 2.5}, {2, 2});
  const CMatrix h = free_hamiltonian(sys).matrix();
  const CMatrix n = number_operator(sys).matrix();
  const auto basis = build_basis(sys);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& o = basis[k].occupations;
    const auto i = static_cast<Eigen::Index>(k);
    CHECK(h(i, i).real() == doctest::Approx(o[0] * 1.0 + o[1] * 2.5));
    CHECK(n(i, i).real() == doctest::Approx(o[0] + o[1]));
  }
  CHECK(h.cwiseAbs().sum() == doctest::Approx(h.diagonal().cwiseAbs().sum()));
  const CMatrix nb = mode_number_operator(sys, 1).matrix();
  CHECK((mode_number_operator(sys, 0).matrix() + nb - n).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tensor products follow the basis ordering") {
  const ModeSystem a({1.0}, {1}), b({2.0}, {2}), ab({1.0, 2.0}, {1, 2});
  const CMatrix h = kron(free_hamiltonian(a).matrix(), CMatrix::Identity(3, 3)) +
                    kron(CMatrix::Identity(2, 2), free_hamiltonian(b).matrix());
  CHECK((h - free_hamiltonian(ab).matrix()).cwiseAbs().maxCoeff() == 0.0);
  const std::vector<int> occ{1, 2};
  const Ket k = fock_ket(ab, occ);
  CHECK(expectation(k, free_hamiltonian(ab)).real() == doctest::Approx(5.0));
  CHECK(projector(k).matrix().trace().real() == doctest::Approx(1.0));
}

TEST_CASE("hermiticity defect is relative") {
  CMatrix a = CMatrix::Zero(2, 2);
  CHECK(hermiticity_defect(a) == 0.0);
  a(0, 1) = 1.0;
  CHECK(hermiticity_defect(a) == doctest::Approx(1.0));
}
