#include "ergodyn/errors.hpp"
#include "ergodyn/measures.hpp"

#include <doctest.h>

#include <cmath>

using namespace ergodyn;

TEST_CASE("coherence and negativity of simple states") {
  const ModeSystem sys({1.0, 1.0}, {1, 1});
  const auto part = BipartitionSpec::first_mode(sys);
  const auto bell = DensityOperator::from_ket(Ket(CVector{{1.0, 0.0, 0.0, 1.0}}));
  CHECK(l1_coherence(bell) == doctest::Approx(1.0));
  CHECK(negativity(bell, sys, part) == doctest::Approx(0.5));
  const auto product = DensityOperator::from_ket(Ket(CVector{{1.0, 1.0, 1.0, 1.0}}));
  CHECK(l1_coherence(product) == doctest::Approx(3.0));
  CHECK(negativity(product, sys, part) < 1e-14);
  CHECK(negativity(product, sys, part) >= 0.0);
}

TEST_CASE("partial transpose swaps the B indices") {
  const ModeSystem sys({1.0, 1.0}, {1, 1});
  CVector v(4);
  v << 0.1, cplx(0.2, 0.1), 0.5, cplx(0.0, 0.3);
  const auto rho = DensityOperator::from_ket(Ket(v));
  const CMatrix pt = partial_transpose(rho, sys, BipartitionSpec::first_mode(sys));
  // <a b | rho^T_B | a' b'> = <a b' | rho | a' b>
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp)
          CHECK(std::abs(pt(2 * a + b, 2 * ap + bp) - rho.matrix()(2 * a + bp, 2 * ap + b)) == 0.0);
  CHECK(std::abs(pt.trace() - 1.0) < 1e-15);
}

TEST_CASE("bipartition validation") {
  const ModeSystem sys({1.0, 1.0, 1.0}, {1, 1, 1});
  CHECK_THROWS_AS(BipartitionSpec(sys, {0}, {}), ValidationError);
  CHECK_THROWS_AS(BipartitionSpec(sys, {0, 1}, {1, 2}), ValidationError);
  CHECK_THROWS_AS(BipartitionSpec(sys, {0}, {1}), ValidationError);
  CHECK_THROWS_AS(BipartitionSpec(sys, {0}, {5}), ValidationError);
  const ModeSystem two({1.0, 1.0}, {1, 1});
  const auto rho = DensityOperator::from_ket(Ket(CVector{{1.0, 0.0, 0.0, 0.0}}));
  CHECK_THROWS_AS(partial_transpose(rho, sys, BipartitionSpec::first_mode(sys)), ValidationError);
  CHECK_THROWS_AS(negativity(rho, two, BipartitionSpec::first_mode(sys)), ValidationError);
}
