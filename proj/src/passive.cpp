#include "ergodyn/passive.hpp"

#include "ergodyn/errors.hpp"

#include <cmath>

namespace ergodyn {

namespace {

Ket vacuum_of_dimension(std::size_t dim) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(0) = 1.0;
  return Ket(std::move(v));
}

}  // namespace

Ket GroundDecomposition::reconstruct() const {
  CVector v = std::cos(theta) * ground.amplitudes();
  if (chi) v += std::sin(theta) * chi->amplitudes();
  return Ket(global_phase * v);
}

GroundDecomposition decompose_against_ground(const Ket& psi) {
  return decompose_against_ground(psi, vacuum_of_dimension(psi.dimension()));
}

GroundDecomposition decompose_against_ground(const Ket& psi, const Ket& ground) {
  if (psi.dimension() != ground.dimension())
    throw ValidationError("state and ground state dimensions differ");
  const cplx overlap = ground.amplitudes().dot(psi.amplitudes());
  const double mag = std::abs(overlap);
  const cplx phase = mag > 0.0 ? overlap / mag : cplx(1.0, 0.0);

  const CVector aligned = std::conj(phase) * psi.amplitudes();
  const CVector tail = aligned - ground.amplitudes() * ground.amplitudes().dot(aligned);
  const double tail_norm = tail.norm();

  GroundDecomposition dec{std::atan2(tail_norm, mag), std::nullopt, ground, phase};
  if (dec.theta >= kThetaTolerance) dec.chi.emplace(tail / tail_norm);
  return dec;
}

Operator build_passive_unitary(const GroundDecomposition& dec) {
  const auto n = static_cast<Eigen::Index>(dec.ground.dimension());
  CMatrix u = CMatrix::Identity(n, n);
  if (!dec.chi) return Operator(std::move(u), false);

  const CVector& g = dec.ground.amplitudes();
  const CVector& x = dec.chi->amplitudes();
  const double c = std::cos(dec.theta);
  const double s = std::sin(dec.theta);
  u += (c - 1.0) * (g * g.adjoint() + x * x.adjoint());
  u += s * (g * x.adjoint() - x * g.adjoint());
  return Operator(std::move(u), false);
}

Operator build_passive_unitary(const GroundDecomposition& dec, const ModeSystem& sys) {
  if (dec.ground.dimension() != sys.dimension())
    throw ValidationError("decomposition dimension does not match mode system");
  return build_passive_unitary(dec);
}

DensityOperator passive_state(const DensityOperator& rho, const Operator& hamiltonian) {
  if (rho.dimension() != hamiltonian.dimension())
    throw ValidationError("state and Hamiltonian dimensions differ");
  Eigen::SelfAdjointEigenSolver<CMatrix> hs(hamiltonian.matrix());
  if (hs.info() != Eigen::Success) throw NumericalError("Hamiltonian eigendecomposition failed");
  const Eigen::VectorXd& energies = hs.eigenvalues();
  for (Eigen::Index k = 1; k < energies.size(); ++k)
    if (energies(k) - energies(k - 1) < 1e-10)
      throw DegenerateSpectrumError("Hamiltonian spectrum is degenerate; passive state is not unique");

  Eigen::SelfAdjointEigenSolver<CMatrix> rs(rho.matrix(), Eigen::EigenvaluesOnly);
  if (rs.info() != Eigen::Success) throw NumericalError("density matrix eigendecomposition failed");
  const Eigen::VectorXd pops = rs.eigenvalues().reverse();

  const CMatrix& v = hs.eigenvectors();
  CMatrix out = v * pops.cast<cplx>().asDiagonal() * v.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  // Eigenvalues of rho sum to one only up to rounding.
  out /= out.trace().real();
  return DensityOperator(std::move(out));
}

double energy(const DensityOperator& rho, const Operator& hamiltonian) {
  return (rho.matrix() * hamiltonian.matrix()).trace().real();
}

}  // namespace ergodyn
