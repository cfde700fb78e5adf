#pragma once

// Passive-state machinery: the canonical split of a pure state against the
// ground state, the rotation U_p that carries it onto the ground state, and
// the passive rearrangement of a mixed state.

#include "ergodyn/fock.hpp"

#include <optional>

namespace ergodyn {

inline constexpr double kThetaTolerance = 1e-12;

// psi = e^{i phase} (cos(theta)|g> + sin(theta)|chi>), <g|chi> = 0,
// with the phase fixed so that <g|psi> is real and >= 0, hence theta in [0, pi/2].
struct GroundDecomposition {
  double theta = 0.0;
  std::optional<Ket> chi;  // empty when theta < kThetaTolerance
  Ket ground;
  cplx global_phase{1.0, 0.0};

  Ket reconstruct() const;
};

// Ground state defaults to flat index 0 (the Fock vacuum).
GroundDecomposition decompose_against_ground(const Ket& psi);
GroundDecomposition decompose_against_ground(const Ket& psi, const Ket& ground);

// cos(theta)(P_g + P_chi) + sin(theta)(|g><chi| - |chi><g|) + 1 - P_g - P_chi.
// Identity when chi is absent.
Operator build_passive_unitary(const GroundDecomposition& dec);
Operator build_passive_unitary(const GroundDecomposition& dec, const ModeSystem& sys);

// Pairs the eigenvalues of rho (descending) with the eigenvectors of H
// (ascending energy). Throws DegenerateSpectrumError when two eigenvalues of
// H are closer than 1e-10.
DensityOperator passive_state(const DensityOperator& rho, const Operator& hamiltonian);

double energy(const DensityOperator& rho, const Operator& hamiltonian);

}  // namespace ergodyn
