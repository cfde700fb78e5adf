#pragma once

// Work-driven dynamics. The generator is H_eff = H - U_p^dagger H U_p, with
// dA/dt = i [H_eff, A] in the Heisenberg picture and U(t) = exp(-i H_eff t).
//
// Three independent routes are provided:
//   * spectral propagation (Hermitian eigendecomposition of the generator),
//   * classical RK4 on the commutator equation,
//   * the 4x4 closed-subspace generator acting on (P_0, |0><chi|, |chi><0|, P_chi).
// A first-order Dyson solver covers the perturbative regime.

#include "ergodyn/fock.hpp"
#include "ergodyn/passive.hpp"

#include <Eigen/Eigenvalues>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ergodyn {

// exp(-i G t) for a fixed Hermitian generator G, from one eigendecomposition.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const CMatrix& generator);

  CMatrix at(double t) const;
  CVector apply(const CVector& v, double t) const;
  std::size_t dimension() const { return static_cast<std::size_t>(eigenvectors_.rows()); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const CMatrix& eigenvectors() const { return eigenvectors_; }
  bool zero_generator() const { return zero_generator_; }
  double spectral_radius() const;

 private:
  bool zero_generator_ = false;
  Eigen::VectorXd eigenvalues_;
  CMatrix eigenvectors_;
};

struct EnergyScalars {
  double e0 = 0.0;       // <0|H|0>
  double e_chi = 0.0;    // <chi|H|chi>
  double delta_e = 0.0;  // e_chi - e0
};

class EffectiveDynamics {
 public:
  EffectiveDynamics(Operator hamiltonian, Operator passive_unitary,
                    std::optional<EnergyScalars> energies = std::nullopt);

  const Operator& hamiltonian() const { return h_; }
  const Operator& passive_unitary() const { return up_; }
  const Operator& generator() const { return h_eff_; }
  const std::optional<EnergyScalars>& energies() const { return energies_; }
  const SpectralPropagator& spectral() const { return spectral_; }

 private:
  Operator h_;
  Operator up_;
  Operator h_eff_;
  std::optional<EnergyScalars> energies_;
  SpectralPropagator spectral_;
};

EffectiveDynamics effective_hamiltonian(const Operator& hamiltonian, const Operator& passive_unitary);
// Builds U_p from the decomposition and fills the energy scalars.
EffectiveDynamics effective_hamiltonian(const Operator& hamiltonian, const GroundDecomposition& dec);

EnergyScalars energy_scalars(const Operator& hamiltonian, const GroundDecomposition& dec);

// Coefficient expansion of the generator in terms of P_0, P_chi, |0><chi|,
// H|chi><chi| and friends, such that dA/dt = -i [G, A]. Equals -H_eff when
// |0> is an eigenstate of H. Zero operator when chi is absent.
Operator general_generator(const Operator& hamiltonian, const GroundDecomposition& dec);

struct SubspaceGenerator {
  RMatrix m;              // real symmetric 4x4
  double prefactor = 0.0;  // Delta E

  // Heisenberg-picture coefficients: X(t) = exp(-i dE M t) X(0), returned
  // as the 4x4 complex transfer matrix.
  CMatrix transfer(double t) const;
};

// Operator ordering (P_0, |0><chi|, |chi><0|, P_chi).
SubspaceGenerator subspace_generator(double theta, double delta_e);

Operator propagator(const EffectiveDynamics& dyn, double t);
Operator standard_propagator(const Operator& hamiltonian, double t);

// Named channels on a uniform time grid.
class TimeSeries {
 public:
  struct Channel {
    std::string name;
    std::vector<double> values;
    bool probability = false;
  };

  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> times);

  const std::vector<double>& times() const { return times_; }
  std::size_t size() const { return times_.size(); }
  const std::vector<Channel>& channels() const { return channels_; }
  const std::vector<std::vector<std::string>>& partitions() const { return partitions_; }

  void add_channel(std::string name, std::vector<double> values, bool probability);
  void declare_partition(std::vector<std::string> names);
  bool has_channel(const std::string& name) const;
  const std::vector<double>& channel(const std::string& name) const;
  // Appends every channel of other with a prefix; grids must agree.
  void merge(const TimeSeries& other, const std::string& prefix);

  // Throws NumericalError when a probability leaves [-1e-9, 1 + 1e-9] or a
  // declared partition does not sum to one within 1e-9.
  void validate() const;

 private:
  std::vector<double> times_;
  std::vector<Channel> channels_;
  std::vector<std::vector<std::string>> partitions_;
};

std::vector<double> uniform_grid(double t_max, std::size_t points);

struct NamedOperator {
  std::string name;
  Operator op;
};

// <psi| U^dagger(t) A U(t) |psi> for each named operator; projectors become
// probability channels, the optional number operator becomes "N_mean".
// Time points are evaluated in parallel.
TimeSeries evolve_probabilities(const SpectralPropagator& prop, const Ket& psi0,
                                std::span<const NamedOperator> projectors,
                                const std::optional<Operator>& number,
                                std::span<const double> times);
TimeSeries evolve_probabilities(const EffectiveDynamics& dyn, const Ket& psi0,
                                std::span<const NamedOperator> projectors,
                                const std::optional<Operator>& number,
                                std::span<const double> times);

// Serial reference for the parallel kernel above; identical results.
TimeSeries evolve_probabilities_serial(const SpectralPropagator& prop, const Ket& psi0,
                                       std::span<const NamedOperator> projectors,
                                       const std::optional<Operator>& number,
                                       std::span<const double> times);

// |<psi|U(t)|psi>|^2, channel "p_self".
TimeSeries survival_probability(const SpectralPropagator& prop, const Ket& psi0,
                                std::span<const double> times);
TimeSeries survival_probability(const EffectiveDynamics& dyn, const Ket& psi0,
                                std::span<const double> times);

struct Rk4Result {
  std::vector<CMatrix> ops;        // A(t) at each grid time
  double step = 0.0;               // internal step actually used
  double max_hermiticity_defect = 0.0;
  double max_norm_drift = 0.0;     // relative drift of the Frobenius norm
};

// Default step (2 pi / omega_osc) / 2000.
double default_rk4_step(const EffectiveDynamics& dyn, std::span<const double> mode_omegas = {});

// Integrates dA/dt = i [G, A] with classical RK4. Grid intervals are
// subdivided so no internal step exceeds max_step. Throws NumericalError when
// the Frobenius norm of A drifts by more than 1e-6 (step too large).
Rk4Result rk4_commutator_oracle(const CMatrix& generator, const CMatrix& a0,
                                std::span<const double> times, double max_step);
Rk4Result rk4_commutator_oracle(const EffectiveDynamics& dyn, const Operator& a0,
                                std::span<const double> times, double max_step);

// Same channels as evolve_probabilities, computed through RK4 Heisenberg evolution.
TimeSeries rk4_probabilities(const CMatrix& generator, const Ket& psi0,
                             std::span<const NamedOperator> projectors,
                             const std::optional<Operator>& number,
                             std::span<const double> times, double max_step);

// X(t) ~ U0(t) (1 - i eps int_0^t U0^dagger(s) M1 U0(s) ds), U0 = exp(-i M0 t).
// M0 must be Hermitian. The integral is cumulative composite Simpson on the
// (uniform) grid, which must have an even number of intervals.
std::vector<CMatrix> first_order_dyson(const CMatrix& m0, const CMatrix& m1, double eps,
                                       std::span<const double> times);

// Max over grid and entries of |U^dagger U - 1|.
double unitarity_defect(const CMatrix& u);

}  // namespace ergodyn
