#pragma once

// Truncated multimode bosonic Fock space.
//
// Units: hbar = 1, energies are angular frequencies. Basis states are
// enumerated in row-major mode order, so flat index 0 is the global vacuum.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ergodyn {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr std::size_t kDefaultDimensionCap = 4096;

class ModeSystem {
 public:
  ModeSystem(std::vector<double> omega, std::vector<int> cutoff,
             std::size_t dimension_cap = kDefaultDimensionCap);

  std::size_t modes() const { return omega_.size(); }
  const std::vector<double>& omega() const { return omega_; }
  const std::vector<int>& cutoff() const { return cutoff_; }
  std::size_t dimension() const { return dimension_; }

  // Number of basis states of the modes [first, last).
  std::size_t subsystem_dimension(std::size_t first, std::size_t last) const;

 private:
  std::vector<double> omega_;
  std::vector<int> cutoff_;
  std::size_t dimension_ = 0;
};

struct BasisIndex {
  std::vector<int> occupations;
  bool operator==(const BasisIndex&) const = default;
};

std::vector<BasisIndex> build_basis(const ModeSystem& sys);

std::size_t flat_index(const ModeSystem& sys, std::span<const int> occupations);
BasisIndex occupations_of(const ModeSystem& sys, std::size_t flat);

class Ket {
 public:
  // Normalizes; throws ValidationError on a zero or non-finite vector.
  explicit Ket(CVector amplitudes);

  const CVector& amplitudes() const { return amp_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amp_.size()); }
  cplx operator[](std::size_t i) const { return amp_(static_cast<Eigen::Index>(i)); }

 private:
  CVector amp_;
};

class Operator {
 public:
  Operator() = default;
  Operator(CMatrix m, bool hermitian_hint);

  const CMatrix& matrix() const { return m_; }
  bool hermitian_hint() const { return hermitian_; }
  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }

  static Operator identity(std::size_t dim);

 private:
  CMatrix m_;
  bool hermitian_ = false;
};

class DensityOperator {
 public:
  // Validates Hermiticity, unit trace and positivity.
  explicit DensityOperator(CMatrix m);
  static DensityOperator from_ket(const Ket& k);

  const CMatrix& matrix() const { return m_; }
  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }

 private:
  CMatrix m_;
};

// max |A - A^dagger| relative to max |A| (0 for the zero matrix).
double hermiticity_defect(const CMatrix& a);

Operator free_hamiltonian(const ModeSystem& sys);
Operator number_operator(const ModeSystem& sys);
// Occupation of a single mode, lifted to the full space.
Operator mode_number_operator(const ModeSystem& sys, std::size_t mode);

Ket fock_ket(const ModeSystem& sys, std::span<const int> occupations);
Operator projector(const Ket& k);
Operator tensor(const Operator& a, const Operator& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

cplx expectation(const Ket& k, const Operator& a);

}  // namespace ergodyn
