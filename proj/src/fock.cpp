#include "ergodyn/fock.hpp"

#include "ergodyn/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ergodyn {

ModeSystem::ModeSystem(std::vector<double> omega, std::vector<int> cutoff,
                       std::size_t dimension_cap)
    : omega_(std::move(omega)), cutoff_(std::move(cutoff)) {
  if (omega_.empty()) throw ValidationError("mode system needs at least one mode");
  if (omega_.size() != cutoff_.size())
    throw ValidationError("omega and cutoff lists differ in length");
  for (double w : omega_)
    if (!(w > 0.0) || !std::isfinite(w))
      throw ValidationError("mode frequencies must be finite and > 0");
  std::size_t dim = 1;
  for (int c : cutoff_) {
    if (c < 1) throw ValidationError("mode cutoff must be >= 1");
    const auto local = static_cast<std::size_t>(c) + 1;
    if (local > dimension_cap / dim)
      throw SizingError("Hilbert space dimension exceeds cap of " +
                        std::to_string(dimension_cap));
    dim *= local;
  }
  dimension_ = dim;
}

std::size_t ModeSystem::subsystem_dimension(std::size_t first, std::size_t last) const {
  std::size_t d = 1;
  for (std::size_t i = first; i < last; ++i) d *= static_cast<std::size_t>(cutoff_[i]) + 1;
  return d;
}

std::vector<BasisIndex> build_basis(const ModeSystem& sys) {
  std::vector<BasisIndex> out;
  out.reserve(sys.dimension());
  for (std::size_t k = 0; k < sys.dimension(); ++k) out.push_back(occupations_of(sys, k));
  return out;
}

std::size_t flat_index(const ModeSystem& sys, std::span<const int> occupations) {
  if (occupations.size() != sys.modes())
    throw ValidationError("occupation list length does not match mode count");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sys.modes(); ++i) {
    const int n = occupations[i];
    if (n < 0 || n > sys.cutoff()[i])
      throw ValidationError("occupation " + std::to_string(n) + " of mode " +
                            std::to_string(i) + " outside [0, " +
                            std::to_string(sys.cutoff()[i]) + "]");
    idx = idx * (static_cast<std::size_t>(sys.cutoff()[i]) + 1) + static_cast<std::size_t>(n);
  }
  return idx;
}

BasisIndex occupations_of(const ModeSystem& sys, std::size_t flat) {
  BasisIndex b;
  b.occupations.assign(sys.modes(), 0);
  for (std::size_t i = sys.modes(); i-- > 0;) {
    const auto local = static_cast<std::size_t>(sys.cutoff()[i]) + 1;
    b.occupations[i] = static_cast<int>(flat % local);
    flat /= local;
  }
  return b;
}

Ket::Ket(CVector amplitudes) : amp_(std::move(amplitudes)) {
  const double norm = amp_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("state vector has zero norm");
  amp_ /= norm;
}

Operator::Operator(CMatrix m, bool hermitian_hint) : m_(std::move(m)), hermitian_(hermitian_hint) {
  if (m_.rows() != m_.cols()) throw ValidationError("operator matrix must be square");
}

Operator Operator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator(CMatrix::Identity(n, n), true);
}

double hermiticity_defect(const CMatrix& a) {
  const double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() / scale;
}

DensityOperator::DensityOperator(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw ValidationError("density matrix must be square and nonempty");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw ValidationError("density matrix is not Hermitian");
  if (std::abs(m_.trace() - cplx(1.0, 0.0)) > 1e-12)
    throw ValidationError("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw ValidationError("density matrix has a negative eigenvalue");
}

DensityOperator DensityOperator::from_ket(const Ket& k) {
  CMatrix rho = k.amplitudes() * k.amplitudes().adjoint();
  // Outer products are Hermitian only up to rounding in the diagonal's imaginary part.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(std::move(rho));
}

Operator free_hamiltonian(const ModeSystem& sys) {
  const auto n = static_cast<Eigen::Index>(sys.dimension());
  CMatrix h = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto occ = occupations_of(sys, static_cast<std::size_t>(k));
    double e = 0.0;
    for (std::size_t i = 0; i < sys.modes(); ++i) e += occ.occupations[i] * sys.omega()[i];
    h(k, k) = e;
  }
  return Operator(std::move(h), true);
}

Operator number_operator(const ModeSystem& sys) {
  const auto n = static_cast<Eigen::Index>(sys.dimension());
  CMatrix num = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto occ = occupations_of(sys, static_cast<std::size_t>(k));
    int total = 0;
    for (int o : occ.occupations) total += o;
    num(k, k) = static_cast<double>(total);
  }
  return Operator(std::move(num), true);
}

Operator mode_number_operator(const ModeSystem& sys, std::size_t mode) {
  if (mode >= sys.modes()) throw ValidationError("mode index out of range");
  const auto n = static_cast<Eigen::Index>(sys.dimension());
  CMatrix num = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    num(k, k) = static_cast<double>(occupations_of(sys, static_cast<std::size_t>(k)).occupations[mode]);
  return Operator(std::move(num), true);
}

Ket fock_ket(const ModeSystem& sys, std::span<const int> occupations) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(sys.dimension()));
  v(static_cast<Eigen::Index>(flat_index(sys, occupations))) = 1.0;
  return Ket(std::move(v));
}

Operator projector(const Ket& k) {
  CMatrix p = k.amplitudes() * k.amplitudes().adjoint();
  p = 0.5 * (p + p.adjoint()).eval();
  return Operator(std::move(p), true);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Operator tensor(const Operator& a, const Operator& b) {
  return Operator(kron(a.matrix(), b.matrix()), a.hermitian_hint() && b.hermitian_hint());
}

cplx expectation(const Ket& k, const Operator& a) {
  if (k.dimension() != a.dimension()) throw ValidationError("dimension mismatch in expectation");
  return k.amplitudes().dot(a.matrix() * k.amplitudes());
}

}  // namespace ergodyn
