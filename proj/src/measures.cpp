#include "ergodyn/measures.hpp"

#include "ergodyn/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace ergodyn {

BipartitionSpec::BipartitionSpec(const ModeSystem& sys, std::vector<std::size_t> a_modes,
                                 std::vector<std::size_t> b_modes)
    : a_(std::move(a_modes)), b_(std::move(b_modes)) {
  if (a_.empty() || b_.empty()) throw ValidationError("bipartition needs two nonempty subsystems");
  std::vector<int> seen(sys.modes(), 0);
  for (auto set : {&a_, &b_})
    for (std::size_t m : *set) {
      if (m >= sys.modes()) throw ValidationError("bipartition names a mode outside the system");
      if (seen[m]++) throw ValidationError("bipartition subsystems overlap");
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw ValidationError("bipartition does not cover every mode");
}

BipartitionSpec BipartitionSpec::first_mode(const ModeSystem& sys) {
  std::vector<std::size_t> rest;
  for (std::size_t m = 1; m < sys.modes(); ++m) rest.push_back(m);
  return BipartitionSpec(sys, {0}, std::move(rest));
}

double l1_coherence(const DensityOperator& rho) {
  const CMatrix& m = rho.matrix();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) sum += std::abs(m(i, j));
  return sum;
}

CMatrix partial_transpose(const DensityOperator& rho, const ModeSystem& sys,
                          const BipartitionSpec& part) {
  if (rho.dimension() != sys.dimension())
    throw ValidationError("density matrix dimension does not match mode system");
  if (part.modes() != sys.modes()) throw ValidationError("bipartition inconsistent with mode structure");

  const auto basis = build_basis(sys);
  const auto n = static_cast<Eigen::Index>(sys.dimension());
  CMatrix out(n, n);
  std::vector<int> row(sys.modes()), col(sys.modes());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      row = basis[static_cast<std::size_t>(i)].occupations;
      col = basis[static_cast<std::size_t>(j)].occupations;
      for (std::size_t m : part.b_modes()) std::swap(row[m], col[m]);
      out(static_cast<Eigen::Index>(flat_index(sys, row)),
          static_cast<Eigen::Index>(flat_index(sys, col))) = rho.matrix()(i, j);
    }
  }
  return out;
}

double negativity(const DensityOperator& rho, const ModeSystem& sys, const BipartitionSpec& part) {
  const CMatrix pt = partial_transpose(rho, sys, part);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(pt, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("partial transpose eigendecomposition failed");
  double neg = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()(k) < 0.0) neg -= es.eigenvalues()(k);
  return neg;
}

}  // namespace ergodyn
