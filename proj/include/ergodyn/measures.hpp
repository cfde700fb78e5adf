#pragma once

#include "ergodyn/fock.hpp"

#include <vector>

namespace ergodyn {

// Split of the modes into subsystems A and B.
class BipartitionSpec {
 public:
  // Throws ValidationError unless the sets are disjoint, nonempty and cover
  // every mode of sys.
  BipartitionSpec(const ModeSystem& sys, std::vector<std::size_t> a_modes,
                  std::vector<std::size_t> b_modes);

  // First mode in A, the rest in B.
  static BipartitionSpec first_mode(const ModeSystem& sys);

  const std::vector<std::size_t>& a_modes() const { return a_; }
  const std::vector<std::size_t>& b_modes() const { return b_; }
  std::size_t modes() const { return a_.size() + b_.size(); }

 private:
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
};

// Sum of |rho_ij| over i != j in the Fock basis.
double l1_coherence(const DensityOperator& rho);

// Transpose on the B modes, index-wise on the mode-factored basis.
CMatrix partial_transpose(const DensityOperator& rho, const ModeSystem& sys,
                          const BipartitionSpec& part);

// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityOperator& rho, const ModeSystem& sys, const BipartitionSpec& part);

}  // namespace ergodyn
