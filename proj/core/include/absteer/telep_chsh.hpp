#pragma once

#include <array>

#include "absteer/states.hpp"

namespace absteer {

/// Teleportation and CHSH quantities from one singular-value call on T.
struct AuxCriteria {
  std::array<double, 3> u{};  // eigenvalues of T^T T, descending
  double n = 0.0;             // Tr sqrt(T^T T)
  double m = 0.0;             // u1 + u2

  bool teleportation_useful() const { return n > 1.0; }
  bool chsh_violating() const { return m > 1.0; }
};

AuxCriteria aux_criteria(const DensityMatrix& rho);
double teleportation_n(const DensityMatrix& rho);
double chsh_m(const DensityMatrix& rho);

/// false only if rho violates the 3-setting inequality yet N <= 1.
bool steer_implies_teleport_check(const DensityMatrix& rho);

}  // namespace absteer
