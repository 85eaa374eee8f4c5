#pragma once

#include <array>

#include "absteer/numlin.hpp"
#include "absteer/states.hpp"

namespace absteer {

/// Slack on the purity-1/2 boundary, in purity units. Every criterion below is
/// compared at the equivalent slack on its own scale, and boundary states are
/// classified as inside.
inline constexpr double BOUNDARY_TOL = 1e-10;

/// Membership of a state in the set that satisfies the 3-setting linear
/// steering inequality after every global unitary.
///
/// The four criteria are computed along independent code paths (eigensolver,
/// Frobenius norm, Bloch decomposition) and must agree; see decide_aus3.
struct AbsoluteVerdict {
  bool in_aus3 = false;
  double f3_global_max = 0.0;
  /// 3 sum x_i^2 - 2 sum_{i<j} x_i x_j over the eigenvalues.
  double spectrum_lhs = 0.0;
  double purity = 0.0;
  /// |a|^2 + |b|^2 + ||T||_F^2.
  double bloch_sum = 0.0;
  /// ||rho - I/4||_F.
  double ball_distance = 0.0;
};

/// sqrt(3 sum x_i^2 - 2 sum_{i<j} x_i x_j): the largest F_3 reachable from
/// this spectrum by a global unitary.
double f3_global_max(const SpectrumReport& spectrum);

/// Throws InternalInconsistency when the criteria disagree.
AbsoluteVerdict decide_aus3(const DensityMatrix& rho);

/// Spectrum placed on the Bell basis {Phi+, Phi-, Psi+, Psi-} (descending),
/// with the unitary taking the input onto it.
struct BellDiagonalState {
  std::array<double, 4> weights{};
  ComplexMatrix4 unitary{};

  ComplexMatrix4 matrix() const;
};

BellDiagonalState bell_diagonal_canonical(const DensityMatrix& rho);

/// ||rho - I/4||_F <= 1/2.
bool frobenius_ball_check(const DensityMatrix& rho);

struct PairVerdict {
  QubitPair pair = QubitPair::AB;
  AbsoluteVerdict verdict;
  /// Bloch length of the traced-out qubit.
  double complementary_bloch_norm = 0.0;
};

/// Verdicts for the AB, BC and AC reductions of a pure three-qubit state.
/// Also checks f3_global_max^2 = 1 + 2 l^2 for each pair and throws
/// InternalInconsistency if that fails by more than 1e-9.
std::array<PairVerdict, 3> reduced_pair_verdict(const PureThreeQubitState& psi);

}  // namespace absteer
