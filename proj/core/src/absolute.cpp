#include "absteer/absolute.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "absteer/error.hpp"
#include "absteer/steering.hpp"

namespace absteer {

double f3_global_max(const SpectrumReport& spectrum) {
  double squares = 0.0;
  double pairs = 0.0;
  const auto& x = spectrum.eigenvalues;
  for (std::size_t i = 0; i < 4; ++i) {
    squares += x[i] * x[i];
    for (std::size_t j = i + 1; j < 4; ++j) pairs += x[i] * x[j];
  }
  return std::sqrt(std::max(0.0, 3.0 * squares - 2.0 * pairs));
}

AbsoluteVerdict decide_aus3(const DensityMatrix& rho) {
  AbsoluteVerdict v;

  const auto spectrum = spectrum_report(rho);
  v.spectrum_lhs = 3.0 * spectrum.purity - 2.0 * spectrum.pairwise_sum;
  v.f3_global_max = f3_global_max(spectrum);

  v.purity = purity(rho);

  const auto bloch = to_bloch(rho);
  const double tn = frobenius_norm(bloch.t);
  v.bloch_sum = dot(bloch.a, bloch.a) + dot(bloch.b, bloch.b) + tn * tn;

  v.ball_distance = frobenius_norm(rho.matrix() - ComplexMatrix4::identity() * cplx(0.25));

  // purity <= 1/2 maps to lhs <= 1, bloch_sum <= 1, f3 <= 1, distance <= 1/2.
  const double tol4 = 4.0 * BOUNDARY_TOL;
  const std::array<bool, 5> votes{
      v.spectrum_lhs <= 1.0 + tol4,
      v.purity <= 0.5 + BOUNDARY_TOL,
      v.bloch_sum <= 1.0 + tol4,
      v.f3_global_max <= std::sqrt(1.0 + tol4),
      v.ball_distance <= std::sqrt(0.25 + BOUNDARY_TOL),
  };
  if (!std::all_of(votes.begin(), votes.end(), [&](bool b) { return b == votes[0]; })) {
    std::ostringstream os;
    os.precision(17);
    os << "criteria disagree: spectrum_lhs=" << v.spectrum_lhs << " purity=" << v.purity
       << " bloch_sum=" << v.bloch_sum << " f3_global_max=" << v.f3_global_max
       << " ball_distance=" << v.ball_distance;
    throw Error(ErrorKind::InternalInconsistency, os.str());
  }
  v.in_aus3 = votes[0];
  return v;
}

ComplexMatrix4 BellDiagonalState::matrix() const {
  ComplexMatrix4 m;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& b = bell_basis()[k];
    m += outer(b, b) * cplx(weights[k]);
  }
  return m;
}

BellDiagonalState bell_diagonal_canonical(const DensityMatrix& rho) {
  const auto eig = hermitian_eigensystem(rho.matrix());
  BellDiagonalState out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.weights[k] = std::max(0.0, eig.values[k]);
    // U = sum_k |B_k><e_k|
    out.unitary += outer(bell_basis()[k], eig.vectors[k]);
  }
  return out;
}

bool frobenius_ball_check(const DensityMatrix& rho) {
  const double d = frobenius_norm(rho.matrix() - ComplexMatrix4::identity() * cplx(0.25));
  return d <= 0.5 + BOUNDARY_TOL;
}

std::array<PairVerdict, 3> reduced_pair_verdict(const PureThreeQubitState& psi) {
  std::array<PairVerdict, 3> out;
  const std::array<QubitPair, 3> pairs{QubitPair::AB, QubitPair::BC, QubitPair::AC};
  for (std::size_t k = 0; k < 3; ++k) {
    auto& pv = out[k];
    pv.pair = pairs[k];
    pv.verdict = decide_aus3(reduce_to_pair(psi, pv.pair));
    pv.complementary_bloch_norm = single_qubit_bloch_norm(psi, complement(pv.pair));
    const double l = pv.complementary_bloch_norm;
    const double f = pv.verdict.f3_global_max;
    if (std::abs(f * f - (1.0 + 2.0 * l * l)) > 1e-9) {
      std::ostringstream os;
      os.precision(17);
      os << "pair reduction F3^2=" << f * f << " but 1+2l^2=" << 1.0 + 2.0 * l * l;
      throw Error(ErrorKind::InternalInconsistency, os.str());
    }
  }
  return out;
}

}  // namespace absteer
