#include "absteer/witness.hpp"

#include <cmath>
#include <sstream>

#include "absteer/absolute.hpp"
#include "absteer/error.hpp"

namespace absteer {

ComplexMatrix4 steering_operator(const MeasurementSetting& mu) {
  ComplexMatrix4 s;
  for (std::size_t i = 0; i < mu.n(); ++i) s += kron(pauli_dot(mu.u()[i]), pauli_dot(mu.v()[i]));
  s *= cplx(1.0 / std::sqrt(static_cast<double>(mu.n())));
  return s;
}

ComplexMatrix4 steering_witness(const MeasurementSetting& mu, int sign) {
  return ComplexMatrix4::identity() - steering_operator(mu) * cplx(sign >= 0 ? 1.0 : -1.0);
}

WitnessOperator activation_witness(const DensityMatrix& state) {
  const auto verdict = decide_aus3(state);
  if (verdict.in_aus3) {
    std::ostringstream os;
    os << "global-unitary optimum F3 = " << verdict.f3_global_max << " does not exceed 1";
    throw Error(ErrorKind::NotActivatable, os.str());
  }
  const auto canonical = bell_diagonal_canonical(state);
  const auto canonical_state = conjugate(state, canonical.unitary);
  auto optimal = optimal_directions(canonical_state, 3);
  const int sign = signed_correlation_sum(to_bloch(canonical_state), optimal.setting) < 0.0 ? -1 : +1;

  const auto& u = canonical.unitary;
  return WitnessOperator{adjoint(u) * steering_witness(optimal.setting, sign) * u, u,
                         std::move(optimal.setting), sign};
}

double expectation(const ComplexMatrix4& w, const DensityMatrix& rho) {
  return trace_product_real(w, rho.matrix());
}

}  // namespace absteer
