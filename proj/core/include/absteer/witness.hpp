#pragma once

#include "absteer/numlin.hpp"
#include "absteer/states.hpp"
#include "absteer/steering.hpp"

namespace absteer {

/// S = (1/sqrt(n)) sum_i (u_i.s) (x) (v_i.s).
ComplexMatrix4 steering_operator(const MeasurementSetting& mu);

/// I - sign * S. With sign = +1, Tr(W rho) = 1 - signed functional, negative
/// exactly when the setting certifies a violation.
ComplexMatrix4 steering_witness(const MeasurementSetting& mu, int sign = +1);

/// W = U_e^H (I - S) U_e: nonnegative on every state that cannot be driven to
/// a violation, negative on the state it was built from.
struct WitnessOperator {
  ComplexMatrix4 matrix{};
  ComplexMatrix4 activating_unitary{};
  MeasurementSetting setting;
  int sign = +1;
};

/// Throws NotActivatable when the state already satisfies the inequality for
/// every global unitary.
WitnessOperator activation_witness(const DensityMatrix& state);

/// Re Tr(W rho).
double expectation(const ComplexMatrix4& w, const DensityMatrix& rho);

}  // namespace absteer
