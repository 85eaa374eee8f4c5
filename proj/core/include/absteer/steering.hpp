#pragma once

#include <cstddef>
#include <vector>

#include "absteer/numlin.hpp"
#include "absteer/states.hpp"

namespace absteer {

/// n measurement pairs (u_i, v_i): Alice measures u_i.s, Bob v_i.s.
/// Each u_i is a unit vector (repeats allowed); the v_i are orthonormal.
class MeasurementSetting {
 public:
  /// Throws InvalidSetting on size mismatch, n outside {2, 3}, non-unit u_i
  /// or non-orthonormal v_i (tolerance 1e-10).
  MeasurementSetting(std::vector<Vec3> u, std::vector<Vec3> v);

  std::size_t n() const noexcept { return u_.size(); }
  const std::vector<Vec3>& u() const noexcept { return u_; }
  const std::vector<Vec3>& v() const noexcept { return v_; }

  /// u = v = first n coordinate axes.
  static MeasurementSetting axes(std::size_t n);

 private:
  std::vector<Vec3> u_;
  std::vector<Vec3> v_;
};

inline constexpr double SETTING_TOL = 1e-10;

struct SteeringValue {
  double value = 0.0;
  bool violated = false;  // value > 1, exact

  static SteeringValue of(double v) { return {v, v > 1.0}; }
};

/// Sum_i u_i^T T v_i, before the 1/sqrt(n) and absolute value.
double signed_correlation_sum(const BlochForm& f, const MeasurementSetting& mu);
/// The same sum evaluated as sum_i Tr(rho (u_i.s) (x) (v_i.s)).
double signed_correlation_sum_trace(const DensityMatrix& rho, const MeasurementSetting& mu);

/// F_n(rho, mu) = |sum_i <A_i (x) B_i>| / sqrt(n), via the correlation matrix.
SteeringValue steering_functional(const DensityMatrix& rho, const MeasurementSetting& mu);
/// Same quantity through explicit operator traces; kept as a cross-check.
SteeringValue steering_functional_trace(const DensityMatrix& rho, const MeasurementSetting& mu);

/// Maximum of F_3 over settings: ||T||_F.
SteeringValue f3_max(const DensityMatrix& rho);
SteeringValue f3_max(const BlochForm& f);
/// Maximum of F_2 over settings: sqrt(s1^2 + s2^2).
SteeringValue f2_max(const DensityMatrix& rho);

struct OptimalSetting {
  MeasurementSetting setting;
  /// Terms whose |T v_i| < 1e-12 (only when T vanishes on the frame); their
  /// u_i fall back to coordinate axes and contribute nothing.
  std::size_t degenerate_terms = 0;
};

/// Maximizer of F_n: v_i is an orthonormal frame, built from the eigenvectors
/// of T^T T, on which every |T v_i| is equal; u_i = T v_i / |T v_i|. When the
/// eigenvalues are all equal the eigenvectors are used as they are.
OptimalSetting optimal_directions(const DensityMatrix& rho, std::size_t n);

inline constexpr double JM_OPTIMAL_UNSHARPNESS = 0.57735026918962576451;  // 1/sqrt(3)

/// value <= 1/eta_opt = sqrt(3), with 1e-9 slack.
bool jm_bound_check(const SteeringValue& value);

}  // namespace absteer
