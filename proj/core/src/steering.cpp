#include "absteer/steering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "absteer/error.hpp"

namespace absteer {

MeasurementSetting::MeasurementSetting(std::vector<Vec3> u, std::vector<Vec3> v)
    : u_(std::move(u)), v_(std::move(v)) {
  if (u_.size() != v_.size())
    throw Error(ErrorKind::InvalidSetting, "u and v must have the same length");
  if (u_.size() < 2 || u_.size() > 3)
    throw Error(ErrorKind::InvalidSetting, "number of settings must be 2 or 3");
  for (std::size_t i = 0; i < u_.size(); ++i) {
    if (std::abs(norm(u_[i]) - 1.0) > SETTING_TOL) {
      std::ostringstream os;
      os << "u_" << i + 1 << " is not a unit vector";
      throw Error(ErrorKind::InvalidSetting, os.str());
    }
    for (std::size_t j = i; j < v_.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(dot(v_[i], v_[j]) - expected) > SETTING_TOL) {
        std::ostringstream os;
        os << "v_" << i + 1 << ", v_" << j + 1 << " are not orthonormal";
        throw Error(ErrorKind::InvalidSetting, os.str());
      }
    }
  }
}

MeasurementSetting MeasurementSetting::axes(std::size_t n) {
  std::vector<Vec3> e;
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 x{};
    if (i < 3) x[i] = 1.0;
    e.push_back(x);
  }
  return MeasurementSetting(e, e);
}

double signed_correlation_sum(const BlochForm& f, const MeasurementSetting& mu) {
  double s = 0.0;
  for (std::size_t i = 0; i < mu.n(); ++i) s += dot(mu.u()[i], mul(f.t, mu.v()[i]));
  return s;
}

double signed_correlation_sum_trace(const DensityMatrix& rho, const MeasurementSetting& mu) {
  double s = 0.0;
  for (std::size_t i = 0; i < mu.n(); ++i) {
    const auto op = kron(pauli_dot(mu.u()[i]), pauli_dot(mu.v()[i]));
    s += trace_product_real(rho.matrix(), op);
  }
  return s;
}

SteeringValue steering_functional(const DensityMatrix& rho, const MeasurementSetting& mu) {
  const double n = static_cast<double>(mu.n());
  return SteeringValue::of(std::abs(signed_correlation_sum(to_bloch(rho), mu)) / std::sqrt(n));
}

SteeringValue steering_functional_trace(const DensityMatrix& rho, const MeasurementSetting& mu) {
  const double n = static_cast<double>(mu.n());
  return SteeringValue::of(std::abs(signed_correlation_sum_trace(rho, mu)) / std::sqrt(n));
}

SteeringValue f3_max(const BlochForm& f) { return SteeringValue::of(frobenius_norm(f.t)); }
SteeringValue f3_max(const DensityMatrix& rho) { return f3_max(to_bloch(rho)); }

SteeringValue f2_max(const DensityMatrix& rho) {
  const auto s = singular_values_3x3(to_bloch(rho).t);
  return SteeringValue::of(std::sqrt(s[0] * s[0] + s[1] * s[1]));
}

namespace {

// Sign convention for eigenvectors: the largest-magnitude component is
// positive, which keeps frames near the coordinate axes pointing along them.
Vec3 canonical_sign(Vec3 v) {
  std::size_t big = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[big]) + 1e-12) big = i;
  if (v[big] < 0.0)
    for (auto& x : v) x = -x;
  return v;
}

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Unit vector orthogonal to every vector in `taken`, preferring coordinate axes.
Vec3 complete_frame(const std::vector<Vec3>& taken) {
  if (taken.size() == 2) return normalized(cross(taken[0], taken[1]));
  for (std::size_t axis = 0; axis < 3; ++axis) {
    Vec3 e{};
    e[axis] = 1.0;
    Vec3 r = e;
    for (const auto& t : taken) {
      const double d = dot(r, t);
      for (std::size_t k = 0; k < 3; ++k) r[k] -= d * t[k];
    }
    if (norm(r) > 1e-6) return normalized(r);
  }
  return {1.0, 0.0, 0.0};
}

// Orthonormal frame on which T^T T has constant diagonal. Every |T v_i| is
// then equal, which is what saturates F_n at sqrt(u_1 + ... + u_n).
std::vector<Vec3> balanced_frame(const EigenSystem3& eig, std::size_t n) {
  const auto& lam = eig.values;
  std::array<Vec3, 3> e{};
  for (std::size_t i = 0; i < 3; ++i) e[i] = canonical_sign(eig.vectors[i]);
  constexpr double eps = 1e-14;
  const double h = 1.0 / std::sqrt(2.0);
  auto combine = [](double a, const Vec3& x, double b, const Vec3& y) {
    return Vec3{a * x[0] + b * y[0], a * x[1] + b * y[1], a * x[2] + b * y[2]};
  };

  if (n == 2) {
    if (lam[0] - lam[1] <= eps) return {e[0], e[1]};
    return {combine(h, e[0], h, e[1]), combine(h, e[0], -h, e[1])};
  }

  if (lam[0] - lam[2] <= eps) return {e[0], e[1], e[2]};
  const double target = (lam[0] + lam[1] + lam[2]) / 3.0;
  // Rotate e1 towards e3 until its diagonal entry hits the target.
  const double c2 = std::clamp((target - lam[2]) / (lam[0] - lam[2]), 0.0, 1.0);
  const double c = std::sqrt(c2);
  const double s = std::sqrt(1.0 - c2);
  const Vec3 w1 = combine(c, e[0], s, e[2]);
  const Vec3 w3 = combine(-s, e[0], c, e[2]);
  // span(e2, w3) is still diagonal, with entries summing to 2*target.
  const double rest = lam[0] + lam[2] - target;
  if (std::abs(rest - lam[1]) <= eps) return {w1, e[1], w3};
  return {w1, combine(h, e[1], h, w3), combine(h, e[1], -h, w3)};
}

}  // namespace

OptimalSetting optimal_directions(const DensityMatrix& rho, std::size_t n) {
  if (n < 2 || n > 3) throw Error(ErrorKind::InvalidSetting, "number of settings must be 2 or 3");
  const auto t = to_bloch(rho).t;
  auto v = balanced_frame(symmetric_eigensystem(transpose(t) * t), n);

  std::vector<Vec3> u(n);
  std::vector<bool> good(n, false);
  std::vector<Vec3> taken;
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 tv = mul(t, v[i]);
    if (norm(tv) < 1e-12) {
      ++degenerate;
      continue;
    }
    u[i] = normalized(tv);
    good[i] = true;
    taken.push_back(u[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (good[i]) continue;
    u[i] = complete_frame(taken);
    taken.push_back(u[i]);
  }
  return {MeasurementSetting(std::move(u), std::move(v)), degenerate};
}

bool jm_bound_check(const SteeringValue& value) {
  return value.value <= 1.0 / JM_OPTIMAL_UNSHARPNESS + 1e-9;
}

}  // namespace absteer
