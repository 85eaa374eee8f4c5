#include "absteer/families.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>

#include "absteer/error.hpp"

namespace absteer {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::OutOfRange, what);
}

}  // namespace

DensityMatrix werner(double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "Werner p must lie in [0, 1]");
  return DensityMatrix::validate(singlet().matrix() * cplx(p) +
                                 ComplexMatrix4::identity() * cplx((1.0 - p) / 4.0));
}

DensityMatrix gisin(double lambda, double theta) {
  require(std::isfinite(lambda) && lambda >= 0.0 && lambda <= 1.0, "Gisin lambda must lie in [0, 1]");
  constexpr double half_pi = 1.57079632679489661923;
  require(std::isfinite(theta) && theta > 0.0 && theta < half_pi, "Gisin theta must lie in (0, pi/2)");
  const CVec4 psi{0.0, std::sin(theta), std::cos(theta), 0.0};
  ComplexMatrix4 mixed;
  mixed(0, 0) = 0.5;
  mixed(3, 3) = 0.5;
  return DensityMatrix::validate(outer(psi, psi) * cplx(lambda) + mixed * cplx(1.0 - lambda));
}

DensityMatrix x_state(const std::array<double, 6>& v) {
  for (double x : v) require(std::isfinite(x), "X-state parameters must be finite");
  for (std::size_t i = 0; i < 4; ++i) require(v[i] >= 0.0, "X-state populations must be nonnegative");
  require(std::abs(v[0] + v[1] + v[2] + v[3] - 1.0) <= TRACE_TOL, "X-state populations must sum to 1");
  require(v[4] * v[4] <= v[0] * v[3] + 1e-12, "X state requires v5^2 <= v1 v4");
  require(v[5] * v[5] <= v[1] * v[2] + 1e-12, "X state requires v6^2 <= v2 v3");
  ComplexMatrix4 m = ComplexMatrix4::diagonal({v[0], v[1], v[2], v[3]});
  m(0, 3) = v[4];
  m(3, 0) = v[4];
  m(1, 2) = v[5];
  m(2, 1) = v[5];
  return DensityMatrix::validate(m);
}

bool x_state_in_aus3(const std::array<double, 6>& v) {
  const double s = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3] + 2.0 * (v[4] * v[4] + v[5] * v[5]);
  return s <= 0.5 + BOUNDARY_TOL;
}

PureThreeQubitState ghz_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return PureThreeQubitState::normalized({h, 0, 0, 0, 0, 0, 0, h});
}

PureThreeQubitState w_state() {
  const double t = 1.0 / std::sqrt(3.0);
  return PureThreeQubitState::normalized({0, t, t, 0, t, 0, 0, 0});
}

PureThreeQubitState product_000() { return PureThreeQubitState({1, 0, 0, 0, 0, 0, 0, 0}); }

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Werner: return "werner";
    case Family::Gisin: return "gisin";
    case Family::XState: return "xstate";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  if (name == "werner") return Family::Werner;
  if (name == "gisin") return Family::Gisin;
  if (name == "xstate") return Family::XState;
  throw Error(ErrorKind::OutOfRange, "unknown family '" + std::string(name) + "'");
}

std::vector<double> ScanGrid::points() const {
  require(std::isfinite(from) && std::isfinite(to) && std::isfinite(step), "grid bounds must be finite");
  require(step > 0.0, "grid step must be positive");
  require(from <= to, "grid range is empty");
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = std::min(to, from + static_cast<double>(k) * step);
  return out;
}

namespace {

DensityMatrix family_state(Family family, double x, const ScanOptions& options) {
  switch (family) {
    case Family::Werner: return werner(x);
    case Family::Gisin: return gisin(x, options.theta);
    case Family::XState: break;
  }
  throw Error(ErrorKind::OutOfRange, "the xstate family has no one-parameter scan");
}

double boundary_function(Family family, double x, const ScanOptions& options) {
  return f3_global_max(spectrum_report(family_state(family, x, options))) - 1.0;
}

}  // namespace

FamilyPoint family_point(Family family, double parameter, const ScanOptions& options) {
  auto state = family_state(family, parameter, options);
  NamedParameters params;
  if (family == Family::Werner) {
    params = {{"p", parameter}};
  } else {
    params = {{"lambda", parameter}, {"theta", options.theta}};
  }
  const auto verdict = decide_aus3(state);
  return FamilyPoint{family, parameter, std::move(params), std::move(state), verdict};
}

ScanResult scan_family(Family family, const ScanGrid& grid, const ScanOptions& options) {
  const auto xs = grid.points();
  if (family == Family::XState) family_state(family, 0.0, options);  // throws

  std::vector<std::optional<FamilyPoint>> slots(xs.size());
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  parallel_for(xs.size(), options.workers, [&](std::size_t k) {
    if (failed) return;
    try {
      slots[k] = family_point(family, xs[k], options);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  ScanResult result;
  result.family = family;
  result.grid = grid;
  result.options = options;
  result.points.reserve(xs.size());
  for (auto& s : slots) result.points.push_back(std::move(*s));

  for (std::size_t k = 0; k + 1 < result.points.size(); ++k) {
    const bool left_in = result.points[k].verdict.in_aus3;
    if (left_in == result.points[k + 1].verdict.in_aus3) continue;
    // Keep lo on the inside (g <= 0) and hi on the outside.
    double lo = left_in ? xs[k] : xs[k + 1];
    double hi = left_in ? xs[k + 1] : xs[k];
    for (int it = 0; it < 200 && std::abs(hi - lo) > options.bisection_tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (boundary_function(family, mid, options) <= 0.0)
        lo = mid;
      else
        hi = mid;
    }
    result.thresholds.push_back(0.5 * (lo + hi));
  }
  return result;
}

}  // namespace absteer
