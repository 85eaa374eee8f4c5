#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absteer/absolute.hpp"
#include "absteer/parallel.hpp"
#include "absteer/states.hpp"

namespace absteer {

/// p |psi-><psi-| + (1 - p) I/4, p in [0, 1].
DensityMatrix werner(double p);

/// lambda |psi_theta><psi_theta| + (1 - lambda) (|00><00| + |11><11|)/2 with
/// |psi_theta> = sin(theta)|01> + cos(theta)|10>; lambda in [0, 1],
/// theta in (0, pi/2).
DensityMatrix gisin(double lambda, double theta);

/// Diagonal v1..v4, coherences v5 (|00><11| + h.c.) and v6 (|01><10| + h.c.).
/// Requires v1..v4 >= 0 summing to 1, v5^2 <= v1 v4, v6^2 <= v2 v3.
DensityMatrix x_state(const std::array<double, 6>& v);

/// sum_{i<=4} v_i^2 + 2 (v5^2 + v6^2) <= 1/2, the closed-form membership test.
bool x_state_in_aus3(const std::array<double, 6>& v);

PureThreeQubitState ghz_state();
PureThreeQubitState w_state();
PureThreeQubitState product_000();

enum class Family { Werner, Gisin, XState };

std::string_view to_string(Family f);
/// Throws OutOfRange for unknown names.
Family family_from_string(std::string_view name);

using NamedParameters = std::vector<std::pair<std::string, double>>;

struct FamilyPoint {
  Family family = Family::Werner;
  double parameter = 0.0;  // the scanned coordinate
  NamedParameters parameters;
  DensityMatrix state;
  AbsoluteVerdict verdict;
};

struct ScanGrid {
  double from = 0.0;
  double to = 1.0;
  double step = 1e-3;

  /// Inclusive grid, from + k*step; throws OutOfRange for an empty or
  /// malformed range.
  std::vector<double> points() const;
};

struct ScanOptions {
  double theta = 0.78539816339744830962;  // Gisin angle, pi/4
  double bisection_tol = 1e-12;
  unsigned workers = default_workers();
};

struct ScanResult {
  Family family = Family::Werner;
  ScanGrid grid;
  ScanOptions options;
  std::vector<FamilyPoint> points;
  /// Every change of the in_aus3 flag between neighbouring grid points,
  /// refined by bisection on f3_global_max - 1.
  std::vector<double> thresholds;

  std::optional<double> threshold() const {
    if (thresholds.empty()) return std::nullopt;
    return thresholds.front();
  }
};

/// Werner and Gisin families scan their single parameter; XState has no
/// one-parameter path and is rejected with OutOfRange.
FamilyPoint family_point(Family family, double parameter, const ScanOptions& options = {});
ScanResult scan_family(Family family, const ScanGrid& grid, const ScanOptions& options = {});

}  // namespace absteer
