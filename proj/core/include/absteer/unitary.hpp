#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "absteer/numlin.hpp"
#include "absteer/parallel.hpp"
#include "absteer/states.hpp"

namespace absteer {

/// Deterministic random source: the output sequence is a pure function of
/// (seed, stream).
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// Independent generator for sub-task `index` of this stream.
  SeededGenerator substream(std::uint64_t index) const;

  double uniform();
  double gaussian();
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  cplx complex_gaussian();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

/// Haar unitary: Ginibre matrix, modified Gram-Schmidt, R diagonal made positive.
ComplexMatrix4 haar_unitary(SeededGenerator& g);

/// Hilbert-Schmidt ensemble: G G^H / Tr(G G^H) with G 4x4 Ginibre.
DensityMatrix random_state(SeededGenerator& g);

/// Haar-random pure three-qubit state.
PureThreeQubitState random_pure_three_qubit(SeededGenerator& g);

struct EmpiricalSup {
  double sup = 0.0;    // max of f3_max(U rho U^H) over the sampled U
  double bound = 0.0;  // closed-form optimum from the spectrum
  double gap = 0.0;    // bound - sup
  std::size_t trials = 0;
};

/// The first trial is the identity; the rest are Haar draws.
EmpiricalSup empirical_f3_sup(const DensityMatrix& rho, std::size_t trials, SeededGenerator& g);

struct VolumeEstimate {
  double fraction = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
  std::size_t hits = 0;
};

inline constexpr std::size_t MIN_VOLUME_SAMPLES = 100;
inline constexpr std::size_t VOLUME_CHUNK = 1024;

/// Fraction of Hilbert-Schmidt states with purity <= 1/2. Samples are drawn in
/// fixed chunks, each on its own substream, so the result does not depend on
/// `workers`. Throws OutOfRange when samples < MIN_VOLUME_SAMPLES.
VolumeEstimate aus3_volume_estimate(std::size_t samples, const SeededGenerator& g,
                                    unsigned workers = default_workers());

struct MaximalitySweep {
  std::size_t states = 0;
  std::size_t unitaries = 0;
  /// max over samples of f3_max(U rho U^H) - f3_global_max(rho); must stay <= 1e-9.
  double worst_excess = 0.0;
  /// max over states of |f3_max(canonical) - f3_global_max|.
  double worst_canonical_gap = 0.0;
};

/// Random states against random unitaries, one substream per state.
MaximalitySweep maximality_sweep(std::size_t states, std::size_t unitaries, const SeededGenerator& g,
                                 unsigned workers = default_workers());

}  // namespace absteer
