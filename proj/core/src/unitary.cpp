#include "absteer/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absteer/absolute.hpp"
#include "absteer/error.hpp"
#include "absteer/steering.hpp"

namespace absteer {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

SeededGenerator SeededGenerator::substream(std::uint64_t index) const {
  return SeededGenerator(seed_, splitmix64(stream_ ^ splitmix64(index + 1)));
}

double SeededGenerator::uniform() { return unit_(engine_); }
double SeededGenerator::gaussian() { return normal_(engine_); }

cplx SeededGenerator::complex_gaussian() {
  constexpr double s = 0.70710678118654752440;
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {s * re, s * im};
}

ComplexMatrix4 haar_unitary(SeededGenerator& g) {
  std::array<CVec4, 4> cols{};
  for (auto& c : cols)
    for (auto& z : c) z = g.complex_gaussian();

  // Modified Gram-Schmidt gives Q with R_kk = |residual| > 0, which already
  // fixes the column phases.
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < 4; ++i) proj += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < 4; ++i) cols[k][i] -= proj * cols[j][i];
    }
    double n = 0.0;
    for (const auto& z : cols[k]) n += std::norm(z);
    n = std::sqrt(n);
    for (auto& z : cols[k]) z /= n;
  }
  // Second pass against round-off.
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < 4; ++i) proj += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < 4; ++i) cols[k][i] -= proj * cols[j][i];
    }
    double n = 0.0;
    for (const auto& z : cols[k]) n += std::norm(z);
    n = std::sqrt(n);
    for (auto& z : cols[k]) z /= n;
  }

  ComplexMatrix4 u;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) u(i, k) = cols[k][i];
  return u;
}

DensityMatrix random_state(SeededGenerator& g) {
  ComplexMatrix4 gin;
  for (auto& z : gin.data) z = g.complex_gaussian();
  ComplexMatrix4 m = gin * adjoint(gin);
  m *= cplx(1.0 / trace(m).real());
  return DensityMatrix::validate(m);
}

PureThreeQubitState random_pure_three_qubit(SeededGenerator& g) {
  std::array<cplx, 8> amp{};
  for (auto& z : amp) z = g.complex_gaussian();
  return PureThreeQubitState::normalized(amp);
}

EmpiricalSup empirical_f3_sup(const DensityMatrix& rho, std::size_t trials, SeededGenerator& g) {
  if (trials < 1) throw Error(ErrorKind::OutOfRange, "trials must be at least 1");
  EmpiricalSup out;
  out.trials = trials;
  out.bound = f3_global_max(spectrum_report(rho));
  out.sup = f3_max(rho).value;
  for (std::size_t t = 1; t < trials; ++t) {
    const auto u = haar_unitary(g);
    out.sup = std::max(out.sup, f3_max(conjugate(rho, u)).value);
  }
  out.gap = out.bound - out.sup;
  return out;
}

VolumeEstimate aus3_volume_estimate(std::size_t samples, const SeededGenerator& g, unsigned workers) {
  if (samples < MIN_VOLUME_SAMPLES)
    throw Error(ErrorKind::OutOfRange, "at least 100 samples required");
  const std::size_t chunks = (samples + VOLUME_CHUNK - 1) / VOLUME_CHUNK;
  std::vector<std::size_t> hits(chunks, 0);
  parallel_for(chunks, workers, [&](std::size_t c) {
    auto gen = g.substream(c);
    const std::size_t begin = c * VOLUME_CHUNK;
    const std::size_t end = std::min(samples, begin + VOLUME_CHUNK);
    std::size_t h = 0;
    for (std::size_t i = begin; i < end; ++i)
      if (purity(random_state(gen)) <= 0.5 + BOUNDARY_TOL) ++h;
    hits[c] = h;
  });

  VolumeEstimate out;
  out.samples = samples;
  for (auto h : hits) out.hits += h;
  out.fraction = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.standard_error = std::sqrt(out.fraction * (1.0 - out.fraction) / static_cast<double>(samples));
  return out;
}

MaximalitySweep maximality_sweep(std::size_t states, std::size_t unitaries, const SeededGenerator& g,
                                 unsigned workers) {
  std::vector<double> excess(states, -1.0);
  std::vector<double> canonical_gap(states, 0.0);
  parallel_for(states, workers, [&](std::size_t s) {
    auto gen = g.substream(s);
    const auto rho = random_state(gen);
    const double bound = f3_global_max(spectrum_report(rho));
    double worst = -bound;
    for (std::size_t k = 0; k < unitaries; ++k) {
      const auto u = haar_unitary(gen);
      worst = std::max(worst, f3_max(conjugate(rho, u)).value - bound);
    }
    excess[s] = worst;
    const auto canonical = bell_diagonal_canonical(rho);
    canonical_gap[s] = std::abs(f3_max(conjugate(rho, canonical.unitary)).value - bound);
  });

  MaximalitySweep out;
  out.states = states;
  out.unitaries = unitaries;
  out.worst_excess = states ? *std::max_element(excess.begin(), excess.end()) : 0.0;
  out.worst_canonical_gap = states ? *std::max_element(canonical_gap.begin(), canonical_gap.end()) : 0.0;
  return out;
}

}  // namespace absteer
