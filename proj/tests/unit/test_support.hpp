#pragma once

// Independent reference computations for the unit tests. Everything here goes
// through Eigen and hand-written Pauli matrices, never through the library's
// own kernels, so agreement is a real cross-check.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>

#include "absteer/absteer.hpp"

namespace absteer::testing {

using EMat4 = Eigen::Matrix4cd;
using EMat2 = Eigen::Matrix2cd;

inline EMat4 to_eigen(const ComplexMatrix4& m) {
  EMat4 e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return e;
}

inline ComplexMatrix4 from_eigen(const EMat4& e) {
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return m;
}

inline EMat2 ref_pauli(int k) {
  const std::complex<double> i(0, 1);
  EMat2 p;
  switch (k) {
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -i, i, 0; break;
    case 3: p << 1, 0, 0, -1; break;
    default: p = EMat2::Identity();
  }
  return p;
}

inline EMat4 ref_kron(const EMat2& a, const EMat2& b) {
  EMat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

/// T_ij = Tr(rho s_i (x) s_j) straight from the definition.
inline Eigen::Matrix3d ref_correlation(const EMat4& rho) {
  Eigen::Matrix3d t;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) t(i - 1, j - 1) = (rho * ref_kron(ref_pauli(i), ref_pauli(j))).trace().real();
  return t;
}

inline Eigen::Vector4d ref_eigenvalues_desc(const EMat4& m) {
  Eigen::SelfAdjointEigenSolver<EMat4> es(m);
  Eigen::Vector4d v = es.eigenvalues().reverse();
  return v;
}

inline Eigen::Vector4cd ket(double a00, double a01, double a10, double a11) {
  Eigen::Vector4cd k;
  k << a00, a01, a10, a11;
  return k;
}

inline EMat4 ref_singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  const auto k = ket(0, h, -h, 0);
  return k * k.adjoint();
}

inline EMat4 ref_werner(double p) { return p * ref_singlet() + (1 - p) / 4.0 * EMat4::Identity(); }

inline EMat4 ref_gisin(double lambda, double theta) {
  const auto k = ket(0, std::sin(theta), std::cos(theta), 0);
  EMat4 mix = EMat4::Zero();
  mix(0, 0) = 0.5;
  mix(3, 3) = 0.5;
  return lambda * k * k.adjoint() + (1 - lambda) * mix;
}

/// Partial trace of |psi><psi| (8x8) over qubit `traced` (0 = A, 1 = B, 2 = C),
/// by explicit summation over the full outer product.
inline EMat4 ref_partial_trace(const std::array<std::complex<double>, 8>& amp, int traced) {
  Eigen::Matrix<std::complex<double>, 8, 8> full;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) full(r, c) = amp[static_cast<std::size_t>(r)] * std::conj(amp[static_cast<std::size_t>(c)]);
  EMat4 out = EMat4::Zero();
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const int rb[3] = {(r >> 2) & 1, (r >> 1) & 1, r & 1};
      const int cb[3] = {(c >> 2) & 1, (c >> 1) & 1, c & 1};
      if (rb[traced] != cb[traced]) continue;
      int rk[2], ck[2], n = 0;
      for (int q = 0; q < 3; ++q) {
        if (q == traced) continue;
        rk[n] = rb[q];
        ck[n] = cb[q];
        ++n;
      }
      out(2 * rk[0] + rk[1], 2 * ck[0] + ck[1]) += full(r, c);
    }
  }
  return out;
}

/// Random Hermitian matrix with entries of order one.
inline ComplexMatrix4 random_hermitian(SeededGenerator& g) {
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) = g.gaussian();
    for (std::size_t j = i + 1; j < 4; ++j) {
      m(i, j) = g.complex_gaussian();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline Vec3 random_unit(SeededGenerator& g) {
  Vec3 x{g.gaussian(), g.gaussian(), g.gaussian()};
  const double n = norm(x);
  return {x[0] / n, x[1] / n, x[2] / n};
}

/// Random valid setting: arbitrary unit u_i, a random orthonormal v frame.
inline MeasurementSetting random_setting(SeededGenerator& g, std::size_t n) {
  const Vec3 v1 = random_unit(g);
  Vec3 w = random_unit(g);
  const double d = dot(w, v1);
  for (std::size_t k = 0; k < 3; ++k) w[k] -= d * v1[k];
  const double wn = norm(w);
  const Vec3 v2{w[0] / wn, w[1] / wn, w[2] / wn};
  std::vector<Vec3> v{v1, v2, cross(v1, v2)};
  std::vector<Vec3> u{random_unit(g), random_unit(g), random_unit(g)};
  v.resize(n);
  u.resize(n);
  return MeasurementSetting(u, v);
}

/// Haar unitary on one qubit, via the library's generator for randomness only.
inline ComplexMatrix2 random_su2(SeededGenerator& g) {
  std::array<std::complex<double>, 4> z{g.complex_gaussian(), g.complex_gaussian(), g.complex_gaussian(),
                                        g.complex_gaussian()};
  const double n = std::sqrt(std::norm(z[0]) + std::norm(z[1]));
  const std::complex<double> a = z[0] / n, b = z[1] / n;
  ComplexMatrix2 u;
  u(0, 0) = a;
  u(0, 1) = -std::conj(b);
  u(1, 0) = b;
  u(1, 1) = std::conj(a);
  return u;
}

inline DensityMatrix random_in_aus3(SeededGenerator& g) {
  for (;;) {
    auto rho = random_state(g);
    if (purity(rho) <= 0.5) return rho;
  }
}

}  // namespace absteer::testing
