#pragma once

// Small dense linear algebra for the two shapes every criterion needs:
// 4x4 complex (two-qubit operators) and 3x3 real (correlation matrices).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace absteer {

using cplx = std::complex<double>;

template <typename T, std::size_t N>
struct SquareMatrix {
  static constexpr std::size_t size = N;
  std::array<T, N * N> data{};

  constexpr T& operator()(std::size_t r, std::size_t c) { return data[r * N + c]; }
  constexpr const T& operator()(std::size_t r, std::size_t c) const { return data[r * N + c]; }

  static constexpr SquareMatrix zero() { return {}; }
  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1);
    return m;
  }
  static constexpr SquareMatrix diagonal(const std::array<T, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data[k] += o.data[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data[k] -= o.data[k];
    return *this;
  }
  SquareMatrix& operator*=(T s) {
    for (auto& x : data) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, T s) { return a *= s; }
  friend SquareMatrix operator*(T s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

using ComplexMatrix2 = SquareMatrix<cplx, 2>;
using ComplexMatrix4 = SquareMatrix<cplx, 4>;
using RealMatrix3 = SquareMatrix<double, 3>;
using Vec3 = std::array<double, 3>;
using CVec4 = std::array<cplx, 4>;

inline constexpr double HERM_TOL = 1e-10;
inline constexpr double RECON_TOL = 1e-9;
inline constexpr double JACOBI_OFFDIAG_TOL = 1e-12;
inline constexpr int JACOBI_MAX_SWEEPS = 100;

/// Eigenvalues sorted descending (ties keep the original diagonal order) and
/// the matching orthonormal eigenvectors.
struct EigenSystem4 {
  std::array<double, 4> values{};
  std::array<CVec4, 4> vectors{};
};

struct EigenSystem3 {
  std::array<double, 3> values{};
  std::array<Vec3, 3> vectors{};
};

/// Cyclic complex Jacobi. Throws NotHermitian when max|A - A^H| > HERM_TOL,
/// NoConvergence after JACOBI_MAX_SWEEPS.
EigenSystem4 hermitian_eigensystem(const ComplexMatrix4& a);

/// Cyclic real Jacobi for a symmetric 3x3 matrix; only the symmetric part is used.
EigenSystem3 symmetric_eigensystem(const RealMatrix3& a);

/// Singular values of a real 3x3, descending, from the eigenvalues of T^T T.
std::array<double, 3> singular_values_3x3(const RealMatrix3& t);

ComplexMatrix4 adjoint(const ComplexMatrix4& a);
RealMatrix3 transpose(const RealMatrix3& a);
ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix4 outer(const CVec4& ket, const CVec4& bra);
CVec4 apply(const ComplexMatrix4& a, const CVec4& v);

cplx trace(const ComplexMatrix4& a);
double trace(const RealMatrix3& a);

/// Re Tr(AB) without forming the product.
double trace_product_real(const ComplexMatrix4& a, const ComplexMatrix4& b);

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);
double hermiticity_error(const ComplexMatrix4& a);
bool all_finite(const ComplexMatrix4& a);
bool all_finite(const RealMatrix3& a);

template <typename T, std::size_t N>
double frobenius_norm(const SquareMatrix<T, N>& a) {
  double s = 0.0;
  for (const auto& x : a.data) s += std::norm(x);
  return std::sqrt(s);
}

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 mul(const RealMatrix3& m, const Vec3& v);

}  // namespace absteer
