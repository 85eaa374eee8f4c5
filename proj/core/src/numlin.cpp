#include "absteer/numlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "absteer/error.hpp"

namespace absteer {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InvalidSetting: return "InvalidSetting";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotActivatable: return "NotActivatable";
    case ErrorKind::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

namespace {

template <typename T, std::size_t N>
double off_diagonal_norm(const SquareMatrix<T, N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Descending order, stable on the original index.
template <std::size_t N>
std::array<std::size_t, N> descending_order(const std::array<double, N>& values) {
  std::array<std::size_t, N> idx{};
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t l, std::size_t r) { return values[l] > values[r]; });
  return idx;
}

}  // namespace

EigenSystem4 hermitian_eigensystem(const ComplexMatrix4& input) {
  constexpr std::size_t n = 4;
  if (!all_finite(input)) throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
  const double herr = hermiticity_error(input);
  if (herr > HERM_TOL) {
    std::ostringstream os;
    os << "max|A - A^H| = " << herr << " exceeds " << HERM_TOL;
    throw Error(ErrorKind::NotHermitian, os.str());
  }

  ComplexMatrix4 a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  ComplexMatrix4 v = ComplexMatrix4::identity();

  const double scale = std::max(1.0, frobenius_norm(a));
  int sweep = 0;
  while (off_diagonal_norm(a) >= JACOBI_OFFDIAG_TOL * scale) {
    if (++sweep > JACOBI_MAX_SWEEPS)
      throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap reached");
    for (std::size_t p = 0; p < n - 1; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double b = std::abs(a(p, q));
        if (b < 1e-300) continue;
        // Phase-align a(p,q) to the real axis, then a real Jacobi rotation.
        const cplx phase = std::conj(a(p, q)) / b;  // e^{-i arg a_pq}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * b);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx jpp = c;
        const cplx jpq = s;
        const cplx jqp = -s * phase;
        const cplx jqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<double, n> diag{};
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  const auto order = descending_order(diag);

  EigenSystem4 out;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = v(i, order[k]);
  }
  return out;
}

EigenSystem3 symmetric_eigensystem(const RealMatrix3& input) {
  constexpr std::size_t n = 3;
  RealMatrix3 a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
  RealMatrix3 v = RealMatrix3::identity();

  const double scale = std::max(1.0, frobenius_norm(a));
  int sweep = 0;
  while (off_diagonal_norm(a) >= JACOBI_OFFDIAG_TOL * scale) {
    if (++sweep > JACOBI_MAX_SWEEPS)
      throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap reached");
    for (std::size_t p = 0; p < n - 1; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::array<double, n> diag{a(0, 0), a(1, 1), a(2, 2)};
  const auto order = descending_order(diag);
  EigenSystem3 out;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = v(i, order[k]);
  }
  return out;
}

std::array<double, 3> singular_values_3x3(const RealMatrix3& t) {
  const auto eig = symmetric_eigensystem(transpose(t) * t);
  std::array<double, 3> s{};
  for (std::size_t i = 0; i < 3; ++i) s[i] = std::sqrt(std::max(0.0, eig.values[i]));
  return s;
}

ComplexMatrix4 adjoint(const ComplexMatrix4& a) {
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = std::conj(a(j, i));
  return m;
}

RealMatrix3 transpose(const RealMatrix3& a) {
  RealMatrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = a(j, i);
  return m;
}

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

ComplexMatrix4 outer(const CVec4& ket, const CVec4& bra) {
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

CVec4 apply(const ComplexMatrix4& a, const CVec4& v) {
  CVec4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += a(i, j) * v[j];
  return out;
}

cplx trace(const ComplexMatrix4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }
double trace(const RealMatrix3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

double trace_product_real(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) s += (a(i, k) * b(k, i)).real();
  return s;
}

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.data.size(); ++k) m = std::max(m, std::abs(a.data[k] - b.data[k]));
  return m;
}

double hermiticity_error(const ComplexMatrix4& a) { return max_abs_diff(a, adjoint(a)); }

bool all_finite(const ComplexMatrix4& a) {
  return std::all_of(a.data.begin(), a.data.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool all_finite(const RealMatrix3& a) {
  return std::all_of(a.data.begin(), a.data.end(), [](double x) { return std::isfinite(x); });
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 mul(const RealMatrix3& m, const Vec3& v) {
  Vec3 out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace absteer
