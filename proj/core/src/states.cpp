#include "absteer/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "absteer/error.hpp"

namespace absteer {

DensityMatrix DensityMatrix::validate(const ComplexMatrix4& m) {
  if (!all_finite(m)) throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
  const double herr = hermiticity_error(m);
  if (herr > HERM_TOL) {
    std::ostringstream os;
    os << "max|rho - rho^H| = " << herr;
    throw Error(ErrorKind::NotHermitian, os.str());
  }
  ComplexMatrix4 h;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  const double tr = trace(h).real();
  if (std::abs(tr - 1.0) > TRACE_TOL) {
    std::ostringstream os;
    os << "trace = " << tr;
    throw Error(ErrorKind::NotUnitTrace, os.str());
  }

  const auto eig = hermitian_eigensystem(h);
  const double lowest = eig.values[3];
  if (lowest < -POSITIVITY_TOL) {
    std::ostringstream os;
    os << "eigenvalue " << lowest << " below " << -POSITIVITY_TOL;
    throw Error(ErrorKind::NotPositive, os.str());
  }
  if (lowest < 0.0) {
    ComplexMatrix4 rebuilt;
    double total = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const double lam = std::max(0.0, eig.values[k]);
      total += lam;
      rebuilt += outer(eig.vectors[k], eig.vectors[k]) * cplx(lam);
    }
    rebuilt *= cplx(1.0 / total);
    return DensityMatrix(rebuilt);
  }
  return DensityMatrix(h);
}

PureThreeQubitState::PureThreeQubitState(const std::array<cplx, 8>& amplitudes)
    : amplitudes_(amplitudes) {
  double n = 0.0;
  for (const auto& z : amplitudes_) n += std::norm(z);
  if (std::abs(n - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "squared norm " << n;
    throw Error(ErrorKind::NotNormalized, os.str());
  }
}

PureThreeQubitState PureThreeQubitState::normalized(std::array<cplx, 8> amplitudes) {
  double n = 0.0;
  for (const auto& z : amplitudes) n += std::norm(z);
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorKind::NotNormalized, "zero or non-finite vector");
  const double inv = 1.0 / std::sqrt(n);
  for (auto& z : amplitudes) z *= inv;
  return PureThreeQubitState(amplitudes);
}

namespace {

const std::array<ComplexMatrix2, 4>& pauli_table() {
  static const std::array<ComplexMatrix2, 4> table = [] {
    const cplx i(0.0, 1.0);
    std::array<ComplexMatrix2, 4> p;
    p[0] = ComplexMatrix2::identity();
    p[1](0, 1) = 1.0;
    p[1](1, 0) = 1.0;
    p[2](0, 1) = -i;
    p[2](1, 0) = i;
    p[3](0, 0) = 1.0;
    p[3](1, 1) = -1.0;
    return p;
  }();
  return table;
}

const std::array<ComplexMatrix4, 16>& pauli_product_table() {
  static const std::array<ComplexMatrix4, 16> table = [] {
    std::array<ComplexMatrix4, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[4 * i + j] = kron(pauli(i), pauli(j));
    return t;
  }();
  return table;
}

}  // namespace

const ComplexMatrix2& pauli(int index) { return pauli_table().at(static_cast<std::size_t>(index)); }

const ComplexMatrix4& pauli_product(int i, int j) {
  return pauli_product_table().at(static_cast<std::size_t>(4 * i + j));
}

ComplexMatrix2 pauli_dot(const Vec3& n) {
  ComplexMatrix2 m;
  for (int k = 0; k < 3; ++k) m += pauli(k + 1) * cplx(n[k]);
  return m;
}

BlochForm to_bloch(const DensityMatrix& rho) {
  BlochForm f;
  const auto& m = rho.matrix();
  for (int i = 1; i <= 3; ++i) {
    f.a[i - 1] = trace_product_real(m, pauli_product(i, 0));
    f.b[i - 1] = trace_product_real(m, pauli_product(0, i));
    for (int j = 1; j <= 3; ++j) f.t(i - 1, j - 1) = trace_product_real(m, pauli_product(i, j));
  }
  return f;
}

ComplexMatrix4 bloch_to_matrix(const BlochForm& f) {
  ComplexMatrix4 m = ComplexMatrix4::identity();
  for (int i = 1; i <= 3; ++i) {
    m += pauli_product(i, 0) * cplx(f.a[i - 1]);
    m += pauli_product(0, i) * cplx(f.b[i - 1]);
    for (int j = 1; j <= 3; ++j) m += pauli_product(i, j) * cplx(f.t(i - 1, j - 1));
  }
  m *= cplx(0.25);
  return m;
}

DensityMatrix from_bloch(const BlochForm& f) { return DensityMatrix::validate(bloch_to_matrix(f)); }

SpectrumReport spectrum_from_eigenvalues(const std::array<double, 4>& eigenvalues) {
  SpectrumReport r;
  r.eigenvalues = eigenvalues;
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), std::greater<>());
  for (std::size_t i = 0; i < 4; ++i) {
    r.purity += r.eigenvalues[i] * r.eigenvalues[i];
    for (std::size_t j = i + 1; j < 4; ++j) r.pairwise_sum += r.eigenvalues[i] * r.eigenvalues[j];
  }
  return r;
}

SpectrumReport spectrum_report(const DensityMatrix& rho) {
  const auto eig = hermitian_eigensystem(rho.matrix());
  auto values = eig.values;
  for (auto& x : values) x = std::max(0.0, x);
  return spectrum_from_eigenvalues(values);
}

double purity(const DensityMatrix& rho) {
  const double n = frobenius_norm(rho.matrix());
  return n * n;
}

namespace {

// Splits a three-qubit index into (kept-left, kept-right, traced) bit positions.
struct PairLayout {
  int left;
  int right;
  int traced;
};

PairLayout layout(QubitPair keep) {
  switch (keep) {
    case QubitPair::AB: return {0, 1, 2};
    case QubitPair::BC: return {1, 2, 0};
    case QubitPair::AC: return {0, 2, 1};
  }
  return {0, 1, 2};
}

std::size_t compose(const std::array<int, 3>& bits) {
  return static_cast<std::size_t>(4 * bits[0] + 2 * bits[1] + bits[2]);
}

}  // namespace

Qubit complement(QubitPair pair) {
  switch (pair) {
    case QubitPair::AB: return Qubit::C;
    case QubitPair::BC: return Qubit::A;
    case QubitPair::AC: return Qubit::B;
  }
  return Qubit::C;
}

DensityMatrix reduce_to_pair(const PureThreeQubitState& psi, QubitPair keep) {
  const auto lay = layout(keep);
  const auto& amp = psi.amplitudes();
  ComplexMatrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      cplx s = 0.0;
      for (int t = 0; t < 2; ++t) {
        std::array<int, 3> rb{}, cb{};
        rb[lay.left] = r >> 1;
        rb[lay.right] = r & 1;
        rb[lay.traced] = t;
        cb[lay.left] = c >> 1;
        cb[lay.right] = c & 1;
        cb[lay.traced] = t;
        s += amp[compose(rb)] * std::conj(amp[compose(cb)]);
      }
      m(r, c) = s;
    }
  }
  return DensityMatrix::validate(m);
}

ComplexMatrix2 reduce_to_single(const PureThreeQubitState& psi, Qubit which) {
  const int kept = static_cast<int>(which);
  const auto& amp = psi.amplitudes();
  ComplexMatrix2 m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      cplx s = 0.0;
      for (int rest = 0; rest < 4; ++rest) {
        std::array<int, 3> rb{}, cb{};
        int slot = 0;
        for (int q = 0; q < 3; ++q) {
          if (q == kept) continue;
          const int bit = (rest >> (1 - slot)) & 1;
          rb[q] = bit;
          cb[q] = bit;
          ++slot;
        }
        rb[kept] = r;
        cb[kept] = c;
        s += amp[compose(rb)] * std::conj(amp[compose(cb)]);
      }
      m(r, c) = s;
    }
  }
  return m;
}

double single_qubit_bloch_norm(const PureThreeQubitState& psi, Qubit which) {
  const auto m = reduce_to_single(psi, which);
  const double x = 2.0 * m(0, 1).real();
  const double y = -2.0 * m(0, 1).imag();
  const double z = (m(0, 0) - m(1, 1)).real();
  return std::min(1.0, std::sqrt(x * x + y * y + z * z));
}

const std::array<CVec4, 4>& bell_basis() {
  static const std::array<CVec4, 4> basis = [] {
    const double h = 1.0 / std::sqrt(2.0);
    return std::array<CVec4, 4>{
        CVec4{h, 0.0, 0.0, h},   // Phi+
        CVec4{h, 0.0, 0.0, -h},  // Phi-
        CVec4{0.0, h, h, 0.0},   // Psi+
        CVec4{0.0, h, -h, 0.0},  // Psi-
    };
  }();
  return basis;
}

DensityMatrix bell_projector(int index) {
  const auto& v = bell_basis().at(static_cast<std::size_t>(index));
  return DensityMatrix::validate(outer(v, v));
}

DensityMatrix maximally_mixed() { return DensityMatrix::validate(ComplexMatrix4::identity() * cplx(0.25)); }
DensityMatrix singlet() { return bell_projector(3); }

DensityMatrix product_00() {
  ComplexMatrix4 m;
  m(0, 0) = 1.0;
  return DensityMatrix::validate(m);
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix4& u) {
  return DensityMatrix::validate(u * rho.matrix() * adjoint(u));
}

DensityMatrix mix(const DensityMatrix& rho1, const DensityMatrix& rho2, double w) {
  return DensityMatrix::validate(rho1.matrix() * cplx(w) + rho2.matrix() * cplx(1.0 - w));
}

}  // namespace absteer
