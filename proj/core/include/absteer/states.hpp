#pragma once

#include <array>

#include "absteer/numlin.hpp"

namespace absteer {

/// Two-qubit state: Hermitian, unit trace, positive semidefinite.
///
/// The only way to obtain one is through validate(), so every DensityMatrix in
/// the program has passed the checks. Basis order is |00>,|01>,|10>,|11> with
/// qubit A the left tensor factor.
class DensityMatrix {
 public:
  /// Accepts matrices whose eigenvalues dip no lower than -POSITIVITY_TOL;
  /// such small negatives are clamped to zero and the state renormalized.
  static DensityMatrix validate(const ComplexMatrix4& m);

  const ComplexMatrix4& matrix() const noexcept { return matrix_; }
  cplx operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

 private:
  explicit DensityMatrix(const ComplexMatrix4& m) : matrix_(m) {}
  ComplexMatrix4 matrix_;
};

inline constexpr double TRACE_TOL = 1e-10;
inline constexpr double POSITIVITY_TOL = 1e-10;

/// Hilbert-Schmidt (Bloch) coordinates:
///   rho = 1/4 (I + a.s (x) I + I (x) b.s + sum_ij T_ij s_i (x) s_j)
struct BlochForm {
  Vec3 a{};
  Vec3 b{};
  RealMatrix3 t{};
};

struct SpectrumReport {
  std::array<double, 4> eigenvalues{};  // descending
  double purity = 0.0;
  double pairwise_sum = 0.0;  // sum_{i<j} x_i x_j
};

enum class QubitPair { AB, BC, AC };
enum class Qubit { A, B, C };

/// Normalized 8-amplitude pure state, index 4a + 2b + c.
class PureThreeQubitState {
 public:
  /// Throws NotNormalized unless sum |amp|^2 = 1 within 1e-12.
  explicit PureThreeQubitState(const std::array<cplx, 8>& amplitudes);
  /// Rescales to unit norm; throws NotNormalized on the zero vector.
  static PureThreeQubitState normalized(std::array<cplx, 8> amplitudes);

  const std::array<cplx, 8>& amplitudes() const noexcept { return amplitudes_; }
  cplx operator()(int a, int b, int c) const { return amplitudes_[4 * a + 2 * b + c]; }

 private:
  std::array<cplx, 8> amplitudes_;
};

// Pauli matrices, index 0 = identity, 1..3 = X, Y, Z.
const ComplexMatrix2& pauli(int index);
/// Two-qubit product s_i (x) s_j with 0 meaning identity.
const ComplexMatrix4& pauli_product(int i, int j);
/// n.s = n_x X + n_y Y + n_z Z.
ComplexMatrix2 pauli_dot(const Vec3& n);

BlochForm to_bloch(const DensityMatrix& rho);
ComplexMatrix4 bloch_to_matrix(const BlochForm& f);
DensityMatrix from_bloch(const BlochForm& f);

SpectrumReport spectrum_report(const DensityMatrix& rho);
SpectrumReport spectrum_from_eigenvalues(const std::array<double, 4>& eigenvalues);

/// Tr rho^2 as the squared Frobenius norm.
double purity(const DensityMatrix& rho);

DensityMatrix reduce_to_pair(const PureThreeQubitState& psi, QubitPair keep);
ComplexMatrix2 reduce_to_single(const PureThreeQubitState& psi, Qubit which);
double single_qubit_bloch_norm(const PureThreeQubitState& psi, Qubit which);

/// The qubit traced out when keeping `pair`.
Qubit complement(QubitPair pair);

// Bell basis, fixed order {Phi+, Phi-, Psi+, Psi-}.
const std::array<CVec4, 4>& bell_basis();
DensityMatrix bell_projector(int index);

DensityMatrix maximally_mixed();
DensityMatrix singlet();
DensityMatrix product_00();

/// U rho U^H for a unitary U (not re-checked).
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix4& u);
/// w rho1 + (1 - w) rho2.
DensityMatrix mix(const DensityMatrix& rho1, const DensityMatrix& rho2, double w);

}  // namespace absteer
