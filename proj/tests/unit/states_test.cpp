#include "absteer/states.hpp"

#include <gtest/gtest.h>

#include "absteer/error.hpp"
#include "test_support.hpp"

namespace absteer {
namespace {

using testing::from_eigen;
using testing::to_eigen;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InternalInconsistency;
}

TEST(Validate, AcceptsMaximallyMixedAndPure) {
  EXPECT_NO_THROW(DensityMatrix::validate(ComplexMatrix4::identity() * cplx(0.25)));
  EXPECT_NO_THROW(DensityMatrix::validate(ComplexMatrix4::diagonal({1.0, 0.0, 0.0, 0.0})));
}

TEST(Validate, RejectsNegativeEigenvalue) {
  EXPECT_EQ(kind_of([] { DensityMatrix::validate(ComplexMatrix4::diagonal({1.5, -0.5, 0.0, 0.0})); }),
            ErrorKind::NotPositive);
}

TEST(Validate, RejectsWrongTrace) {
  EXPECT_EQ(kind_of([] { DensityMatrix::validate(ComplexMatrix4::identity() * cplx(0.3)); }),
            ErrorKind::NotUnitTrace);
}

TEST(Validate, RejectsNonHermitian) {
  EXPECT_EQ(kind_of([] {
              auto m = ComplexMatrix4::identity() * cplx(0.25);
              m(0, 1) = cplx(0.0, 0.1);
              DensityMatrix::validate(m);
            }),
            ErrorKind::NotHermitian);
}

TEST(Validate, ClampsRoundOffNegatives) {
  const auto rho = DensityMatrix::validate(ComplexMatrix4::diagonal({1.0 + 5e-11, -5e-11, 0.0, 0.0}));
  const auto es = hermitian_eigensystem(rho.matrix());
  EXPECT_GE(es.values[3], 0.0);
  EXPECT_NEAR(trace(rho.matrix()).real(), 1.0, 1e-15);
}

TEST(ToBloch, MaximallyMixedIsZero) {
  const auto f = to_bloch(maximally_mixed());
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(f.a[static_cast<std::size_t>(i)], 0.0);
    EXPECT_EQ(f.b[static_cast<std::size_t>(i)], 0.0);
  }
  EXPECT_EQ(frobenius_norm(f.t), 0.0);
}

TEST(ToBloch, SingletMatchesDirectTraces) {
  const auto f = to_bloch(singlet());
  const auto ref = testing::ref_correlation(testing::ref_singlet());
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(f.a[i], 0.0, 1e-15);
    EXPECT_NEAR(f.b[i], 0.0, 1e-15);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(f.t(i, j), i == j ? -1.0 : 0.0, 1e-15);
      EXPECT_NEAR(f.t(i, j), ref(static_cast<int>(i), static_cast<int>(j)), 1e-15);
    }
  }
}

TEST(ToBloch, WernerIsMinusPIdentity) {
  for (double p : {0.0, 0.3, 0.6, 1.0}) {
    const auto rho = DensityMatrix::validate(from_eigen(testing::ref_werner(p)));
    const auto f = to_bloch(rho);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(f.t(i, j), i == j ? -p : 0.0, 1e-15);
  }
}

TEST(ToBloch, PauliConventionSigns) {
  // |0+> has a = z, b = x; |0,+i> has b = y, fixing the sign of the Y matrix.
  const double h = 1.0 / std::sqrt(2.0);
  const CVec4 plus{h, h, 0.0, 0.0};
  const CVec4 plus_i{h, cplx(0.0, h), 0.0, 0.0};
  const auto f1 = to_bloch(DensityMatrix::validate(outer(plus, plus)));
  EXPECT_NEAR(f1.a[2], 1.0, 1e-15);
  EXPECT_NEAR(f1.b[0], 1.0, 1e-15);
  const auto f2 = to_bloch(DensityMatrix::validate(outer(plus_i, plus_i)));
  EXPECT_NEAR(f2.b[1], 1.0, 1e-15);
}

TEST(FromBloch, Examples) {
  EXPECT_LT(max_abs_diff(from_bloch(BlochForm{}).matrix(), ComplexMatrix4::identity() * cplx(0.25)), 1e-15);

  BlochForm s;
  s.t = RealMatrix3::diagonal({-1.0, -1.0, -1.0});
  EXPECT_LT(max_abs_diff(from_bloch(s).matrix(), from_eigen(testing::ref_singlet())), 1e-15);

  BlochForm bad;
  bad.a = {0.0, 0.0, 2.0};
  EXPECT_EQ(kind_of([&] { from_bloch(bad); }), ErrorKind::NotPositive);
}

TEST(Bloch, RoundTripAndPurityIdentity) {
  SeededGenerator g(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rho = random_state(g);
    const auto f = to_bloch(rho);
    ASSERT_LE(norm(f.a), 1.0 + 1e-9);
    ASSERT_LE(norm(f.b), 1.0 + 1e-9);
    ASSERT_LT(max_abs_diff(from_bloch(f).matrix(), rho.matrix()), 1e-10);
    const double tn = frobenius_norm(f.t);
    const double bloch_purity = 0.25 * (1.0 + dot(f.a, f.a) + dot(f.b, f.b) + tn * tn);
    ASSERT_NEAR(bloch_purity, purity(rho), 1e-10);
  }
}

TEST(SpectrumReport, Examples) {
  const auto mm = spectrum_report(maximally_mixed());
  for (double x : mm.eigenvalues) EXPECT_NEAR(x, 0.25, 1e-15);
  EXPECT_NEAR(mm.purity, 0.25, 1e-15);

  for (double theta : {0.1, 0.7853981633974483, 1.4}) {
    const auto rho = DensityMatrix::validate(from_eigen(testing::ref_gisin(2.0 / 3.0, theta)));
    const auto r = spectrum_report(rho);
    const std::array<double, 4> expected{2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 0.0};
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(r.eigenvalues[k], expected[k], 1e-12);
    EXPECT_NEAR(r.purity, 0.5, 1e-12);
  }

  EXPECT_NEAR(spectrum_report(product_00()).purity, 1.0, 1e-15);
}

TEST(SpectrumReport, InvariantsOnRandomStates) {
  SeededGenerator g(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rho = random_state(g);
    const auto r = spectrum_report(rho);
    double sum = 0.0;
    for (double x : r.eigenvalues) sum += x;
    ASSERT_NEAR(sum, 1.0, 1e-10);
    ASSERT_GE(r.purity, 0.25 - 1e-12);
    ASSERT_LE(r.purity, 1.0 + 1e-12);
    ASSERT_NEAR(2.0 * r.pairwise_sum, 1.0 - r.purity, 1e-10);
    ASSERT_NEAR(r.purity, purity(rho), 1e-10);
  }
}

TEST(PureThreeQubit, RejectsUnnormalized) {
  EXPECT_EQ(kind_of([] { PureThreeQubitState({1, 1, 0, 0, 0, 0, 0, 0}); }), ErrorKind::NotNormalized);
  EXPECT_EQ(kind_of([] { PureThreeQubitState::normalized({}); }), ErrorKind::NotNormalized);
}

TEST(ReduceToPair, Ghz) {
  const double h = 1.0 / std::sqrt(2.0);
  const PureThreeQubitState ghz({h, 0, 0, 0, 0, 0, 0, h});
  const auto ab = reduce_to_pair(ghz, QubitPair::AB);
  EXPECT_LT(max_abs_diff(ab.matrix(), ComplexMatrix4::diagonal({0.5, 0.0, 0.0, 0.5})), 1e-15);
  EXPECT_NEAR(single_qubit_bloch_norm(ghz, Qubit::C), 0.0, 1e-15);
}

TEST(ReduceToPair, Product) {
  const PureThreeQubitState p({1, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_LT(max_abs_diff(reduce_to_pair(p, QubitPair::AB).matrix(), product_00().matrix()), 1e-15);
  EXPECT_NEAR(single_qubit_bloch_norm(p, Qubit::C), 1.0, 1e-15);
}

TEST(ReduceToPair, WState) {
  const double t = 1.0 / std::sqrt(3.0);
  const auto w = PureThreeQubitState::normalized({0, t, t, 0, t, 0, 0, 0});
  const auto r = spectrum_report(reduce_to_pair(w, QubitPair::AB));
  const std::array<double, 4> expected{2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(r.eigenvalues[k], expected[k], 1e-12);
  EXPECT_NEAR(single_qubit_bloch_norm(w, Qubit::C), 1.0 / 3.0, 1e-12);
}

TEST(ReduceToPair, MatchesBruteForcePartialTrace) {
  SeededGenerator g(17);
  const std::array<std::pair<QubitPair, int>, 3> cases{
      {{QubitPair::AB, 2}, {QubitPair::BC, 0}, {QubitPair::AC, 1}}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = random_pure_three_qubit(g);
    for (const auto& [pair, traced] : cases) {
      // Rank-deficient reductions go through the clamp-and-rebuild path of validate.
      const auto ref = testing::ref_partial_trace(psi.amplitudes(), traced);
      ASSERT_LT(max_abs_diff(reduce_to_pair(psi, pair).matrix(), from_eigen(ref)), 1e-12);
    }
  }
}

TEST(ReduceToPair, SpectrumFollowsComplementBlochLength) {
  SeededGenerator g(23);
  for (int trial = 0; trial < 500; ++trial) {
    const auto psi = random_pure_three_qubit(g);
    for (auto pair : {QubitPair::AB, QubitPair::BC, QubitPair::AC}) {
      const double l = single_qubit_bloch_norm(psi, complement(pair));
      ASSERT_GE(l, 0.0);
      ASSERT_LE(l, 1.0);
      const auto r = spectrum_report(reduce_to_pair(psi, pair));
      const std::array<double, 4> expected{(1 + l) / 2, (1 - l) / 2, 0.0, 0.0};
      for (std::size_t k = 0; k < 4; ++k) ASSERT_NEAR(r.eigenvalues[k], expected[k], 1e-9);
    }
  }
}

TEST(BellBasis, OrthonormalAndSingletIsPsiMinus) {
  const auto& b = bell_basis();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      cplx ip = 0.0;
      for (std::size_t k = 0; k < 4; ++k) ip += std::conj(b[i][k]) * b[j][k];
      EXPECT_NEAR(std::abs(ip), i == j ? 1.0 : 0.0, 1e-15);
    }
  EXPECT_LT(max_abs_diff(singlet().matrix(), from_eigen(testing::ref_singlet())), 1e-15);
}

}  // namespace
}  // namespace absteer
