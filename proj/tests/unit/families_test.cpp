#include "absteer/families.hpp"

#include <gtest/gtest.h>

#include "absteer/error.hpp"
#include "test_support.hpp"

namespace absteer {
namespace {

using testing::from_eigen;

const double kPi = 3.14159265358979323846;

TEST(Werner, MatchesReference) {
  for (double p : {0.0, 0.3, 0.5, 1.0})
    EXPECT_LT(max_abs_diff(werner(p).matrix(), from_eigen(testing::ref_werner(p))), 1e-15);
  EXPECT_THROW(werner(-0.1), Error);
  EXPECT_THROW(werner(1.1), Error);
}

TEST(Werner, ClosedFormEigenvalues) {
  for (double p = 0.0; p <= 1.0; p += 0.01) {
    const auto r = spectrum_report(werner(p));
    EXPECT_NEAR(r.eigenvalues[0], (1 + 3 * p) / 4, 1e-12);
    for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(r.eigenvalues[k], (1 - p) / 4, 1e-12);
  }
}

TEST(Gisin, MatchesReference) {
  for (double lambda : {0.0, 0.4, 2.0 / 3.0, 1.0})
    for (double theta : {0.1, kPi / 4, 1.4})
      EXPECT_LT(max_abs_diff(gisin(lambda, theta).matrix(), from_eigen(testing::ref_gisin(lambda, theta))), 1e-15);
  EXPECT_THROW(gisin(0.5, 0.0), Error);
  EXPECT_THROW(gisin(0.5, kPi / 2), Error);
  EXPECT_THROW(gisin(1.5, 0.3), Error);
}

TEST(Gisin, SpectrumIndependentOfTheta) {
  for (double lambda = 0.0; lambda <= 1.0; lambda += 0.05) {
    const auto ref = spectrum_report(gisin(lambda, kPi / 4));
    for (double theta : {0.05, 0.3, 1.0, 1.5}) {
      const auto r = spectrum_report(gisin(lambda, theta));
      for (std::size_t k = 0; k < 4; ++k) ASSERT_NEAR(r.eigenvalues[k], ref.eigenvalues[k], 1e-12);
    }
    std::array<double, 4> expected{lambda, (1 - lambda) / 2, (1 - lambda) / 2, 0.0};
    std::sort(expected.begin(), expected.end(), std::greater<>());
    for (std::size_t k = 0; k < 4; ++k) ASSERT_NEAR(ref.eigenvalues[k], expected[k], 1e-12);
  }
}

TEST(XState, Examples) {
  const auto rho = x_state({0.25, 0.25, 0.25, 0.25, 0.0, 0.0});
  EXPECT_LT(max_abs_diff(rho.matrix(), maximally_mixed().matrix()), 1e-15);
  EXPECT_TRUE(x_state_in_aus3({0.25, 0.25, 0.25, 0.25, 0.0, 0.0}));

  // Singlet as an X state.
  const auto s = x_state({0.0, 0.5, 0.5, 0.0, 0.0, -0.5});
  EXPECT_LT(max_abs_diff(s.matrix(), singlet().matrix()), 1e-15);
  EXPECT_FALSE(x_state_in_aus3({0.0, 0.5, 0.5, 0.0, 0.0, -0.5}));
}

TEST(XState, ConstraintErrors) {
  EXPECT_THROW(x_state({0.5, 0.5, 0.5, 0.5, 0.0, 0.0}), Error);
  EXPECT_THROW(x_state({-0.1, 0.4, 0.4, 0.3, 0.0, 0.0}), Error);
  EXPECT_THROW(x_state({0.25, 0.25, 0.25, 0.25, 0.3, 0.0}), Error);
  EXPECT_THROW(x_state({0.25, 0.25, 0.25, 0.25, 0.0, 0.3}), Error);
}

TEST(XState, ClosedFormAgreesWithDecision) {
  SeededGenerator g(61);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<double, 6> v{};
    double s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) s += (v[k] = g.uniform());
    for (std::size_t k = 0; k < 4; ++k) v[k] /= s;
    v[4] = (2 * g.uniform() - 1) * std::sqrt(v[0] * v[3]);
    v[5] = (2 * g.uniform() - 1) * std::sqrt(v[1] * v[2]);
    ASSERT_EQ(x_state_in_aus3(v), decide_aus3(x_state(v)).in_aus3);
  }
}

TEST(ScanGrid, Points) {
  EXPECT_EQ((ScanGrid{0.0, 1.0, 0.001}).points().size(), 1001u);
  const auto one = (ScanGrid{0.3, 0.3, 0.1}).points();
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], 0.3);
  EXPECT_THROW((ScanGrid{0.5, 0.4, 0.1}).points(), Error);
  EXPECT_THROW((ScanGrid{0.0, 1.0, 0.0}).points(), Error);
  EXPECT_THROW((ScanGrid{0.0, 1.0, -0.1}).points(), Error);
}

TEST(ScanFamily, WernerThreshold) {
  const auto r = scan_family(Family::Werner, {0.0, 1.0, 0.001});
  ASSERT_EQ(r.thresholds.size(), 1u);
  EXPECT_NEAR(*r.threshold(), 1.0 / std::sqrt(3.0), 1e-9);
  EXPECT_EQ(r.points.size(), 1001u);
  for (const auto& pt : r.points) EXPECT_EQ(pt.verdict.in_aus3, pt.parameter <= 1.0 / std::sqrt(3.0));
}

TEST(ScanFamily, GisinThresholdForSeveralAngles) {
  for (double theta : {0.1, kPi / 4, 1.4}) {
    ScanOptions o;
    o.theta = theta;
    const auto r = scan_family(Family::Gisin, {0.0, 1.0, 0.001}, o);
    ASSERT_TRUE(r.threshold().has_value());
    EXPECT_NEAR(r.thresholds.back(), 2.0 / 3.0, 1e-9);
  }
}

TEST(ScanFamily, FlagMonotoneAlongWerner) {
  const auto r = scan_family(Family::Werner, {0.0, 1.0, 0.01});
  bool seen_out = false;
  for (const auto& pt : r.points) {
    if (!pt.verdict.in_aus3) seen_out = true;
    if (seen_out) EXPECT_FALSE(pt.verdict.in_aus3);
  }
}

TEST(ScanFamily, SinglePointAndNoCrossing) {
  const auto r = scan_family(Family::Werner, {0.2, 0.2, 0.1});
  EXPECT_EQ(r.points.size(), 1u);
  EXPECT_FALSE(r.threshold().has_value());
}

TEST(ScanFamily, WorkerCountDoesNotMatter) {
  ScanOptions one, many;
  one.workers = 1;
  many.workers = 8;
  const auto a = scan_family(Family::Werner, {0.0, 1.0, 0.01}, one);
  const auto b = scan_family(Family::Werner, {0.0, 1.0, 0.01}, many);
  EXPECT_EQ(a.thresholds, b.thresholds);
  for (std::size_t k = 0; k < a.points.size(); ++k)
    EXPECT_EQ(a.points[k].verdict.f3_global_max, b.points[k].verdict.f3_global_max);
}

TEST(ScanFamily, RejectsXState) { EXPECT_THROW(scan_family(Family::XState, {0.0, 1.0, 0.1}), Error); }

TEST(FamilyNames, RoundTrip) {
  for (auto f : {Family::Werner, Family::Gisin, Family::XState}) EXPECT_EQ(family_from_string(to_string(f)), f);
  EXPECT_THROW(family_from_string("bell"), Error);
}

TEST(ThreeQubit, Named) {
  EXPECT_NEAR(std::abs(ghz_state().amplitudes()[0]), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(w_state().amplitudes()[1]), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_EQ(product_000().amplitudes()[0], cplx(1.0));
}

}  // namespace
}  // namespace absteer
