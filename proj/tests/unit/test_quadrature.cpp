#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bandedge/errors.hpp"
#include "bandedge/quadrature.hpp"

using namespace bandedge;
using namespace bandedge::specfun;

TEST(OscillatoryQuad, ExponentialAtZeroFrequency) {
  const auto r = oscillatory_halfline_quad([](double x) { return std::exp(-x); }, 0.0, 1e-12);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-15);
  EXPECT_TRUE(r.accuracy_reached);
  EXPECT_GT(r.evaluations, 0u);
  EXPECT_GE(r.abs_error_estimate, 0.0);
}

TEST(OscillatoryQuad, ExponentialAtUnitFrequency) {
  const auto r = oscillatory_halfline_quad([](double x) { return std::exp(-x); }, 1.0, 1e-12);
  EXPECT_LT(std::abs(r.value - Complex{0.5, -0.5}), 1e-11);
}

TEST(OscillatoryQuad, BandEdgeProfileTotalWeight) {
  // ∫ 2A√x/(1+x²) dx = π√2 A, the constant term of the quartic.
  const double A = 0.8;
  const auto r = oscillatory_halfline_quad([A](double x) { return 2 * A * std::sqrt(x) / (1 + x * x); }, 0.0, 1e-12);
  EXPECT_NEAR(r.value.real(), std::numbers::pi * std::sqrt(2.0) * A, 1e-10);
  EXPECT_NEAR(r.value.real(), 3.5543063505, 1e-9);
}

TEST(OscillatoryQuad, SlowAlgebraicTailWithOscillation) {
  // ∫ e^{-ixτ} /(1+x)^{3/2}: tail only x^{-3/2}; compare conjugate symmetry and a
  // brute-force head+tail split.
  auto P = [](double x) { return std::pow(1.0 + x, -1.5); };
  const auto r = oscillatory_halfline_quad(P, 2.0, 1e-11);
  const auto head = integrate([&](double x) { return P(x) * std::exp(Complex{0.0, -2.0 * x}); }, 0.0, 2000.0, 1e-12,
                              200000);
  // Remaining tail beyond 2000 is bounded by 2 P(2000)/τ.
  EXPECT_LT(std::abs(r.value - head.value), 2 * P(2000.0) / 2.0 + 1e-10);
  EXPECT_TRUE(r.accuracy_reached);
}

TEST(OscillatoryQuad, HermitianSymmetry) {
  auto P = [](double x) { return std::sqrt(x) / (1 + x * x); };
  for (double tau : {0.3, 1.0, 7.5, 40.0}) {
    const auto plus = oscillatory_halfline_quad(P, tau, 1e-12);
    const auto minus = oscillatory_halfline_quad(P, -tau, 1e-12);
    EXPECT_LE(std::abs(std::conj(plus.value) - minus.value), plus.abs_error_estimate + minus.abs_error_estimate + 1e-14)
        << tau;
  }
}

TEST(OscillatoryQuad, KnownFourierTransform) {
  // ∫ e^{-x²} e^{-ixτ} dx over x >= 0 has real part (√π/2) e^{-τ²/4}.
  for (double tau : {0.5, 3.0}) {
    const auto r = oscillatory_halfline_quad([](double x) { return std::exp(-x * x); }, tau, 1e-13);
    EXPECT_NEAR(r.value.real(), 0.5 * std::sqrt(std::numbers::pi) * std::exp(-tau * tau / 4), 1e-12);
  }
}

TEST(OscillatoryQuad, NonIntegrableProfileIsRejected) {
  EXPECT_THROW(oscillatory_halfline_quad([](double x) { return 1.0 / (1.0 + x); }, 0.0, 1e-10), ConvergenceError);
}

TEST(OscillatoryQuad, Deterministic) {
  auto P = [](double x) { return std::sqrt(x) / (1 + x * x); };
  const auto a = oscillatory_halfline_quad(P, 3.3, 1e-11);
  const auto b = oscillatory_halfline_quad(P, 3.3, 1e-11);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Integrate, PolynomialIsExact) {
  const auto r = integrate([](double x) { return Complex{x * x * x, 1.0}; }, 0.0, 2.0, 1e-14);
  EXPECT_NEAR(r.value.real(), 4.0, 1e-13);
  EXPECT_NEAR(r.value.imag(), 2.0, 1e-13);
}

TEST(Integrate, ErrorEstimateBoundsActualError) {
  const auto r = integrate([](double x) { return Complex{1.0 / std::sqrt(x + 1e-4), 0.0}; }, 0.0, 1.0, 1e-9);
  const double exact = 2.0 * (std::sqrt(1.0 + 1e-4) - std::sqrt(1e-4));
  EXPECT_LE(std::abs(r.value.real() - exact), std::max(r.abs_error_estimate, 1e-13));
  EXPECT_LE(r.abs_error_estimate, 1e-9);
}

TEST(Integrate, BudgetExhaustionIsFlagged) {
  const auto r = integrate([](double x) { return Complex{std::sin(1.0 / (x + 1e-6)), 0.0}; }, 0.0, 1.0, 1e-14, 20);
  EXPECT_FALSE(r.accuracy_reached);
}

TEST(IntegrateHalfline, EdgeAndTail) {
  // ∫ √x e^{-x} = √π/2 ; ∫ 1/(1+x)^2 = 1
  const double bp[] = {1.0, 10.0};
  const auto a = integrate_halfline([](double x) { return Complex{std::sqrt(x) * std::exp(-x), 0.0}; }, bp, 1e-12);
  EXPECT_NEAR(a.value.real(), 0.5 * std::sqrt(std::numbers::pi), 1e-11);
  const auto b = integrate_halfline([](double x) { return Complex{1.0 / ((1 + x) * (1 + x)), 0.0}; }, bp, 1e-12);
  EXPECT_NEAR(b.value.real(), 1.0, 1e-11);
}
