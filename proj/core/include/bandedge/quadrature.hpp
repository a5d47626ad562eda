#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "bandedge/types.hpp"

namespace bandedge::specfun {

struct QuadratureResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  /// False when the requested tolerance could not be met within the budget.
  /// The value is still the best available estimate.
  bool accuracy_reached = true;
};

using RealFunction = std::function<double(double)>;
using ComplexIntegrand = std::function<Complex(double)>;

struct QuadratureOptions {
  /// Characteristic width of the integrand (where its structure lives). Used
  /// to place the split between the edge, body and tail regions.
  double scale = 1.0;
  std::size_t max_panels = 20000;
  /// Upper bound on the number of half-period tail panels fed to the
  /// extrapolation.
  std::size_t max_tail_cycles = 4000;
};

/// Globally adaptive Gauss-Legendre quadrature of f over [lo, hi].
///
/// Each panel is integrated with a 10-point rule and with the same rule on its
/// two halves; the difference is the panel error. The panel with the largest
/// error is split until the sum of errors is below tol.
QuadratureResult integrate(const ComplexIntegrand& f, double lo, double hi, double tol,
                           std::size_t max_panels = 20000);

/// Same as integrate() with the initial partition given by breakpoints
/// (which must be increasing and include both ends).
QuadratureResult integrate(const ComplexIntegrand& f, std::span<const double> breakpoints,
                           double tol, std::size_t max_panels = 20000);

/// ∫_0^∞ f(x) dx for non-oscillatory f.
///
/// [0, b_0] is integrated after x = u^2 (absorbs an x^{1/2} edge),
/// [b_0, b_last] on the given breakpoints, and [b_last, ∞) after
/// x = b_last / v^2 (integrable tails decaying at least like x^{-1-δ}).
/// breakpoints must be positive and increasing; at least one is required.
QuadratureResult integrate_halfline(const ComplexIntegrand& f, std::span<const double> breakpoints,
                                    double tol, std::size_t max_panels = 20000);

/// ∫_0^∞ P(x) e^{-i x τ} dx for a real, integrable profile P.
///
/// P may have an x^{1/2} edge at 0. For τ = 0 this is integrate_halfline.
/// For τ != 0 the head [0, X0] is split into panels no wider than π/(4|τ|)
/// (the first one after x = u^2), and the tail is summed as a sequence of
/// half-period integrals whose partial sums are accelerated with Wynn's
/// epsilon algorithm. Throws ConvergenceError when the tail panels fail to
/// decrease (non-integrable P).
QuadratureResult oscillatory_halfline_quad(const RealFunction& profile, double frequency,
                                           double tol, const QuadratureOptions& opts = {});

}  // namespace bandedge::specfun
