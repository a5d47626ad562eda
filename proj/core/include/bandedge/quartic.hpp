#pragma once

#include <array>

#include "bandedge/types.hpp"

namespace bandedge::specfun {

struct QuarticRoots {
  /// Sorted by argument in (-π, π], ties broken by modulus.
  std::array<Complex, 4> roots;
  /// max_l |Q(z_l)|
  double max_residual = 0.0;
  /// Set when the smallest pairwise distance is below 1e-6 max|z_l|.
  bool near_multiple = false;
  /// True when the companion-matrix fallback produced the roots.
  bool used_fallback = false;
  int iterations = 0;
};

/// Roots of z^4 + c3 z^3 + c2 z^2 + c1 z + c0.
///
/// Simultaneous (Durand-Kerner) iteration from deterministic starting points on
/// the circle of radius 1 + max|c_k|, Newton polishing, and an eigenvalue
/// fallback on the companion matrix. Throws ConvergenceError when neither route
/// reaches the residual bound 1e-10 max(1, |c0|) (relaxed to the rounding
/// level of the evaluation when that is larger).
QuarticRoots quartic_roots(Complex c0, Complex c1, Complex c2, Complex c3);

/// Horner evaluation of the monic quartic.
Complex eval_quartic(Complex z, Complex c0, Complex c1, Complex c2, Complex c3) noexcept;

}  // namespace bandedge::specfun
