#pragma once

// Two numerical routes to G(t) that do not use the closed form: time marching
// of Ġ = -(f * G), G(0) = 1, and numerical inversion of G̃(u).

#include <functional>
#include <vector>

#include "bandedge/quadrature.hpp"
#include "bandedge/reservoir.hpp"
#include "bandedge/types.hpp"

namespace bandedge::oracle {

/// Memory kernel f(τ), τ >= 0, evaluated to the requested absolute tolerance.
using Kernel = std::function<specfun::QuadratureResult(double tau, double tol)>;

Kernel special_kernel(const SpecialReservoir& r);
Kernel profile_kernel(const ShiftedProfile& profile);
Kernel lorentzian_kernel(const LorentzianReservoir& r);
/// f ≡ Ω², for which G(t) = cos(Ωt).
Kernel constant_kernel(double omega_squared);

struct VolterraConfig {
  double step = 1e-3;
  double horizon = 10.0;
  double kernel_tol = 1e-10;

  /// Throws DomainError unless step > 0, horizon > 0, step <= horizon/100 and
  /// kernel_tol > 0.
  void validate() const;
};

struct VolterraSolution {
  std::vector<double> times;
  std::vector<Complex> values;
  /// |G_h - G_{2h}| / (2^{3/2} - 1) at each grid point (the coarse solution
  /// uses every other kernel sample); odd points take the larger neighbouring
  /// estimate. The exponent is the order seen with a √τ kink in f at 0;
  /// smooth kernels converge at order 2 and get a conservative estimate.
  std::vector<double> error_estimates;
  /// False when any kernel sample missed kernel_tol.
  bool kernel_accuracy_reached = true;

  /// Linear interpolation between grid points.
  Complex at(double t) const;
};

/// Implicit trapezoidal marching with a trapezoidal convolution sum; the
/// kernel is sampled once per grid offset. Throws InstabilityError if |G|
/// exceeds 10.
VolterraSolution volterra_solve(const Kernel& kernel, const VolterraConfig& cfg);

/// Largest node count used; beyond it cancellation on the contour costs more
/// than the discretisation gains.
inline constexpr int kMaxContourNodes = 112;

struct InversionConfig {
  int contour_nodes = 32;
  double shift = 0.2;
  /// Bound on |Im u| over singularities off the negative real axis. Zero
  /// when there are none.
  double max_frequency = 0.0;

  /// Throws DomainError unless contour_nodes >= 16 and even, shift > 0 and
  /// max_frequency >= 0.
  void validate() const;
};

struct InversionResult {
  Complex value;
  /// |I_N - I_{N-8}|; bounds the error of the coarser evaluation.
  double error_estimate;
  /// error_estimate <= 1e-6 max(1, |value|)
  bool accuracy_reached;
};

using Transform = std::function<Complex(Complex)>;

/// Inverse Laplace transform at t > 0 by the trapezoidal rule on the shifted
/// cotangent contour
///   u(θ) = σ + (N/t)(-0.6122 + 0.5017 θ cot(0.6407 θ) + 0.2645 i θ),  θ ∈ (-π, π),
/// which wraps the negative real axis without touching it. σ must exceed the
/// real part of every singularity off the cut; it is lowered to 2/t at large t.
/// N grows with max_frequency · t so that the contour still encloses complex
/// poles; when that would need more than kMaxContourNodes the result carries an
/// infinite error estimate.
InversionResult laplace_invert(const Transform& transform, double t, const InversionConfig& cfg = {});

}  // namespace bandedge::oracle
