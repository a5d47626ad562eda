#pragma once

// Spectral densities, bath correlation functions and the Laplace-domain
// propagator for the band-edge reservoir and the Lorentzian comparison model.
//
// Profiles are written in the detuning x = ω - ω₀.

#include <functional>

#include "bandedge/quadrature.hpp"
#include "bandedge/types.hpp"

namespace bandedge {

/// J(ω) = 2A (ω-ω₀)^{1/2} / (a² + (ω-ω₀)²) for ω > ω₀, zero below the edge.
class SpecialReservoir {
 public:
  /// Throws DomainError unless all three parameters are positive and finite.
  SpecialReservoir(double amplitude, double width, double omega0);

  /// A, in frequency^{5/2}.
  double amplitude() const noexcept { return amplitude_; }
  /// a, in frequency.
  double width() const noexcept { return width_; }
  double omega0() const noexcept { return omega0_; }

  /// The detuning profile Λ(x) = J(ω₀ + x).
  double profile(double detuning) const noexcept;

 private:
  double amplitude_;
  double width_;
  double omega0_;
};

enum class CouplingRegime { weak, strong, critical };

const char* to_string(CouplingRegime regime) noexcept;

/// Damped Jaynes-Cummings reservoir with J_L(ω) = γλ² / (2π((ω-ω₀)² + λ²)).
class LorentzianReservoir {
 public:
  LorentzianReservoir(double gamma, double lambda, double omega0);

  /// Build from the reservoir correlation time τ_B = 1/λ and the relaxation
  /// time τ_R = 1/γ.
  static LorentzianReservoir from_times(double tau_B, double tau_R, double omega0);

  /// γ = 1/τ_R
  double decay_rate() const noexcept { return gamma_; }
  /// λ = 1/τ_B
  double spectral_width() const noexcept { return lambda_; }
  double omega0() const noexcept { return omega0_; }

  /// weak iff λ > 2γ, strong iff λ < 2γ; critical when |λ - 2γ| <= 1e-12 λ.
  CouplingRegime regime() const noexcept;

  /// Λ(x) = J_L(ω₀ + x), defined for all real x.
  double profile(double detuning) const noexcept;

 private:
  double gamma_;
  double lambda_;
  double omega0_;
};

/// A non-negative, integrable spectral profile on x >= 0.
class ShiftedProfile {
 public:
  /// Checks Λ >= 0 on a sampling grid and that ∫Λ converges to 1e-8 relative;
  /// throws DomainError otherwise. scale is the width on which Λ varies.
  ShiftedProfile(std::function<double(double)> profile, double scale = 1.0);

  static ShiftedProfile special(const SpecialReservoir& r);
  /// The profile Λ ≡ 0 (no coupling).
  static ShiftedProfile zero();

  double operator()(double detuning) const { return profile_(detuning); }
  double scale() const noexcept { return scale_; }
  /// ∫_0^∞ Λ(x) dx
  double integral() const noexcept { return integral_; }

 private:
  ShiftedProfile(std::function<double(double)> profile, double scale, double integral);

  std::function<double(double)> profile_;
  double scale_;
  double integral_;
};

struct SpectralPeak {
  double omega;
  double value;
};

/// J(ω) for the special reservoir. Throws DomainError for ω < 0 or NaN.
double spectral_density(const SpecialReservoir& r, double omega);

/// Location and height of the absolute maximum of J:
/// (ω₀ + a/√3, 3^{3/4} A / (2 a^{3/2})).
SpectralPeak spectral_peak(const SpecialReservoir& r) noexcept;

/// f(τ) = ∫_0^∞ Λ(x) e^{-ixτ} dx by oscillatory quadrature.
specfun::QuadratureResult correlation_function(const ShiftedProfile& profile, double tau, double tol);
specfun::QuadratureResult correlation_function(const SpecialReservoir& r, double tau, double tol);

/// f_L(τ) = (γλ/2) e^{-λ|τ|}
double lorentzian_correlation(const LorentzianReservoir& r, double tau) noexcept;

/// Laplace transform of the correlation function restricted to x >= 0:
/// f̃(u) = ∫_0^∞ Λ(x)/(u + ix) dx = -i S(Λ)(-iu). Requires Re u > 0.
///
/// When the pole x = iu approaches the positive real axis the integration is
/// split around Re(x) = -Im(u) and the pole is subtracted analytically.
specfun::QuadratureResult kernel_transform(const ShiftedProfile& profile, Complex u, double tol);

/// G̃(u) = [u - i S(Λ)(-iu)]^{-1} = 1/(u + f̃(u)), by quadrature.
/// Throws DomainError for Re u <= 0. The error estimate is propagated to G̃
/// to first order.
specfun::QuadratureResult laplace_propagator(const ShiftedProfile& profile, Complex u, double tol);

/// Closed-form G̃(u) for the special reservoir:
///   a^{1/2}(i a^{1/2} + u^{1/2})(a^{1/2} + u^{1/2}) /
///   (π√2 A + i a^{3/2} u + (1+i) a u^{3/2} + a^{1/2} u²)
/// with the principal u^{1/2}. Valid for |arg u| < π, u != 0; throws
/// PoleError when the denominator vanishes to 1e-14 of the numerator scale.
Complex laplace_propagator_closed_form(const SpecialReservoir& r, Complex u);

}  // namespace bandedge
