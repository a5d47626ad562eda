#include "bandedge/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bandedge/errors.hpp"

namespace bandedge {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

SpecialReservoir::SpecialReservoir(double amplitude, double width, double omega0)
    : amplitude_(amplitude), width_(width), omega0_(omega0) {
  if (!positive(amplitude)) throw DomainError("SpecialReservoir: A must be positive");
  if (!positive(width)) throw DomainError("SpecialReservoir: a must be positive");
  if (!positive(omega0)) throw DomainError("SpecialReservoir: omega0 must be positive");
}

double SpecialReservoir::profile(double x) const noexcept {
  if (!(x > 0.0)) return 0.0;
  return 2.0 * amplitude_ * std::sqrt(x) / (width_ * width_ + x * x);
}

const char* to_string(CouplingRegime regime) noexcept {
  switch (regime) {
    case CouplingRegime::weak: return "weak";
    case CouplingRegime::strong: return "strong";
    case CouplingRegime::critical: return "critical";
  }
  return "unknown";
}

LorentzianReservoir::LorentzianReservoir(double gamma, double lambda, double omega0)
    : gamma_(gamma), lambda_(lambda), omega0_(omega0) {
  if (!positive(gamma)) throw DomainError("LorentzianReservoir: gamma must be positive");
  if (!positive(lambda)) throw DomainError("LorentzianReservoir: lambda must be positive");
  if (!positive(omega0)) throw DomainError("LorentzianReservoir: omega0 must be positive");
}

LorentzianReservoir LorentzianReservoir::from_times(double tau_B, double tau_R, double omega0) {
  if (!positive(tau_B) || !positive(tau_R)) throw DomainError("LorentzianReservoir: times must be positive");
  return {1.0 / tau_R, 1.0 / tau_B, omega0};
}

CouplingRegime LorentzianReservoir::regime() const noexcept {
  const double gap = lambda_ - 2.0 * gamma_;
  if (std::abs(gap) <= 1e-12 * lambda_) return CouplingRegime::critical;
  return gap > 0.0 ? CouplingRegime::weak : CouplingRegime::strong;
}

double LorentzianReservoir::profile(double x) const noexcept {
  return gamma_ * lambda_ * lambda_ / (2.0 * std::numbers::pi * (x * x + lambda_ * lambda_));
}

ShiftedProfile::ShiftedProfile(std::function<double(double)> profile, double scale, double integral)
    : profile_(std::move(profile)), scale_(scale), integral_(integral) {}

ShiftedProfile::ShiftedProfile(std::function<double(double)> profile, double scale)
    : profile_(std::move(profile)), scale_(scale), integral_(0.0) {
  if (!profile_) throw DomainError("ShiftedProfile: empty profile");
  if (!positive(scale)) throw DomainError("ShiftedProfile: scale must be positive");

  // Sign check and a rough magnitude on a logarithmic grid.
  double rough = 0.0;
  double prev_x = 0.0;
  double prev_v = profile_(0.0);
  if (!(prev_v >= 0.0)) throw DomainError("ShiftedProfile: profile is negative or NaN at 0");
  for (int k = -120; k <= 120; ++k) {
    const double x = scale * std::pow(10.0, k / 20.0);
    const double v = profile_(x);
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("ShiftedProfile: profile must be finite and non-negative");
    rough += 0.5 * (v + prev_v) * (x - prev_x);
    prev_x = x;
    prev_v = v;
  }

  const double tol = std::max(1e-10 * rough, 1e-300);
  specfun::QuadratureResult result;
  try {
    result = specfun::oscillatory_halfline_quad(profile_, 0.0, tol, {.scale = scale});
  } catch (const ConvergenceError&) {
    throw DomainError("ShiftedProfile: integral of the profile does not converge");
  }
  if (!result.accuracy_reached || !std::isfinite(result.value.real()) ||
      result.abs_error_estimate > 1e-8 * std::abs(result.value.real()) + 1e-300) {
    throw DomainError("ShiftedProfile: integral of the profile does not converge");
  }
  integral_ = result.value.real();
}

ShiftedProfile ShiftedProfile::special(const SpecialReservoir& r) {
  return ShiftedProfile([r](double x) { return r.profile(x); }, r.width());
}

ShiftedProfile ShiftedProfile::zero() {
  return ShiftedProfile([](double) { return 0.0; }, 1.0, 0.0);
}

double spectral_density(const SpecialReservoir& r, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError("spectral_density: omega must be >= 0");
  return r.profile(omega - r.omega0());
}

SpectralPeak spectral_peak(const SpecialReservoir& r) noexcept {
  const double a = r.width();
  return {r.omega0() + a / std::sqrt(3.0), std::pow(3.0, 0.75) * r.amplitude() / (2.0 * a * std::sqrt(a))};
}

specfun::QuadratureResult correlation_function(const ShiftedProfile& profile, double tau, double tol) {
  if (!std::isfinite(tau)) throw DomainError("correlation_function: tau is not finite");
  return specfun::oscillatory_halfline_quad([&profile](double x) { return profile(x); }, tau, tol,
                                            {.scale = profile.scale()});
}

specfun::QuadratureResult correlation_function(const SpecialReservoir& r, double tau, double tol) {
  if (!std::isfinite(tau)) throw DomainError("correlation_function: tau is not finite");
  return specfun::oscillatory_halfline_quad([&r](double x) { return r.profile(x); }, tau, tol,
                                            {.scale = r.width()});
}

double lorentzian_correlation(const LorentzianReservoir& r, double tau) noexcept {
  const double lambda = r.spectral_width();
  return 0.5 * r.decay_rate() * lambda * std::exp(-lambda * std::abs(tau));
}

specfun::QuadratureResult kernel_transform(const ShiftedProfile& profile, Complex u, double tol) {
  if (!is_finite(u) || !(u.real() > 0.0)) throw DomainError("kernel_transform: requires Re(u) > 0");

  const double scale = profile.scale();
  const double eps = u.real();
  const double pole = -u.imag();  // real part of the pole x = iu
  std::vector<double> breakpoints{scale, 4.0 * scale};

  bool subtract = false;
  double lo = 0.0;
  double hi = 0.0;
  double residue = 0.0;
  if (pole > 0.0) {
    breakpoints.push_back(pole);
    if (eps < 0.25 * pole) {
      const double delta = std::min(0.5 * pole, std::max(8.0 * eps, 0.1 * std::min(scale, pole)));
      lo = pole - delta;
      hi = pole + delta;
      residue = profile(pole);
      subtract = residue != 0.0;
      breakpoints.push_back(lo);
      breakpoints.push_back(hi);
    }
    breakpoints.push_back(2.0 * pole);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  specfun::ComplexIntegrand f = [&](double x) {
    double numer = profile(x);
    if (subtract && x > lo && x < hi) numer -= residue;
    return numer / (u + kI * x);
  };
  auto result = specfun::integrate_halfline(f, breakpoints, tol);
  if (subtract) {
    // ∫_lo^hi dx / (u + ix) = -i [log(u + i hi) - log(u + i lo)]; the path stays in Re > 0.
    result.value += residue * (-kI) * (std::log(u + kI * hi) - std::log(u + kI * lo));
  }
  return result;
}

specfun::QuadratureResult laplace_propagator(const ShiftedProfile& profile, Complex u, double tol) {
  if (!is_finite(u) || !(u.real() > 0.0)) throw DomainError("laplace_propagator: requires Re(u) > 0");
  auto result = kernel_transform(profile, u, tol);
  const Complex g = 1.0 / (u + result.value);
  result.abs_error_estimate *= std::norm(g);
  result.value = g;
  return result;
}

Complex laplace_propagator_closed_form(const SpecialReservoir& r, Complex u) {
  if (!is_finite(u) || u == 0.0 || (u.imag() == 0.0 && u.real() < 0.0)) {
    throw DomainError("laplace_propagator_closed_form: requires |arg u| < pi and u != 0");
  }
  const double A = r.amplitude();
  const double a = r.width();
  const double ra = std::sqrt(a);
  const Complex s = std::sqrt(u);
  const Complex numer = ra * (kI * ra + s) * (ra + s);
  const Complex denom = std::numbers::pi * std::numbers::sqrt2 * A + kI * a * ra * u + Complex{1.0, 1.0} * a * u * s +
                        ra * u * u;
  const double numer_scale = ra * (ra + std::abs(s)) * (ra + std::abs(s));
  if (std::abs(denom) < 1e-14 * numer_scale) throw PoleError("laplace_propagator_closed_form: at a pole");
  return numer / denom;
}

}  // namespace bandedge
