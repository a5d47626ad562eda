#include "bandedge/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bandedge/errors.hpp"

namespace bandedge::oracle {

Kernel special_kernel(const SpecialReservoir& r) {
  return [r](double tau, double tol) { return correlation_function(r, tau, tol); };
}

Kernel profile_kernel(const ShiftedProfile& profile) {
  return [profile](double tau, double tol) { return correlation_function(profile, tau, tol); };
}

Kernel lorentzian_kernel(const LorentzianReservoir& r) {
  return [r](double tau, double) {
    return specfun::QuadratureResult{Complex{lorentzian_correlation(r, tau)}, 0.0, 1, true};
  };
}

Kernel constant_kernel(double omega_squared) {
  return [omega_squared](double, double) { return specfun::QuadratureResult{Complex{omega_squared}, 0.0, 1, true}; };
}

void VolterraConfig::validate() const {
  if (!(step > 0.0) || !(horizon > 0.0) || !std::isfinite(horizon)) {
    throw DomainError("VolterraConfig: step and horizon must be positive");
  }
  if (step > horizon / 100.0) throw DomainError("VolterraConfig: step must not exceed horizon/100");
  if (!(kernel_tol > 0.0)) throw DomainError("VolterraConfig: kernel_tol must be positive");
}

Complex VolterraSolution::at(double t) const {
  if (times.empty() || t < times.front() || t > times.back()) throw DomainError("VolterraSolution::at: t out of range");
  const double h = times.size() > 1 ? times[1] - times[0] : 1.0;
  const auto k = std::min(static_cast<std::size_t>((t - times.front()) / h), times.size() - 2);
  const double frac = (t - times[k]) / h;
  return values[k] + frac * (values[k + 1] - values[k]);
}

namespace {

// Step-doubling divisor for order 3/2.
const double kRichardson = std::pow(2.0, 1.5) - 1.0;

// Marches Ġ = -(f * G) on a grid of spacing h = stride * base_step using the
// kernel samples kernel[stride * j].
std::vector<Complex> march(const std::vector<Complex>& kernel, std::size_t stride, std::size_t steps, double h) {
  std::vector<Complex> g(steps + 1);
  g[0] = 1.0;
  Complex dg_prev = 0.0;
  const Complex f0 = kernel[0];
  const Complex c = 0.5 * h * f0;
  for (std::size_t n = 1; n <= steps; ++n) {
    // h [ Σ_{j=1}^{n-1} f_{n-j} G_j + f_n G_0 / 2 ]
    Complex conv = 0.5 * kernel[n * stride] * g[0];
    for (std::size_t j = 1; j < n; ++j) conv += kernel[(n - j) * stride] * g[j];
    conv *= h;
    // Trapezoid on the ODE with dG_n = -(conv + c G_n).
    g[n] = (g[n - 1] + 0.5 * h * dg_prev - 0.5 * h * conv) / (1.0 + 0.5 * h * c);
    dg_prev = -(conv + c * g[n]);
    if (!(std::abs(g[n]) <= 10.0)) {
      throw InstabilityError("volterra_solve: |G| exceeded 10 at t = " + std::to_string(n * h));
    }
  }
  return g;
}

}  // namespace

VolterraSolution volterra_solve(const Kernel& kernel, const VolterraConfig& cfg) {
  cfg.validate();
  auto steps = static_cast<std::size_t>(std::ceil(cfg.horizon / cfg.step - 1e-9));
  if (steps % 2 == 1) ++steps;
  const double h = cfg.horizon / static_cast<double>(steps);

  VolterraSolution out;
  std::vector<Complex> samples(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const auto r = kernel(h * static_cast<double>(k), cfg.kernel_tol);
    samples[k] = r.value;
    if (!r.accuracy_reached) out.kernel_accuracy_reached = false;
  }

  out.values = march(samples, 1, steps, h);
  const auto coarse = march(samples, 2, steps / 2, 2.0 * h);

  out.times.resize(steps + 1);
  out.error_estimates.assign(steps + 1, 0.0);
  for (std::size_t k = 0; k <= steps; ++k) out.times[k] = h * static_cast<double>(k);
  for (std::size_t k = 0; k <= steps; k += 2) out.error_estimates[k] = std::abs(out.values[k] - coarse[k / 2]) / kRichardson;
  for (std::size_t k = 1; k < steps; k += 2) {
    out.error_estimates[k] = std::max(out.error_estimates[k - 1], out.error_estimates[k + 1]);
  }
  return out;
}

void InversionConfig::validate() const {
  if (contour_nodes < 16 || contour_nodes % 2 != 0) {
    throw DomainError("InversionConfig: contour_nodes must be even and >= 16");
  }
  if (!(shift > 0.0) || !std::isfinite(shift)) throw DomainError("InversionConfig: shift must be positive");
  if (!(max_frequency >= 0.0) || !std::isfinite(max_frequency)) {
    throw DomainError("InversionConfig: max_frequency must be >= 0");
  }
}

namespace {

Complex contour_sum(const Transform& transform, double t, int nodes, double shift) {
  constexpr double c0 = -0.6122;
  constexpr double c1 = 0.5017;
  constexpr double alpha = 0.6407;
  constexpr double c2 = 0.2645;
  const double mu = nodes / t;
  Complex sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    // Midpoints: θ = 0 (the real axis crossing) is never a node, and no node
    // lands on the negative real axis.
    const double theta = -std::numbers::pi + (k + 0.5) * 2.0 * std::numbers::pi / nodes;
    const double cot = 1.0 / std::tan(alpha * theta);
    const double sin = std::sin(alpha * theta);
    const Complex u = shift + mu * Complex{c0 + c1 * theta * cot, c2 * theta};
    const Complex du = mu * Complex{c1 * cot - c1 * alpha * theta / (sin * sin), c2};
    sum += std::exp(u * t) * transform(u) * du;
  }
  return sum / (kI * static_cast<double>(nodes));
}

}  // namespace

InversionResult laplace_invert(const Transform& transform, double t, const InversionConfig& cfg) {
  cfg.validate();
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("laplace_invert: t must be positive");
  // Rounding on the contour grows like e^{0.17 N}, so use as few nodes as
  // still enclose the complex poles: about 32 + 3.2 ωt (measured on
  // cos(ωt)). The coarse sum drops 8 nodes and must enclose them as well.
  const double needed = 32.0 + 3.2 * cfg.max_frequency * t;
  const int nodes = std::max(cfg.contour_nodes, std::min(kMaxContourNodes, 2 * static_cast<int>(std::ceil(needed / 2.0))));
  const bool enclosed = needed <= kMaxContourNodes;
  // e^{σt} amplifies rounding; keep it O(1) at large t.
  const double shift = std::min(cfg.shift, 2.0 / t);
  const Complex fine = contour_sum(transform, t, nodes, shift);
  const Complex coarse = contour_sum(transform, t, nodes - 8, shift);
  InversionResult out{fine, std::abs(fine - coarse), false};
  if (!enclosed) out.error_estimate = std::numeric_limits<double>::infinity();
  out.accuracy_reached = is_finite(fine) && out.error_estimate <= 1e-6 * std::max(1.0, std::abs(fine));
  return out;
}

}  // namespace bandedge::oracle
