#include "bandedge/lorentzian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bandedge/errors.hpp"

namespace bandedge {

LorentzianPropagatorParams::LorentzianPropagatorParams(const LorentzianReservoir& r)
    : LorentzianPropagatorParams(r, r.regime()) {}

LorentzianPropagatorParams::LorentzianPropagatorParams(const LorentzianReservoir& r, CouplingRegime regime)
    : reservoir_(r), regime_(regime), rate_(0.0) {
  if (regime != r.regime()) {
    throw RegimeError(std::string("LorentzianPropagatorParams: reservoir is in the ") + to_string(r.regime()) +
                      " regime, not " + to_string(regime));
  }
  const double lambda = r.spectral_width();
  const double gamma = r.decay_rate();
  switch (regime) {
    case CouplingRegime::weak: rate_ = std::sqrt(lambda * lambda - 2.0 * gamma * lambda); break;
    case CouplingRegime::strong: rate_ = std::sqrt(2.0 * gamma * lambda - lambda * lambda); break;
    case CouplingRegime::critical: rate_ = 0.0; break;
  }
}

double propagator_L(const LorentzianPropagatorParams& p, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("propagator_L: t must be finite and >= 0");
  const double lambda = p.reservoir().spectral_width();
  const double d = p.rate();
  const double envelope = std::exp(-0.5 * lambda * t);
  switch (p.regime()) {
    case CouplingRegime::weak: {
      // cosh + (λ/d) sinh written with decaying exponentials only.
      const double plus = 0.5 * (1.0 + lambda / d) * std::exp(-0.5 * (lambda - d) * t);
      const double minus = 0.5 * (1.0 - lambda / d) * std::exp(-0.5 * (lambda + d) * t);
      return plus + minus;
    }
    case CouplingRegime::strong:
      return envelope * (std::cos(0.5 * d * t) + lambda / d * std::sin(0.5 * d * t));
    case CouplingRegime::critical:
      return envelope * (1.0 + 0.5 * lambda * t);
  }
  return 0.0;
}

std::vector<double> zero_times(const LorentzianPropagatorParams& p, int n_max) {
  if (p.regime() != CouplingRegime::strong) throw RegimeError("zero_times: G_L has no zeros outside the strong regime");
  if (n_max < 1) throw DomainError("zero_times: n_max must be >= 1");
  const double lambda = p.reservoir().spectral_width();
  const double d = p.rate();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  const double phase = std::atan(d / lambda);
  for (int n = 1; n <= n_max; ++n) out.push_back(2.0 / d * (n * std::numbers::pi - phase));
  return out;
}

}  // namespace bandedge
