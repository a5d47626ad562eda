#pragma once

#include <vector>

#include "bandedge/reservoir.hpp"

namespace bandedge {

/// Propagator parameters of the damped Jaynes-Cummings model.
///
/// rate is d = √(λ² - 2γλ) in the weak regime, d̂ = √(2γλ - λ²) in the strong
/// regime and 0 at the critical point λ = 2γ.
class LorentzianPropagatorParams {
 public:
  /// Regime taken from the reservoir's classifier.
  explicit LorentzianPropagatorParams(const LorentzianReservoir& r);
  /// Throws RegimeError when the tag disagrees with the classifier.
  LorentzianPropagatorParams(const LorentzianReservoir& r, CouplingRegime regime);

  const LorentzianReservoir& reservoir() const noexcept { return reservoir_; }
  CouplingRegime regime() const noexcept { return regime_; }
  double rate() const noexcept { return rate_; }

 private:
  LorentzianReservoir reservoir_;
  CouplingRegime regime_;
  double rate_;
};

/// G_L(t):
///   weak:     e^{-λt/2} [cosh(dt/2) + (λ/d) sinh(dt/2)]
///   strong:   e^{-λt/2} [cos(d̂t/2) + (λ/d̂) sin(d̂t/2)]
///   critical: e^{-λt/2} (1 + λt/2)
double propagator_L(const LorentzianPropagatorParams& p, double t);

/// Zeros t_n = (2/d̂)(nπ - arctan(d̂/λ)), n = 1..n_max. Strong regime only.
std::vector<double> zero_times(const LorentzianPropagatorParams& p, int n_max);

}  // namespace bandedge
