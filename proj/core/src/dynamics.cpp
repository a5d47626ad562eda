#include "bandedge/dynamics.hpp"

#include <cmath>

#include "bandedge/errors.hpp"

namespace bandedge {

QubitState::QubitState(double rho11, Complex rho10) : rho11_(rho11), rho10_(rho10) {
  if (!(rho11 >= 0.0 && rho11 <= 1.0)) throw PhysicalityError("QubitState: rho11 outside [0, 1]");
  if (!is_finite(rho10)) throw PhysicalityError("QubitState: rho10 is not finite");
  if (std::norm(rho10) > rho11 * (1.0 - rho11) + 1e-12) {
    throw PhysicalityError("QubitState: |rho10|^2 exceeds rho11 (1 - rho11)");
  }
}

bool contractive(Complex G) noexcept { return std::abs(G) <= 1.0 + 1e-9; }

QubitState evolve(const QubitState& initial, Complex G, double omega0, double t, Picture picture) {
  const Complex phase = picture == Picture::schrodinger ? std::polar(1.0, -omega0 * t) : Complex{1.0};
  return {initial.rho11() * std::norm(G), initial.rho10() * phase * G};
}

QubitState asymptotic_state(const QubitState& initial, const AsymptoticSummary& summary, double omega0, double t,
                            Picture picture) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("asymptotic_state: t must be positive");
  const Complex phase = picture == Picture::schrodinger ? std::polar(1.0, -omega0 * t) : Complex{1.0};
  return {initial.rho11() * std::norm(summary.D) / (t * t * t),
          -initial.rho10() * phase * summary.D * std::pow(t, -1.5)};
}

Trajectory make_trajectory(const QubitState& initial, double omega0, std::span<const double> times,
                           const std::function<Complex(double)>& G, Picture picture) {
  if (times.empty()) throw DomainError("make_trajectory: empty time grid");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(times[k] >= 0.0) || !std::isfinite(times[k])) throw DomainError("make_trajectory: times must be >= 0");
    if (k > 0 && !(times[k] > times[k - 1])) throw DomainError("make_trajectory: times must increase strictly");
  }
  Trajectory traj;
  traj.omega0 = omega0;
  traj.initial = initial;
  traj.picture = picture;
  traj.times.assign(times.begin(), times.end());
  traj.G_values.reserve(times.size());
  traj.states.reserve(times.size());
  for (double t : times) {
    const Complex g = G(t);
    if (!contractive(g)) traj.non_contractive_times.push_back(t);
    traj.G_values.push_back(g);
    traj.states.push_back(evolve(initial, g, omega0, t, picture));
  }
  return traj;
}

std::vector<double> uniform_grid(double t_min, double t_max, std::size_t n) {
  if (n < 2) throw DomainError("uniform_grid: need at least two points");
  if (!(t_min >= 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
    throw DomainError("uniform_grid: need 0 <= t_min < t_max");
  }
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = t_min + (t_max - t_min) * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  out.back() = t_max;
  return out;
}

}  // namespace bandedge
