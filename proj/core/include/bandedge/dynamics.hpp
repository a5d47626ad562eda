#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bandedge/exact.hpp"
#include "bandedge/types.hpp"

namespace bandedge {

/// Reduced density matrix of the qubit. Only ρ₁₁ and ρ₁₀ are stored;
/// ρ₀₀ = 1 - ρ₁₁ and ρ₀₁ = ρ₁₀* are derived.
class QubitState {
 public:
  /// Throws PhysicalityError unless 0 <= ρ₁₁ <= 1 and
  /// |ρ₁₀|² <= ρ₁₁(1 - ρ₁₁) (with 1e-12 slack for rounding).
  QubitState(double rho11, Complex rho10);

  double rho11() const noexcept { return rho11_; }
  Complex rho10() const noexcept { return rho10_; }
  double rho00() const noexcept { return 1.0 - rho11_; }
  Complex rho01() const noexcept { return std::conj(rho10_); }

 private:
  double rho11_;
  Complex rho10_;
};

/// Which frame the coherence is reported in. The interaction picture drops the
/// free phase e^{-iω₀t}; |ρ₁₀| is the same in both.
enum class Picture { schrodinger, interaction };

/// True when |G| <= 1 + 1e-9, i.e. evolve() is guaranteed to stay physical.
bool contractive(Complex G) noexcept;

/// ρ₁₁ = ρ₁₁(0)|G|², ρ₁₀ = ρ₁₀(0) e^{-iω₀t} G. |G| > 1 is not clamped; a
/// resulting unphysical state raises PhysicalityError.
QubitState evolve(const QubitState& initial, Complex G, double omega0, double t,
                  Picture picture = Picture::schrodinger);

/// Long-time forms ρ₁₁ ~ ρ₁₁(0)|D|² t^{-3} and ρ₁₀ ~ -ρ₁₀(0) e^{-iω₀t} D t^{-3/2}.
/// Only meaningful for t >> τ; throws PhysicalityError where the forms leave
/// the physical region and DomainError for t <= 0.
QubitState asymptotic_state(const QubitState& initial, const AsymptoticSummary& summary, double omega0, double t,
                            Picture picture = Picture::schrodinger);

struct Trajectory {
  std::vector<double> times;
  std::vector<Complex> G_values;
  std::vector<QubitState> states;
  double omega0 = 0.0;
  QubitState initial{0.0, 0.0};
  Picture picture = Picture::schrodinger;
  /// Times at which |G| > 1 + 1e-9 was encountered.
  std::vector<double> non_contractive_times;
};

/// Samples G on the given times (strictly increasing, >= 0) and derives the
/// states. Throws DomainError for an invalid grid.
Trajectory make_trajectory(const QubitState& initial, double omega0, std::span<const double> times,
                           const std::function<Complex(double)>& G, Picture picture = Picture::schrodinger);

/// n points evenly spaced on [t_min, t_max]; n >= 2 and t_max > t_min >= 0.
std::vector<double> uniform_grid(double t_min, double t_max, std::size_t n);

}  // namespace bandedge
