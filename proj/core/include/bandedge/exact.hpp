#pragma once

// Closed-form survival amplitude G(t) for the band-edge reservoir.
//
// G̃(u) has the partial-fraction form Σ_l R(z_l) / (u^{1/2} - z_l) over the four
// roots of
//   Q(z) = π√(2/a) A + i a z² + (1+i) a^{1/2} z³ + z⁴,
// whose inverse transform is
//   G(t) = π^{-1/2} Σ_l R(z_l) z_l e^{z_l² t} Γ(1/2, z_l² t)
// with each incomplete Gamma taken on the sheet where (z_l² t)^{1/2} = -z_l t^{1/2},
// i.e. G(t) = Σ_l R(z_l) z_l erfcx(-z_l t^{1/2}). For roots with Re z_l > 0
// this differs from the principal branch: u = z_l² is then a pole of G̃ on the
// principal sheet and contributes 2 R(z_l) z_l e^{z_l² t}. One such root always
// sits on arg z = π/4, giving an undamped (bound-state) oscillation.

#include <array>
#include <vector>

#include "bandedge/reservoir.hpp"
#include "bandedge/types.hpp"

namespace bandedge {

class QuarticSolution {
 public:
  /// Unchecked assembly; use solve_quartic() for the validated route.
  QuarticSolution(std::array<Complex, 4> roots, std::array<Complex, 4> residues, SpecialReservoir reservoir);

  const std::array<Complex, 4>& roots() const noexcept { return roots_; }
  const std::array<Complex, 4>& residues() const noexcept { return residues_; }
  const SpecialReservoir& reservoir() const noexcept { return reservoir_; }

  /// Coefficients (c0, c1, c2, c3) of the monic Q.
  std::array<Complex, 4> coefficients() const noexcept;
  Complex eval_q(Complex z) const noexcept;

 private:
  std::array<Complex, 4> roots_;
  std::array<Complex, 4> residues_;
  SpecialReservoir reservoir_;
};

/// Measured deviations of the structural identities.
struct IdentityReport {
  double max_root_residual;   // max |Q(z_l)| / |Q(0)|
  double residue_sum;         // |Σ R(z_l)|
  double residue_moment;      // |Σ R(z_l) z_l - 1|
  double min_separation;      // min |z_i - z_j| / max |z_l|

  /// Tolerances of a valid solution: 1e-10, 1e-10, 1e-10 and 1e-8.
  bool ok() const noexcept;
};

struct AsymptoticSummary {
  double tau;  // time scale max_l |z_l|^{-2}
  Complex D;   // (1/(2√π)) Σ_l R(z_l) z_l^{-2}
};

/// One principal-sheet pole of G̃: contributes amplitude · e^{rate t} to G.
struct PoleTerm {
  Complex rate;       // z_l²
  Complex amplitude;  // 2 R(z_l) z_l
};

struct PropagatorSplit {
  Complex pole_part;        // Σ over principal-sheet poles
  Complex branch_cut_part;  // remainder; decays algebraically
};

/// R(z) = (1-i)(a^{1/2}+z)(i a^{1/2}+z) / [2z((1+i)a + 3a^{1/2}z + 2(1-i)z²)].
Complex residue_function(const SpecialReservoir& r, Complex z);

IdentityReport check_identities(const QuarticSolution& sol);

/// Roots of Q and their residues. Throws IdentityError if the residue
/// identities or root distinctness fail.
QuarticSolution solve_quartic(const SpecialReservoir& r);

/// G(t); exactly 1 at t = 0. Throws DomainError for t < 0 or NaN.
Complex propagator(const QuarticSolution& sol, double t);

/// G(t) split into its principal-sheet pole terms and the branch-cut integral.
PropagatorSplit split_propagator(const QuarticSolution& sol, double t);

/// Pole terms with Re z_l > 0, in root order.
std::vector<PoleTerm> pole_terms(const QuarticSolution& sol);

AsymptoticSummary asymptotics(const QuarticSolution& sol);

/// -D t^{-3/2}. Throws DomainError for t <= 0.
Complex asymptotic_propagator(const AsymptoticSummary& summary, double t);

}  // namespace bandedge
