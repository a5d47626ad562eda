#include "bandedge/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bandedge/errors.hpp"
#include "bandedge/quartic.hpp"
#include "bandedge/specfun.hpp"

namespace bandedge {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

}  // namespace

QuarticSolution::QuarticSolution(std::array<Complex, 4> roots, std::array<Complex, 4> residues,
                                 SpecialReservoir reservoir)
    : roots_(roots), residues_(residues), reservoir_(reservoir) {}

std::array<Complex, 4> QuarticSolution::coefficients() const noexcept {
  const double A = reservoir_.amplitude();
  const double a = reservoir_.width();
  return {Complex{std::numbers::pi * std::sqrt(2.0 / a) * A}, Complex{0.0}, Complex{0.0, a},
          Complex{1.0, 1.0} * std::sqrt(a)};
}

Complex QuarticSolution::eval_q(Complex z) const noexcept {
  const auto c = coefficients();
  return specfun::eval_quartic(z, c[0], c[1], c[2], c[3]);
}

bool IdentityReport::ok() const noexcept {
  return max_root_residual <= 1e-10 && residue_sum <= 1e-10 && residue_moment <= 1e-10 && min_separation > 1e-8;
}

Complex residue_function(const SpecialReservoir& r, Complex z) {
  const double a = r.width();
  const double ra = std::sqrt(a);
  const Complex numer = Complex{1.0, -1.0} * (ra + z) * (kI * ra + z);
  const Complex denom = 2.0 * z * (Complex{1.0, 1.0} * a + 3.0 * ra * z + 2.0 * Complex{1.0, -1.0} * z * z);
  if (denom == 0.0) throw PoleError("residue_function: z is a pole of R");
  return numer / denom;
}

IdentityReport check_identities(const QuarticSolution& sol) {
  IdentityReport rep{};
  const double q0 = std::abs(sol.eval_q(0.0));
  Complex sum = 0.0;
  Complex moment = 0.0;
  double max_mod = 0.0;
  for (std::size_t l = 0; l < 4; ++l) {
    const Complex z = sol.roots()[l];
    rep.max_root_residual = std::max(rep.max_root_residual, std::abs(sol.eval_q(z)) / q0);
    sum += sol.residues()[l];
    moment += sol.residues()[l] * z;
    max_mod = std::max(max_mod, std::abs(z));
  }
  rep.residue_sum = std::abs(sum);
  rep.residue_moment = std::abs(moment - 1.0);
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) min_dist = std::min(min_dist, std::abs(sol.roots()[i] - sol.roots()[j]));
  }
  rep.min_separation = min_dist / max_mod;
  return rep;
}

QuarticSolution solve_quartic(const SpecialReservoir& r) {
  const double A = r.amplitude();
  const double a = r.width();
  const auto found = specfun::quartic_roots(std::numbers::pi * std::sqrt(2.0 / a) * A, 0.0, Complex{0.0, a},
                                            Complex{1.0, 1.0} * std::sqrt(a));
  std::array<Complex, 4> residues{};
  for (std::size_t l = 0; l < 4; ++l) residues[l] = residue_function(r, found.roots[l]);
  QuarticSolution sol(found.roots, residues, r);

  const auto rep = check_identities(sol);
  if (rep.min_separation <= 1e-8) throw IdentityError("solve_quartic: roots of Q are not distinct");
  if (rep.max_root_residual > 1e-10) throw IdentityError("solve_quartic: root residual too large");
  if (rep.residue_sum > 1e-10) {
    throw IdentityError("solve_quartic: sum of residues deviates from 0 by " + std::to_string(rep.residue_sum));
  }
  if (rep.residue_moment > 1e-10) {
    throw IdentityError("solve_quartic: sum R(z)z deviates from 1 by " + std::to_string(rep.residue_moment));
  }
  return sol;
}

Complex propagator(const QuarticSolution& sol, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("propagator: t must be finite and >= 0");
  if (t == 0.0) return 1.0;
  const double st = std::sqrt(t);
  Complex g = 0.0;
  for (std::size_t l = 0; l < 4; ++l) {
    const Complex z = sol.roots()[l];
    g += sol.residues()[l] * z * specfun::scaled_upper_gamma_half_sheet(-z * st);
  }
  return g / kSqrtPi;
}

PropagatorSplit split_propagator(const QuarticSolution& sol, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("split_propagator: t must be finite and >= 0");
  PropagatorSplit out{};
  const double st = std::sqrt(t);
  for (std::size_t l = 0; l < 4; ++l) {
    const Complex z = sol.roots()[l];
    const Complex rz = sol.residues()[l] * z;
    if (z.real() > 0.0) {
      out.pole_part += 2.0 * rz * std::exp(z * z * t);
      out.branch_cut_part -= rz * specfun::scaled_upper_gamma_half_sheet(z * st) / kSqrtPi;
    } else {
      out.branch_cut_part += rz * specfun::scaled_upper_gamma_half_sheet(-z * st) / kSqrtPi;
    }
  }
  return out;
}

std::vector<PoleTerm> pole_terms(const QuarticSolution& sol) {
  std::vector<PoleTerm> out;
  for (std::size_t l = 0; l < 4; ++l) {
    const Complex z = sol.roots()[l];
    if (z.real() > 0.0) out.push_back({z * z, 2.0 * sol.residues()[l] * z});
  }
  return out;
}

AsymptoticSummary asymptotics(const QuarticSolution& sol) {
  AsymptoticSummary out{0.0, 0.0};
  for (std::size_t l = 0; l < 4; ++l) {
    const Complex z = sol.roots()[l];
    out.tau = std::max(out.tau, 1.0 / std::norm(z));
    out.D += sol.residues()[l] / (z * z);
  }
  out.D /= 2.0 * kSqrtPi;
  return out;
}

Complex asymptotic_propagator(const AsymptoticSummary& summary, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("asymptotic_propagator: t must be positive");
  return -summary.D * std::pow(t, -1.5);
}

}  // namespace bandedge
