#include "bandedge/quartic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bandedge/errors.hpp"

namespace bandedge::specfun {
namespace {

using Roots = std::array<Complex, 4>;

Complex eval_derivative(Complex z, Complex c1, Complex c2, Complex c3) noexcept {
  return ((4.0 * z + 3.0 * c3) * z + 2.0 * c2) * z + c1;
}

// Running bound on the rounding error of the Horner evaluation.
double rounding_level(Complex z, const std::array<Complex, 5>& c) noexcept {
  const double r = std::abs(z);
  double s = 0.0;
  for (int k = 4; k >= 0; --k) s = s * r + std::abs(c[k]);
  return 32.0 * std::numeric_limits<double>::epsilon() * s;
}

bool durand_kerner(const std::array<Complex, 5>& c, Roots& z, int& iterations) {
  double radius = 1.0;
  for (int k = 0; k < 4; ++k) radius = std::max(radius, 1.0 + std::abs(c[k]));
  // Offset angle avoids starting on a symmetry line of the coefficients.
  for (int k = 0; k < 4; ++k) {
    z[k] = std::polar(radius, 0.4 + 0.5 * std::numbers::pi * k);
  }
  constexpr int max_iter = 2000;
  for (int it = 1; it <= max_iter; ++it) {
    double change = 0.0;
    double scale = 0.0;
    for (int i = 0; i < 4; ++i) {
      Complex denom = 1.0;
      for (int j = 0; j < 4; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (denom == 0.0) denom = std::numeric_limits<double>::epsilon();
      const Complex step = eval_quartic(z[i], c[0], c[1], c[2], c[3]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
      scale = std::max(scale, std::abs(z[i]));
    }
    iterations = it;
    if (!is_finite(z[0]) || !is_finite(z[1]) || !is_finite(z[2]) || !is_finite(z[3])) return false;
    if (change <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale)) return true;
  }
  return true;  // residual check decides
}

void newton_polish(const std::array<Complex, 5>& c, Roots& z) {
  for (auto& root : z) {
    for (int it = 0; it < 4; ++it) {
      const Complex q = eval_quartic(root, c[0], c[1], c[2], c[3]);
      const Complex dq = eval_derivative(root, c[1], c[2], c[3]);
      if (dq == 0.0) break;
      const Complex next = root - q / dq;
      if (std::abs(eval_quartic(next, c[0], c[1], c[2], c[3])) >= std::abs(q)) break;
      root = next;
    }
  }
}

Roots companion_roots(const std::array<Complex, 5>& c) {
  Eigen::Matrix4cd companion = Eigen::Matrix4cd::Zero();
  for (int k = 1; k < 4; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < 4; ++k) companion(k, 3) = -c[k];
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("quartic_roots: companion eigensolver failed");
  Roots z;
  for (int k = 0; k < 4; ++k) z[k] = solver.eigenvalues()[k];
  return z;
}

bool within_bound(const std::array<Complex, 5>& c, const Roots& z, double& max_residual) {
  const double bound = 1e-10 * std::max(1.0, std::abs(c[0]));
  max_residual = 0.0;
  bool ok = true;
  for (const auto& root : z) {
    if (!is_finite(root)) return false;
    const double res = std::abs(eval_quartic(root, c[0], c[1], c[2], c[3]));
    max_residual = std::max(max_residual, res);
    if (res > std::max(bound, rounding_level(root, c))) ok = false;
  }
  return ok;
}

double sort_angle(Complex z) noexcept {
  double phi = std::arg(z);
  if (phi <= -std::numbers::pi + 1e-12) phi = std::numbers::pi;
  return phi;
}

}  // namespace

Complex eval_quartic(Complex z, Complex c0, Complex c1, Complex c2, Complex c3) noexcept {
  return (((z + c3) * z + c2) * z + c1) * z + c0;
}

QuarticRoots quartic_roots(Complex c0, Complex c1, Complex c2, Complex c3) {
  const std::array<Complex, 5> c{c0, c1, c2, c3, 1.0};
  for (const auto& ck : c) {
    if (!is_finite(ck)) throw DomainError("quartic_roots: coefficient is not finite");
  }

  QuarticRoots out;
  Roots z{};
  bool ok = durand_kerner(c, z, out.iterations);
  if (ok) {
    newton_polish(c, z);
    ok = within_bound(c, z, out.max_residual);
  }
  if (!ok) {
    z = companion_roots(c);
    newton_polish(c, z);
    out.used_fallback = true;
    if (!within_bound(c, z, out.max_residual)) {
      throw ConvergenceError("quartic_roots: no root set met the residual bound");
    }
  }

  std::sort(z.begin(), z.end(), [](Complex x, Complex y) {
    const double ax = sort_angle(x);
    const double ay = sort_angle(y);
    if (std::abs(ax - ay) > 1e-12) return ax < ay;
    return std::abs(x) < std::abs(y);
  });
  out.roots = z;

  double max_mod = 0.0;
  double min_dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    max_mod = std::max(max_mod, std::abs(z[i]));
    for (int j = i + 1; j < 4; ++j) min_dist = std::min(min_dist, std::abs(z[i] - z[j]));
  }
  out.near_multiple = min_dist < 1e-6 * max_mod;
  return out;
}

}  // namespace bandedge::specfun
