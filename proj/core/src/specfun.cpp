#include "bandedge/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "bandedge/errors.hpp"

namespace bandedge::specfun {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kInvSqrtPi = 0.56418958354775628695;

// Weideman's rational approximation of the Faddeeva function with N = 40
// terms. Written for erfcx(z) = w(iz) on Re z >= 0:
//   erfcx(z) = 2 p(Z) / (L + z)^2 + 1 / (√π (L + z)),  Z = (L - z) / (L + z).
constexpr int kTerms = 40;

struct WeidemanTable {
  double L;
  std::array<double, kTerms> coeff;  // coeff[n] multiplies Z^n
};

WeidemanTable make_table() {
  WeidemanTable tab{};
  const int M = 2 * kTerms;
  tab.L = std::sqrt(kTerms / std::numbers::sqrt2);
  // Samples of e^{-t^2}(L^2 + t^2) at t_k = L tan(kπ / 2M), k = -M+1..M-1;
  // the k = -M sample (t = ∞) is zero. Even in k, so the DFT is a cosine sum.
  std::array<double, 2 * kTerms> f{};
  for (int k = 0; k < M; ++k) {
    const double t = tab.L * std::tan(0.5 * k * std::numbers::pi / M);
    f[k] = std::exp(-t * t) * (tab.L * tab.L + t * t);
  }
  for (int n = 0; n < kTerms; ++n) {
    const int m = n + 1;
    double sum = f[0];
    for (int k = 1; k < M; ++k) sum += 2.0 * f[k] * std::cos(std::numbers::pi * k * m / M);
    tab.coeff[n] = sum / (2.0 * M);
  }
  return tab;
}

const WeidemanTable& table() {
  static const WeidemanTable tab = make_table();
  return tab;
}

Complex erfcx_rational(Complex z) {
  const auto& tab = table();
  const Complex denom = tab.L + z;
  const Complex Z = (tab.L - z) / denom;
  Complex p = 0.0;
  for (int n = kTerms - 1; n >= 0; --n) p = p * Z + tab.coeff[n];
  return 2.0 * p / (denom * denom) + kInvSqrtPi / denom;
}

// Laplace continued fraction
//   √π erfcx(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
// evaluated with the modified Lentz algorithm. Returns false when it has not
// settled within the iteration budget (happens only close to the imaginary
// axis at moderate |z|).
bool erfcx_continued_fraction(Complex z, Complex& out) {
  constexpr double tiny = 1e-300;
  constexpr int max_iter = 200;
  Complex f = z;
  Complex C = f;
  Complex D = 0.0;
  for (int n = 1; n <= max_iter; ++n) {
    const double an = 0.5 * n;
    D = z + an * D;
    if (D == 0.0) D = tiny;
    C = z + an / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const Complex delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      out = kInvSqrtPi / f;
      return true;
    }
  }
  return false;
}

Complex erfcx_right_half(Complex z) {
  if (std::abs(z) >= 8.0) {
    Complex v;
    if (erfcx_continued_fraction(z, v)) return v;
  }
  return erfcx_rational(z);
}

}  // namespace

Complex erfcx(Complex z) {
  if (!is_finite(z)) throw DomainError("erfcx: argument is not finite");
  if (z.real() >= 0.0) return erfcx_right_half(z);
  const Complex value = 2.0 * std::exp(z * z) - erfcx_right_half(-z);
  if (!is_finite(value)) throw DomainError("erfcx: result overflows for this argument");
  return value;
}

Complex scaled_upper_gamma_half(Complex w) {
  if (!is_finite(w)) throw DomainError("scaled_upper_gamma_half: argument is not finite");
  Complex root = std::sqrt(w);
  // std::sqrt maps -x - 0i to -i√x; keep the upper side of the cut.
  if (root.real() == 0.0 && root.imag() < 0.0 && w.imag() == 0.0) root = -root;
  return kSqrtPi * erfcx_right_half(root);
}

Complex scaled_upper_gamma_half_sheet(Complex root) {
  if (!is_finite(root)) throw DomainError("scaled_upper_gamma_half_sheet: argument is not finite");
  return kSqrtPi * erfcx(root);
}

}  // namespace bandedge::specfun
