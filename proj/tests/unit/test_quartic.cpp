#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bandedge/quartic.hpp"
#include "support/reference.hpp"

using namespace bandedge;
using specfun::quartic_roots;

namespace {

// Coefficients (c0, c1, c2, c3) of the monic polynomial with the given roots.
std::array<Complex, 4> expand(const std::array<Complex, 4>& r) {
  std::array<Complex, 5> cur{1.0};  // cur[k] multiplies z^k
  int deg = 0;
  for (Complex root : r) {
    std::array<Complex, 5> next{};
    for (int k = 0; k <= deg; ++k) {
      next[k + 1] += cur[k];
      next[k] -= root * cur[k];
    }
    cur = next;
    ++deg;
  }
  return {cur[0], cur[1], cur[2], cur[3]};
}

// Multiset match: every expected root has a distinct partner within tol.
bool same_roots(std::array<Complex, 4> got, const std::array<Complex, 4>& expected, double tol) {
  for (Complex e : expected) {
    auto it = std::min_element(got.begin(), got.end(),
                               [e](Complex a, Complex b) { return std::abs(a - e) < std::abs(b - e); });
    if (std::abs(*it - e) > tol) return false;
    *it = Complex{1e300, 1e300};
  }
  return true;
}

}  // namespace

TEST(QuarticRoots, FourthRootsOfUnity) {
  const auto r = quartic_roots(-1.0, 0.0, 0.0, 0.0);
  const Complex I{0.0, 1.0};
  EXPECT_TRUE(same_roots(r.roots, {Complex{1.0}, I, Complex{-1.0}, -I}, 1e-14));
  // Sorted by argument in (-π, π]: -i, 1, i, -1.
  EXPECT_NEAR(std::abs(r.roots[0] + I), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.roots[1] - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.roots[2] - I), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.roots[3] + 1.0), 0.0, 1e-14);
  EXPECT_FALSE(r.near_multiple);
}

TEST(QuarticRoots, BandEdgeQuarticAtReferenceParameters) {
  const double pi = std::numbers::pi;
  const Complex I{0.0, 1.0};
  const auto r = quartic_roots(pi * std::sqrt(2.0) * 0.8, 0.0, I, 1.0 + I);
  EXPECT_TRUE(same_roots(r.roots, {Complex{-1.282, 0.716}, Complex{-1.150, -1.150}, Complex{0.716, -1.282}, Complex{0.717, 0.717}},
                         1.5e-3));
  EXPECT_LE(r.max_residual, 1e-10 * pi * std::sqrt(2.0) * 0.8);
}

TEST(QuarticRoots, DoubleRootIsFlagged) {
  const Complex d{2.0, 3.0};
  const auto c = expand({d, d, Complex{-1.0}, Complex{5.0}});
  const auto r = quartic_roots(c[0], c[1], c[2], c[3]);
  EXPECT_TRUE(r.near_multiple);
  for (Complex z : r.roots) {
    EXPECT_LE(std::abs(specfun::eval_quartic(z, c[0], c[1], c[2], c[3])), 1e-10 * std::max(1.0, std::abs(c[0])));
  }
  // A double root is only determined to about sqrt(eps).
  EXPECT_TRUE(same_roots(r.roots, {d, d, Complex{-1.0}, Complex{5.0}}, 1e-6));
}

TEST(QuarticRoots, VietaRelations) {
  for (int k = 0; k < 50; ++k) {
    std::array<Complex, 4> roots;
    for (auto& z : roots) z = std::polar(ref::log_uniform(0.05, 20.0), ref::uniform(-3.1, 3.1));
    const auto c = expand(roots);
    const auto r = quartic_roots(c[0], c[1], c[2], c[3]);
    Complex prod = 1.0, sum = 0.0;
    for (Complex z : r.roots) {
      prod *= z;
      sum += z;
    }
    EXPECT_LT(std::abs(prod - c[0]), 1e-10 * std::abs(c[0]));
    EXPECT_LT(std::abs(sum + c[3]), 1e-10 * std::max(1.0, std::abs(c[3])));
  }
}

TEST(QuarticRoots, ResidualBoundOnRandomCoefficients) {
  for (int k = 0; k < 200; ++k) {
    const Complex c0 = std::polar(ref::log_uniform(1e-3, 1e3), ref::uniform(-3.1, 3.1));
    const Complex c1{ref::uniform(-10, 10), ref::uniform(-10, 10)};
    const Complex c2{ref::uniform(-10, 10), ref::uniform(-10, 10)};
    const Complex c3{ref::uniform(-10, 10), ref::uniform(-10, 10)};
    const auto r = quartic_roots(c0, c1, c2, c3);
    for (Complex z : r.roots) {
      const double scale = std::abs(c0) + std::abs(c1 * z) + std::abs(c2 * z * z) + std::abs(c3 * z * z * z) +
                           std::pow(std::abs(z), 4);
      EXPECT_LE(std::abs(specfun::eval_quartic(z, c0, c1, c2, c3)),
                std::max(1e-10 * std::max(1.0, std::abs(c0)), 32 * 2.2e-16 * scale));
    }
  }
}

TEST(QuarticRoots, DeterministicOrdering) {
  const auto a = quartic_roots({1.0, 2.0}, {0.5, -1.0}, {3.0, 0.0}, {-1.0, 1.0});
  const auto b = quartic_roots({1.0, 2.0}, {0.5, -1.0}, {3.0, 0.0}, {-1.0, 1.0});
  for (int l = 0; l < 4; ++l) EXPECT_EQ(a.roots[l], b.roots[l]);
  for (int l = 0; l + 1 < 4; ++l) EXPECT_LE(std::arg(a.roots[l]), std::arg(a.roots[l + 1]));
}

TEST(QuarticRoots, TiesOnTheNegativeAxisSortLast) {
  // Roots -1, -2, 1, 2: the negative ones carry argument π and come last, by modulus.
  const auto c = expand({Complex{-1.0}, Complex{-2.0}, Complex{1.0}, Complex{2.0}});
  const auto r = quartic_roots(c[0], c[1], c[2], c[3]);
  EXPECT_NEAR(r.roots[2].real(), -1.0, 1e-12);
  EXPECT_NEAR(r.roots[3].real(), -2.0, 1e-12);
}

TEST(EvalQuartic, Horner) {
  const Complex z{0.3, -1.2};
  const Complex c0{1, 1}, c1{-2, 0}, c2{0, 3}, c3{4, -1};
  const Complex direct = z * z * z * z + c3 * z * z * z + c2 * z * z + c1 * z + c0;
  EXPECT_LT(std::abs(specfun::eval_quartic(z, c0, c1, c2, c3) - direct), 1e-13);
}
