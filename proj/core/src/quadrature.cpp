#include "bandedge/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "bandedge/errors.hpp"

namespace bandedge::specfun {
namespace {

constexpr int kNodes = 10;

struct GaussRule {
  std::array<double, kNodes> x;
  std::array<double, kNodes> w;
};

GaussRule make_gauss_legendre() {
  GaussRule rule{};
  for (int i = 0; i < kNodes; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (kNodes + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int n = 2; n <= kNodes; ++n) {
        const double p2 = ((2.0 * n - 1.0) * z * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = kNodes * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.x[i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

const GaussRule& gauss() {
  static const GaussRule rule = make_gauss_legendre();
  return rule;
}

Complex gauss_panel(const ComplexIntegrand& f, double lo, double hi) {
  const auto& g = gauss();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  Complex sum = 0.0;
  for (int i = 0; i < kNodes; ++i) sum += g.w[i] * f(mid + half * g.x[i]);
  return half * sum;
}

struct Panel {
  int segment;
  double lo;
  double hi;
  Complex coarse;   // single-rule estimate over [lo, hi]
  Complex left;     // rule over [lo, mid]
  Complex right;    // rule over [mid, hi]
  double error;

  Complex value() const { return left + right; }
  bool operator<(const Panel& other) const { return error < other.error; }
};

struct Segment {
  const ComplexIntegrand* f;
  double lo;
  double hi;
};

// Global adaptive driver over several (possibly transformed) segments that
// share one error budget.
class AdaptiveIntegrator {
 public:
  explicit AdaptiveIntegrator(std::vector<ComplexIntegrand> fs) : fs_(std::move(fs)) {}

  QuadratureResult run(const std::vector<std::pair<int, std::pair<double, double>>>& initial, double tol,
                       std::size_t max_panels) {
    std::priority_queue<Panel> queue;
    std::size_t evaluations = 0;
    for (const auto& [seg, range] : initial) {
      const auto& f = fs_[seg];
      const Complex coarse = gauss_panel(f, range.first, range.second);
      evaluations += kNodes;
      queue.push(refine(seg, range.first, range.second, coarse, evaluations));
    }
    std::vector<Panel> settled;
    auto total_error = [&] {
      double e = 0.0;
      auto copy = queue;
      while (!copy.empty()) {
        e += copy.top().error;
        copy.pop();
      }
      for (const auto& p : settled) e += p.error;
      return e;
    };

    double err = total_error();
    std::size_t panels = queue.size();
    while (err > tol && !queue.empty() && panels < max_panels) {
      Panel worst = queue.top();
      queue.pop();
      const double mid = 0.5 * (worst.lo + worst.hi);
      if (!(mid > worst.lo && mid < worst.hi) ||
          worst.hi - worst.lo <= 1e-14 * std::max(std::abs(worst.lo), std::abs(worst.hi))) {
        settled.push_back(worst);
        continue;
      }
      err -= worst.error;
      Panel a = refine(worst.segment, worst.lo, mid, worst.left, evaluations);
      Panel b = refine(worst.segment, mid, worst.hi, worst.right, evaluations);
      err += a.error + b.error;
      queue.push(a);
      queue.push(b);
      ++panels;
      // Guard against drift in the running sum.
      if (panels % 256 == 0) err = total_error();
    }

    QuadratureResult out;
    out.evaluations = evaluations;
    while (!queue.empty()) {
      out.value += queue.top().value();
      out.abs_error_estimate += queue.top().error;
      queue.pop();
    }
    for (const auto& p : settled) {
      out.value += p.value();
      out.abs_error_estimate += p.error;
    }
    out.accuracy_reached = out.abs_error_estimate <= tol && is_finite(out.value);
    return out;
  }

 private:
  Panel refine(int seg, double lo, double hi, Complex coarse, std::size_t& evaluations) const {
    const auto& f = fs_[seg];
    const double mid = 0.5 * (lo + hi);
    Panel p{seg, lo, hi, coarse, gauss_panel(f, lo, mid), gauss_panel(f, mid, hi), 0.0};
    evaluations += 2 * kNodes;
    p.error = std::abs(p.value() - coarse);
    if (!std::isfinite(p.error)) p.error = std::numeric_limits<double>::infinity();
    return p;
  }

  std::vector<ComplexIntegrand> fs_;
};

void check_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("quadrature: tolerance must be positive");
}

// Wynn's epsilon algorithm on a stream of partial sums.
class EpsilonTable {
 public:
  // Returns the current best extrapolation after adding s.
  Complex push(Complex s) {
    std::vector<Complex> next;
    next.reserve(last_.size() + 1);
    next.push_back(s);
    Complex prev_aux = 0.0;  // ε_{k-1} of the previous row
    for (std::size_t k = 0; k < last_.size(); ++k) {
      const Complex diff = next[k] - last_[k];
      const Complex aux = (k == 0) ? Complex{0.0} : prev_aux;
      if (std::abs(diff) == 0.0) break;
      const Complex e = aux + 1.0 / diff;
      prev_aux = last_[k];
      next.push_back(e);
      if (!is_finite(e)) {
        next.pop_back();
        break;
      }
    }
    // Keep the row short enough to stay well conditioned.
    if (next.size() > 41) next.resize(41);
    last_ = std::move(next);
    // Even columns carry the extrapolated sums.
    const std::size_t best = (last_.size() - 1) & ~std::size_t{1};
    return last_[best];
  }

 private:
  std::vector<Complex> last_;
};

}  // namespace

QuadratureResult integrate(const ComplexIntegrand& f, double lo, double hi, double tol,
                           std::size_t max_panels) {
  const std::array<double, 2> bp{lo, hi};
  return integrate(f, std::span<const double>(bp), tol, max_panels);
}

QuadratureResult integrate(const ComplexIntegrand& f, std::span<const double> breakpoints, double tol,
                           std::size_t max_panels) {
  check_tolerance(tol);
  if (breakpoints.size() < 2) throw DomainError("integrate: need at least two breakpoints");
  std::vector<std::pair<int, std::pair<double, double>>> initial;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) throw DomainError("integrate: breakpoints must increase");
    initial.push_back({0, {breakpoints[i], breakpoints[i + 1]}});
  }
  AdaptiveIntegrator engine({f});
  return engine.run(initial, tol, max_panels);
}

QuadratureResult integrate_halfline(const ComplexIntegrand& f, std::span<const double> breakpoints, double tol,
                                    std::size_t max_panels) {
  check_tolerance(tol);
  if (breakpoints.empty() || !(breakpoints.front() > 0.0)) {
    throw DomainError("integrate_halfline: breakpoints must be positive");
  }
  const double first = breakpoints.front();
  const double last = breakpoints.back();
  ComplexIntegrand edge = [&f](double u) { return 2.0 * u * f(u * u); };
  ComplexIntegrand body = [&f](double x) { return f(x); };
  ComplexIntegrand tail = [&f, last](double v) {
    const Complex fx = f(last / (v * v));
    if (fx == 0.0) return Complex{0.0};
    return fx * (2.0 * last / (v * v * v));
  };
  std::vector<std::pair<int, std::pair<double, double>>> initial;
  initial.push_back({0, {0.0, std::sqrt(first)}});
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) throw DomainError("integrate_halfline: breakpoints must increase");
    initial.push_back({1, {breakpoints[i], breakpoints[i + 1]}});
  }
  initial.push_back({2, {0.0, 0.5}});
  initial.push_back({2, {0.5, 1.0}});
  AdaptiveIntegrator engine({edge, body, tail});
  return engine.run(initial, tol, max_panels);
}

QuadratureResult oscillatory_halfline_quad(const RealFunction& profile, double frequency, double tol,
                                           const QuadratureOptions& opts) {
  check_tolerance(tol);
  if (!std::isfinite(frequency)) throw DomainError("oscillatory_halfline_quad: frequency is not finite");
  if (!(opts.scale > 0.0)) throw DomainError("oscillatory_halfline_quad: scale must be positive");

  if (frequency == 0.0) {
    ComplexIntegrand f = [&profile](double x) { return Complex{profile(x)}; };
    const std::array<double, 2> bp{opts.scale, 4.0 * opts.scale};
    QuadratureResult r = integrate_halfline(f, bp, tol, opts.max_panels);
    if (!r.accuracy_reached) {
      // Distinguish a hard integrand from a divergent one: x P(x) must decay.
      const double x1 = 1e4 * opts.scale, x2 = 1e6 * opts.scale;
      if (std::abs(x2 * profile(x2)) >= 0.5 * std::abs(x1 * profile(x1))) {
        throw ConvergenceError("oscillatory_halfline_quad: profile does not decay faster than 1/x");
      }
    }
    return r;
  }

  const double half_period = std::numbers::pi / std::abs(frequency);
  const double quarter = 0.25 * half_period;
  ComplexIntegrand f = [&profile, frequency](double x) { return std::polar(profile(x), -x * frequency); };

  // Head: [0, X0] with X0 a whole number of half periods.
  const double head_end = half_period * std::ceil(std::max(4.0 * opts.scale, 2.0 * half_period) / half_period);
  const double edge_end = std::min(quarter, opts.scale);
  ComplexIntegrand edge = [&f](double u) { return 2.0 * u * f(u * u); };
  std::vector<std::pair<int, std::pair<double, double>>> initial;
  initial.push_back({0, {0.0, std::sqrt(edge_end)}});
  const auto n_head = static_cast<std::size_t>(std::ceil((head_end - edge_end) / quarter));
  for (std::size_t i = 0; i < n_head; ++i) {
    const double lo = edge_end + (head_end - edge_end) * static_cast<double>(i) / static_cast<double>(n_head);
    const double hi = edge_end + (head_end - edge_end) * static_cast<double>(i + 1) / static_cast<double>(n_head);
    initial.push_back({1, {lo, hi}});
  }
  AdaptiveIntegrator head_engine({edge, f});
  QuadratureResult head = head_engine.run(initial, 0.5 * tol, opts.max_panels + n_head);

  // Tail: half-period integrals alternate in sign; extrapolate their partial sums.
  EpsilonTable table;
  Complex partial = 0.0;
  Complex previous_estimate = 0.0;
  Complex previous_estimate2 = 0.0;
  std::vector<double> magnitudes;
  std::size_t evaluations = head.evaluations;
  double panel_error = 0.0;
  bool converged = false;
  Complex estimate = 0.0;
  double extrapolation_error = 0.0;
  const double cycle_tol = 1e-2 * tol;
  for (std::size_t k = 0; k < opts.max_tail_cycles; ++k) {
    const double lo = head_end + half_period * static_cast<double>(k);
    const std::array<double, 5> bp{lo, lo + quarter, lo + 2 * quarter, lo + 3 * quarter, lo + half_period};
    const QuadratureResult cycle = integrate(f, std::span<const double>(bp), cycle_tol, 400);
    evaluations += cycle.evaluations;
    panel_error += cycle.abs_error_estimate;
    partial += cycle.value;
    magnitudes.push_back(std::abs(cycle.value));
    estimate = table.push(partial);

    if (k >= 2) {
      extrapolation_error = std::abs(estimate - previous_estimate) + std::abs(estimate - previous_estimate2);
    }
    previous_estimate2 = previous_estimate;
    previous_estimate = estimate;

    const std::size_t n = magnitudes.size();
    const bool decreasing = n >= 3 && magnitudes[n - 1] < magnitudes[n - 3];
    const bool negligible = n >= 2 && magnitudes[n - 1] + magnitudes[n - 2] <= 1e-3 * tol;
    if (negligible) {
      estimate = partial;
      extrapolation_error = magnitudes[n - 1];
      converged = true;
      break;
    }
    if (k >= 5 && decreasing && extrapolation_error <= 0.5 * tol) {
      converged = true;
      break;
    }
    if (n >= 40 && magnitudes[n - 1] >= 0.99 * magnitudes[n - 21]) {
      throw ConvergenceError("oscillatory_halfline_quad: tail panels do not decrease (profile not integrable?)");
    }
  }

  QuadratureResult out;
  out.value = head.value + estimate;
  out.abs_error_estimate = head.abs_error_estimate + panel_error + extrapolation_error;
  out.evaluations = evaluations;
  out.accuracy_reached = converged && head.accuracy_reached && out.abs_error_estimate <= tol;
  return out;
}

}  // namespace bandedge::specfun
