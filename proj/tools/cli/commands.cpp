#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bandedge/lorentzian.hpp"
#include "bandedge/oracle.hpp"
#include "bandedge/version.hpp"
#include "cli/csv.hpp"
#include "cli/svg.hpp"

namespace bandedge::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kVolterraTol = 1e-4;
constexpr double kInversionTol = 1e-6;
constexpr double kLorentzianVolterraTol = 1e-6;

std::string sci(double v) {
  char buf[48];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 3);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::string general(double v, int digits = 10) {
  char buf[48];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::vector<std::string> base_header(const RunConfig& cfg, const std::string& command) {
  std::vector<std::string> h{"bandedge_version = " + std::string(kVersion), "command = " + command};
  for (const auto& [k, v] : cfg.entries()) h.push_back(k + " = " + v);
  return h;
}

std::filesystem::path output_dir(const RunConfig& cfg) {
  std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  return dir;
}

// Lorentzian G̃_L(u) = (u + λ) / (u² + λu + γλ/2).
Complex lorentzian_transform(const LorentzianReservoir& r, Complex u) {
  const double g = r.decay_rate(), l = r.spectral_width();
  return (u + l) / (u * u + l * u + 0.5 * g * l);
}

// Contour size hints for the inversion oracle: |Im| of the complex poles of G̃.
double special_pole_frequency(const QuarticSolution& sol) {
  double w = 0.0;
  for (const auto& p : pole_terms(sol)) w = std::max(w, std::abs(p.rate.imag()));
  return w;
}

double lorentzian_pole_frequency(const LorentzianReservoir& r) {
  const double g = r.decay_rate(), l = r.spectral_width();
  return r.regime() == CouplingRegime::strong ? 0.5 * std::sqrt(2.0 * g * l - l * l) : 0.0;
}

double lorentzian_volterra_step(const LorentzianReservoir& r) {
  const double g = r.decay_rate(), l = r.spectral_width();
  const double fastest = std::max(l, std::sqrt(2.0 * g * l));
  return 1.0 / (400.0 * fastest);
}

// Indices of up to n grid points with t > 0, evenly spread.
std::vector<std::size_t> sample_indices(const std::vector<double>& times, std::size_t n) {
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] > 0.0) positive.push_back(i);
  }
  if (positive.size() <= n) return positive;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(positive[k * (positive.size() - 1) / (n - 1)]);
  return out;
}

struct Check {
  std::string name;
  double measured;
  double allowed;
  bool at_most = true;  // pass iff measured <= allowed (else measured >= allowed)
  std::string note;

  bool passed() const { return std::isfinite(measured) && (at_most ? measured <= allowed : measured >= allowed); }
};

double max_abs_diff(const std::vector<double>& times, const std::function<Complex(double)>& a,
                    const std::function<Complex(double)>& b) {
  double m = 0.0;
  for (double t : times) m = std::max(m, std::abs(a(t) - b(t)));
  return m;
}

// Compares G with the inversion oracle on up to 16 grid points. Points beyond
// the oracle's reach are skipped and reported as such.
void inversion_check(TrajectorySet& set, const std::string& model, const std::vector<double>& times,
                     const oracle::InversionConfig& ic, const std::function<Complex(double)>& G,
                     const oracle::Transform& transform) {
  double worst = 0.0;
  std::size_t skipped = 0;
  for (std::size_t i : sample_indices(times, 16)) {
    const auto inv = oracle::laplace_invert(transform, times[i], ic);
    if (!std::isfinite(inv.error_estimate)) {
      ++skipped;
      continue;
    }
    worst = std::max(worst, std::abs(inv.value - G(times[i])));
  }
  if (worst > kInversionTol) {
    set.warnings.push_back(model + ": Laplace inversion differs by " + sci(worst) + " > " + sci(kInversionTol));
  }
  if (skipped > 0) {
    set.warnings.push_back(model + ": Laplace inversion not applicable at " + std::to_string(skipped) +
                           " late sample times (contour cannot enclose the poles)");
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> header_values(const std::vector<std::string>& comments) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : comments) {
    const auto eq = c.find(" = ");
    if (eq == std::string::npos) continue;
    out.emplace_back(c.substr(0, eq), c.substr(eq + 3));
  }
  return out;
}

TrajectorySet compute_trajectories(const RunConfig& cfg) {
  TrajectorySet set;
  const SpecialReservoir special = cfg.special_reservoir();
  const QuarticSolution sol = solve_quartic(special);
  set.tau = asymptotics(sol).tau;
  set.time_unit = cfg.time_unit == TimeUnit::tau ? set.tau : 1.0 / special.width();
  set.grid = uniform_grid(cfg.t_min, cfg.t_max, cfg.n_points);

  std::vector<double> times;
  times.reserve(set.grid.size());
  for (double t : set.grid) times.push_back(t * set.time_unit);
  const QubitState initial = cfg.initial_state();
  const double w0 = special.omega0();
  const double t_end = times.back();

  if (cfg.reservoir != ReservoirSelection::lorentzian) {
    auto G = [&](double t) { return propagator(sol, t); };
    set.curves.push_back({"special", "band-edge reservoir", make_trajectory(initial, w0, times, G)});
    if (cfg.oracle_laplace) {
      oracle::InversionConfig ic;
      ic.max_frequency = special_pole_frequency(sol);
      inversion_check(set, "special", times, ic, G,
                      [&](Complex u) { return laplace_propagator_closed_form(special, u); });
    }
    if (cfg.oracle_volterra) {
      oracle::VolterraConfig vc;
      vc.horizon = t_end;
      vc.step = std::max(std::min(set.tau, 1.0 / special.width()) / 2000.0, t_end / 40000.0);
      const auto vs = oracle::volterra_solve(oracle::special_kernel(special), vc);
      const double worst = max_abs_diff(times, [&](double t) { return vs.at(t); }, G);
      if (worst > kVolterraTol) {
        set.warnings.push_back("special: Volterra solution differs from the closed form by " + sci(worst) + " > " +
                               sci(kVolterraTol));
      }
    }
  }

  if (cfg.reservoir != ReservoirSelection::special) {
    const std::pair<const char*, LorentzianReservoir> models[] = {
        {"lorentzian_strong", cfg.strong_reservoir()},
        {"lorentzian_weak", cfg.weak_reservoir()},
    };
    for (const auto& [name, r] : models) {
      const LorentzianPropagatorParams p(r);
      auto G = [&](double t) { return Complex{propagator_L(p, t), 0.0}; };
      const std::string label = std::string("Lorentzian, ") + to_string(p.regime());
      set.curves.push_back({name, label, make_trajectory(initial, w0, times, G)});
      if (cfg.oracle_laplace) {
        oracle::InversionConfig ic;
        ic.max_frequency = lorentzian_pole_frequency(r);
        inversion_check(set, name, times, ic, G, [&](Complex u) { return lorentzian_transform(r, u); });
      }
      if (cfg.oracle_volterra) {
        oracle::VolterraConfig vc;
        vc.horizon = t_end;
        vc.step = std::max(lorentzian_volterra_step(r), t_end / 40000.0);
        const auto vs = oracle::volterra_solve(oracle::lorentzian_kernel(r), vc);
        const double worst = max_abs_diff(times, [&](double t) { return vs.at(t); }, G);
        if (worst > kLorentzianVolterraTol) {
          set.warnings.push_back(std::string(name) + ": Volterra solution differs from G_L by " + sci(worst) + " > " +
                                 sci(kLorentzianVolterraTol));
        }
      }
    }
  }

  for (const auto& c : set.curves) {
    if (!c.trajectory.non_contractive_times.empty()) {
      set.warnings.push_back(c.name + ": |G| > 1 + 1e-9 at " + std::to_string(c.trajectory.non_contractive_times.size()) +
                             " grid points");
    }
  }
  return set;
}

int cmd_roots(const RunConfig& cfg, const CommandOptions&, std::ostream& out, std::ostream&) {
  cfg.validate();
  const SpecialReservoir r = cfg.special_reservoir();
  const QuarticSolution sol = solve_quartic(r);
  const IdentityReport id = check_identities(sol);
  const AsymptoticSummary as = asymptotics(sol);

  // Report in units of a: z ~ a^{1/2}, R ~ a^{-1/2}, τ ~ 1/a, D ~ a^{-3/2}.
  const double sa = std::sqrt(r.width());
  std::array<Complex, 4> z, R;
  for (std::size_t l = 0; l < 4; ++l) {
    z[l] = sol.roots()[l] / sa;
    R[l] = sol.residues()[l] * sa;
  }
  const double tau = as.tau * r.width();
  const Complex D = as.D * std::pow(r.width(), 1.5);

  if (!cfg.out.empty()) {
    CsvTable table;
    table.comments = base_header(cfg, "roots");
    table.comments.push_back("tau = " + format_double(tau));
    table.comments.push_back("re_D = " + format_double(D.real()));
    table.comments.push_back("im_D = " + format_double(D.imag()));
    table.comments.push_back("abs_D = " + format_double(std::abs(D)));
    table.comments.push_back("residue_sum = " + format_double(id.residue_sum));
    table.comments.push_back("residue_moment = " + format_double(id.residue_moment));
    table.comments.push_back("max_root_residual = " + format_double(id.max_root_residual));
    table.columns = {"l", "re_z", "im_z", "re_R", "im_R"};
    for (std::size_t l = 0; l < 4; ++l) {
      table.rows.push_back({double(l + 1), z[l].real(), z[l].imag(), R[l].real(), R[l].imag()});
    }
    std::ostringstream csv;
    write_csv(csv, table);
    write_file((output_dir(cfg) / "roots.csv").string(), csv.str());
  }

  if (cfg.json) {
    Json j;
    j["bandedge_version"] = kVersion;
    Json c = Json::object();
    for (const auto& [k, v] : cfg.entries()) c[k] = v;
    j["config"] = c;
    j["roots"] = Json::array();
    j["residues"] = Json::array();
    for (std::size_t l = 0; l < 4; ++l) {
      j["roots"].push_back({z[l].real(), z[l].imag()});
      j["residues"].push_back({R[l].real(), R[l].imag()});
    }
    j["tau"] = tau;
    j["D"] = {D.real(), D.imag()};
    j["abs_D"] = std::abs(D);
    j["residue_sum"] = id.residue_sum;
    j["residue_moment"] = id.residue_moment;
    j["max_root_residual"] = id.max_root_residual;
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "bandedge " << kVersion << ": roots of Q for A = " << general(cfg.A) << " a^(5/2), a = " << general(cfg.a) << "\n\n";
  out << " l        Re z_l        Im z_l     Re R(z_l)     Im R(z_l)\n";
  for (std::size_t l = 0; l < 4; ++l) {
    char line[128];
    std::snprintf(line, sizeof line, " %zu %13.8f %13.8f %13.8f %13.8f\n", l + 1, z[l].real(), z[l].imag(), R[l].real(),
                  R[l].imag());
    out << line;
  }
  out << "\n(z in a^(1/2), R in a^(-1/2))\n";
  out << "tau = " << general(tau) << " / a\n";
  out << "|D| = " << general(std::abs(D)) << " a^(-3/2),  D = " << general(D.real()) << (D.imag() < 0 ? " - " : " + ")
      << general(std::abs(D.imag())) << "i\n";
  out << "identity residuals: |sum R| = " << sci(id.residue_sum) << ", |sum R z - 1| = " << sci(id.residue_moment)
      << ", max |Q(z)|/|Q(0)| = " << sci(id.max_root_residual) << '\n';
  return kOk;
}

int cmd_trajectory(const RunConfig& cfg, const CommandOptions&, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const TrajectorySet set = compute_trajectories(cfg);
  const auto dir = output_dir(cfg);
  const double a = cfg.a;

  std::vector<std::string> written;
  for (const auto& curve : set.curves) {
    CsvTable table;
    table.comments = base_header(cfg, "trajectory");
    table.comments.push_back("model = " + curve.name);
    table.comments.push_back("tau = " + format_double(set.tau * a));
    table.comments.push_back("time_column = t a");
    for (const auto& w : set.warnings) table.comments.push_back("warning = " + w);
    table.columns = {"t", "Re(G)", "Im(G)", "abs(G)", "rho11", "Re(rho10)", "Im(rho10)", "abs(rho10)"};
    const auto& tr = curve.trajectory;
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
      const Complex G = tr.G_values[i];
      const QubitState& s = tr.states[i];
      table.rows.push_back({tr.times[i] * a, G.real(), G.imag(), std::abs(G), s.rho11(), s.rho10().real(),
                            s.rho10().imag(), std::abs(s.rho10())});
    }
    std::ostringstream csv;
    write_csv(csv, table);
    const auto path = (dir / (curve.name + ".csv")).string();
    write_file(path, csv.str());
    written.push_back(path);
  }

  if (cfg.svg) {
    static const char* colors[] = {"#000000", "#1f77b4", "#d62728"};
    PlotSpec spec;
    spec.title = "coherence |rho10(t)|";
    spec.x_label = cfg.time_unit == TimeUnit::tau ? "t / tau" : "t a";
    spec.y_label = "|rho10|";
    spec.log_y = cfg.log_scale;
    spec.header = base_header(cfg, "trajectory");
    for (const auto& w : set.warnings) spec.header.push_back("warning = " + w);
    for (std::size_t k = 0; k < set.curves.size(); ++k) {
      const auto& c = set.curves[k];
      Series s;
      s.label = c.label;
      s.x = set.grid;
      for (const auto& st : c.trajectory.states) s.y.push_back(std::abs(st.rho10()));
      s.color = colors[k % 3];
      s.stroke_width = c.name == "special" ? 3.0 : 1.5;
      s.dashed = c.name == "lorentzian_weak";
      spec.series.push_back(std::move(s));
    }
    const auto path = (dir / "rho10.svg").string();
    write_file(path, render_svg(spec));
    written.push_back(path);
  }

  for (const auto& w : set.warnings) err << "warning: " << w << '\n';
  if (cfg.json) {
    Json j;
    j["bandedge_version"] = kVersion;
    j["files"] = written;
    j["warnings"] = set.warnings;
    j["tau"] = set.tau * a;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& p : written) out << "wrote " << p << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream&) {
  cfg.validate();
  if (!opts.inject_fault.empty() && opts.inject_fault != "residue") {
    throw ConfigError("inject-fault: unknown fault '" + opts.inject_fault + "'");
  }
  const SpecialReservoir special = cfg.special_reservoir();
  QuarticSolution sol = solve_quartic(special);
  if (opts.inject_fault == "residue") {
    auto residues = sol.residues();
    residues[0] += 1e-6;
    sol = QuarticSolution(sol.roots(), residues, special);
  }
  const double tau = asymptotics(sol).tau;
  const IdentityReport id = check_identities(sol);
  std::vector<Check> checks;
  auto guarded = [&](const std::string& name, double allowed, bool at_most, const std::function<double()>& measure) {
    try {
      checks.push_back({name, measure(), allowed, at_most, {}});
    } catch (const std::exception& e) {
      checks.push_back({name, std::nan(""), allowed, at_most, e.what()});
    }
  };

  checks.push_back({"quartic root residual max|Q(z)|/|Q(0)|", id.max_root_residual, 1e-10});
  checks.push_back({"residue sum identity |sum R|", id.residue_sum, 1e-10});
  checks.push_back({"residue moment identity |sum R z - 1|", id.residue_moment, 1e-10});
  checks.push_back({"root separation min|z_i - z_j|/max|z|", id.min_separation, 1e-8, false});

  guarded("initial value |G(0+) - 1|", 1e-6, true, [&] { return std::abs(propagator(sol, 1e-10 * tau) - 1.0); });

  guarded("transform closed form vs quadrature", 1e-8, true, [&] {
    const auto profile = ShiftedProfile::special(special);
    const double s = 1.0 / tau;
    const Complex us[] = {{0.1 * s, 0.0}, {s, 0.0}, {0.2 * s, -0.7 * s}, {0.5 * s, 2.0 * s}, {3.0 * s, -1.0 * s}};
    double worst = 0.0;
    for (Complex u : us) {
      const Complex q = laplace_propagator(profile, u, 1e-12).value;
      const Complex c = laplace_propagator_closed_form(special, u);
      worst = std::max(worst, std::abs(q - c) / std::max(1.0, std::abs(c)));
    }
    return worst;
  });

  const std::vector<double> probe = {0.1 * tau, tau, 5.0 * tau, 10.0 * tau};
  std::vector<Complex> inverted(probe.size());
  guarded("Laplace inversion vs closed form (t = 0.1, 1, 5, 10 tau)", kInversionTol, true, [&] {
    oracle::InversionConfig ic;
    ic.max_frequency = special_pole_frequency(sol);
    double worst = 0.0;
    for (std::size_t i = 0; i < probe.size(); ++i) {
      inverted[i] =
          oracle::laplace_invert([&](Complex u) { return laplace_propagator_closed_form(special, u); }, probe[i], ic)
              .value;
      worst = std::max(worst, std::abs(inverted[i] - propagator(sol, probe[i])));
    }
    return worst;
  });

  const double horizon = opts.quick ? 2.0 * tau : 10.0 * tau;
  guarded("Volterra vs closed form on [0, " + general(horizon / tau, 3) + " tau]", kVolterraTol, true, [&] {
    oracle::VolterraConfig vc;
    vc.horizon = horizon;
    vc.step = std::min(tau, 1.0 / special.width()) / (opts.quick ? 1000.0 : 2000.0);
    const auto vs = oracle::volterra_solve(oracle::special_kernel(special), vc);
    double worst = 0.0;
    for (std::size_t i = 0; i < vs.times.size(); ++i) {
      worst = std::max(worst, std::abs(vs.values[i] - propagator(sol, vs.times[i])));
    }
    for (std::size_t i = 0; i < probe.size(); ++i) {
      if (probe[i] <= horizon && is_finite(inverted[i])) worst = std::max(worst, std::abs(vs.at(probe[i]) - inverted[i]));
    }
    return worst;
  });

  guarded("contractivity max(|G| - 1) on [0, 100 tau]", 1e-9, true, [&] {
    double worst = -1.0;
    const std::size_t n = opts.quick ? 2000 : 20000;
    for (std::size_t i = 0; i <= n; ++i) worst = std::max(worst, std::abs(propagator(sol, 100.0 * tau * i / n)) - 1.0);
    return worst;
  });

  guarded("positivity min(rho11 rho00 - |rho10|^2) along trajectory", -1e-12, false, [&] {
    std::vector<QubitState> states{cfg.initial_state()};
    for (int k = 0; k < 8; ++k) {
      const double th = 0.3 + 0.35 * k, ph = 0.9 * k;
      states.emplace_back(std::pow(std::cos(th / 2), 2),
                          std::sin(th / 2) * std::cos(th / 2) * Complex{std::cos(ph), std::sin(ph)});
    }
    const auto grid = uniform_grid(0.0, 20.0 * tau, opts.quick ? 200 : 2000);
    std::vector<Complex> Gs;
    for (double t : grid) Gs.push_back(propagator(sol, t));
    double worst = 1.0;
    for (const auto& s0 : states) {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const QubitState s = evolve(s0, Gs[i], special.omega0(), grid[i]);
        worst = std::min(worst, s.rho11() * s.rho00() - std::norm(s.rho10()));
        if (s.rho11() + s.rho00() != 1.0) return -1.0;
      }
    }
    return worst;
  });

  const std::pair<const char*, LorentzianReservoir> models[] = {{"strong", cfg.strong_reservoir()},
                                                                {"weak", cfg.weak_reservoir()}};
  for (const auto& [name, r] : models) {
    const LorentzianPropagatorParams p(r);
    const double span = 10.0 / r.spectral_width();
    guarded(std::string("Lorentzian ") + name + " Volterra vs G_L on [0, 10/lambda]", kLorentzianVolterraTol, true, [&] {
      oracle::VolterraConfig vc;
      vc.horizon = span;
      vc.step = lorentzian_volterra_step(r);
      vc.step = std::min(vc.step, span / 100.0);
      const auto vs = oracle::volterra_solve(oracle::lorentzian_kernel(r), vc);
      double worst = 0.0;
      for (std::size_t i = 0; i < vs.times.size(); ++i) {
        worst = std::max(worst, std::abs(vs.values[i] - propagator_L(p, vs.times[i])));
      }
      return worst;
    });
  }
  guarded("Lorentzian strong zeros max|G_L(t_n)|, n = 1..5", 1e-10, true, [&] {
    const LorentzianPropagatorParams p(cfg.strong_reservoir());
    double worst = 0.0;
    for (double t : zero_times(p, 5)) worst = std::max(worst, std::abs(propagator_L(p, t)));
    return worst;
  });

  bool ok = true;
  out << "bandedge " << kVersion << " verify" << (opts.quick ? " (quick)" : "") << '\n';
  for (const auto& c : checks) {
    ok = ok && c.passed();
    out << (c.passed() ? "PASS  " : "FAIL  ") << c.name << ": measured " << sci(c.measured)
        << (c.at_most ? ", allowed <= " : ", required >= ") << sci(c.allowed);
    if (!c.note.empty()) out << " (" << c.note << ')';
    out << '\n';
  }
  out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kOk : kCheckFailed;
}

}  // namespace bandedge::cli
