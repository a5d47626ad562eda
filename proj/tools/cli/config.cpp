#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bandedge::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& text, const std::string& field) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(field + ": expected a boolean, got '" + text + "'");
}

std::size_t parse_count(const std::string& text, const std::string& field) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(field + ": expected a non-negative integer, got '" + text + "'");
  return v;
}

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(field) + ": must be positive");
}

const char* selection_name(ReservoirSelection s) {
  switch (s) {
    case ReservoirSelection::special: return "special";
    case ReservoirSelection::lorentzian: return "lorentzian";
    case ReservoirSelection::both: return "both";
  }
  return "both";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

double parse_double(const std::string& text, const std::string& field) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(field + ": expected a number, got '" + text + "'");
  }
  return v;
}

void RunConfig::validate() const {
  require_positive(A, "A");
  require_positive(a, "a");
  require_positive(omega0, "omega0");
  require_positive(strong_gamma, "strong_gamma");
  require_positive(strong_lambda, "strong_lambda");
  require_positive(weak_gamma, "weak_gamma");
  require_positive(weak_lambda, "weak_lambda");
  if (n_points < 2) throw ConfigError("n_points: must be at least 2");
  if (!(t_min >= 0.0) || !std::isfinite(t_min)) throw ConfigError("t_min: must be >= 0");
  if (!(t_max > t_min) || !std::isfinite(t_max)) throw ConfigError("t_max: must be greater than t_min");
  if (LorentzianReservoir(strong_gamma, strong_lambda, omega0).regime() != CouplingRegime::strong) {
    throw ConfigError("strong_lambda: the strong set needs strong_lambda < 2 strong_gamma");
  }
  if (LorentzianReservoir(weak_gamma, weak_lambda, omega0).regime() != CouplingRegime::weak) {
    throw ConfigError("weak_lambda: the weak set needs weak_lambda > 2 weak_gamma");
  }
  try {
    (void)initial_state();
  } catch (const PhysicalityError& e) {
    throw ConfigError(std::string("rho11_0/rho10_0: ") + e.what());
  }
}

SpecialReservoir RunConfig::special_reservoir() const {
  return {A * std::pow(a, 2.5), a, omega0 * a};
}

LorentzianReservoir RunConfig::strong_reservoir() const {
  return {strong_gamma * a, strong_lambda * a, omega0 * a};
}

LorentzianReservoir RunConfig::weak_reservoir() const {
  return {weak_gamma * a, weak_lambda * a, omega0 * a};
}

QubitState RunConfig::initial_state() const { return {rho11_0, Complex{rho10_0_re, rho10_0_im}}; }

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return {
      {"preset", preset},
      {"reservoir", selection_name(reservoir)},
      {"A", format_double(A)},
      {"a", format_double(a)},
      {"omega0", format_double(omega0)},
      {"strong_gamma", format_double(strong_gamma)},
      {"strong_lambda", format_double(strong_lambda)},
      {"weak_gamma", format_double(weak_gamma)},
      {"weak_lambda", format_double(weak_lambda)},
      {"rho11_0", format_double(rho11_0)},
      {"rho10_0_re", format_double(rho10_0_re)},
      {"rho10_0_im", format_double(rho10_0_im)},
      {"t_min", format_double(t_min)},
      {"t_max", format_double(t_max)},
      {"time_unit", time_unit == TimeUnit::tau ? "tau" : "inv_a"},
      {"n_points", std::to_string(n_points)},
      {"log_scale", b(log_scale)},
      {"oracle_volterra", b(oracle_volterra)},
      {"oracle_laplace", b(oracle_laplace)},
      {"svg", b(svg)},
      {"json", b(json)},
      {"out", out},
  };
}

std::vector<std::string> preset_names() { return {"paper-fig1", "paper-fig2"}; }

RunConfig preset(const std::string& name) {
  RunConfig cfg;
  if (name == "paper-fig1") return cfg;
  if (name == "paper-fig2") {
    cfg.preset = name;
    cfg.t_min = 3.2;
    cfg.t_max = 30.0;
    cfg.log_scale = true;
    return cfg;
  }
  throw ConfigError("preset: unknown preset '" + name + "'");
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "preset") {
    const RunConfig base = preset(value);
    const std::string out = cfg.out;
    cfg = base;
    cfg.out = out;
  } else if (key == "reservoir") {
    if (value == "special") cfg.reservoir = ReservoirSelection::special;
    else if (value == "lorentzian") cfg.reservoir = ReservoirSelection::lorentzian;
    else if (value == "both") cfg.reservoir = ReservoirSelection::both;
    else throw ConfigError("reservoir: expected special|lorentzian|both, got '" + value + "'");
  } else if (key == "A") cfg.A = parse_double(value, key);
  else if (key == "a") cfg.a = parse_double(value, key);
  else if (key == "omega0") cfg.omega0 = parse_double(value, key);
  else if (key == "strong_gamma") cfg.strong_gamma = parse_double(value, key);
  else if (key == "strong_lambda") cfg.strong_lambda = parse_double(value, key);
  else if (key == "weak_gamma") cfg.weak_gamma = parse_double(value, key);
  else if (key == "weak_lambda") cfg.weak_lambda = parse_double(value, key);
  else if (key == "rho11_0") cfg.rho11_0 = parse_double(value, key);
  else if (key == "rho10_0_re") cfg.rho10_0_re = parse_double(value, key);
  else if (key == "rho10_0_im") cfg.rho10_0_im = parse_double(value, key);
  else if (key == "t_min") cfg.t_min = parse_double(value, key);
  else if (key == "t_max") cfg.t_max = parse_double(value, key);
  else if (key == "time_unit") {
    if (value == "tau") cfg.time_unit = TimeUnit::tau;
    else if (value == "inv_a") cfg.time_unit = TimeUnit::inv_a;
    else throw ConfigError("time_unit: expected tau|inv_a, got '" + value + "'");
  } else if (key == "n_points") cfg.n_points = parse_count(value, key);
  else if (key == "log_scale") cfg.log_scale = parse_bool(value, key);
  else if (key == "oracle_volterra") cfg.oracle_volterra = parse_bool(value, key);
  else if (key == "oracle_laplace") cfg.oracle_laplace = parse_bool(value, key);
  else if (key == "svg") cfg.svg = parse_bool(value, key);
  else if (key == "json") cfg.json = parse_bool(value, key);
  else if (key == "out") cfg.out = value;
  else throw ConfigError("unknown key '" + key + "'");
}

void apply_text(RunConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      apply(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void apply_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_text(cfg, buf.str());
}

}  // namespace bandedge::cli
