#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bandedge/dynamics.hpp"
#include "bandedge/errors.hpp"
#include "bandedge/lorentzian.hpp"
#include "bandedge/reservoir.hpp"

namespace bandedge::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kIoError = 3 };

/// Invalid configuration (unknown key, unparsable or out-of-range value).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class ReservoirSelection { special, lorentzian, both };
enum class TimeUnit { tau, inv_a };

/// All quantities are in units of the band-edge width a: A in a^{5/2},
/// frequencies in a, times in 1/a or in the time scale τ.
struct RunConfig {
  std::string preset = "paper-fig1";
  ReservoirSelection reservoir = ReservoirSelection::both;
  double A = 0.8;
  double a = 1.0;
  double omega0 = 0.5;
  double strong_gamma = 10.0;
  double strong_lambda = 1.0;
  double weak_gamma = 1.3;
  double weak_lambda = 20.0;
  double rho11_0 = 0.5;
  double rho10_0_re = 0.2;
  double rho10_0_im = 0.0;
  double t_min = 0.0;
  double t_max = 5.9;
  TimeUnit time_unit = TimeUnit::tau;
  std::size_t n_points = 400;
  bool log_scale = false;
  bool oracle_volterra = false;
  bool oracle_laplace = false;
  bool svg = false;
  bool json = false;
  /// Output directory; empty means the working directory for trajectory
  /// files and no file output for roots.
  std::string out;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  SpecialReservoir special_reservoir() const;
  LorentzianReservoir strong_reservoir() const;
  LorentzianReservoir weak_reservoir() const;
  QubitState initial_state() const;

  /// key -> value text, in a fixed key order, for file headers.
  std::vector<std::pair<std::string, std::string>> entries() const;
};

/// Named parameter sets: "paper-fig1" (0 <= t/τ <= 5.9) and "paper-fig2"
/// (3.2 <= t/τ <= 30, logarithmic ordinate).
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

/// Sets one key from its textual value. Throws ConfigError.
void apply(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parses "key = value" lines; '#' starts a comment. Throws ConfigError with
/// the line number on malformed input.
void apply_text(RunConfig& cfg, const std::string& text);

/// Reads and applies a config file. Throws IoError when it cannot be read.
void apply_file(RunConfig& cfg, const std::string& path);

/// Locale-independent shortest round-trip formatting.
std::string format_double(double v);
/// Locale-independent parsing of the whole string. Throws ConfigError.
double parse_double(const std::string& text, const std::string& field);

}  // namespace bandedge::cli
