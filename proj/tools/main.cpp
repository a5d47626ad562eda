#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bandedge/version.hpp"
#include "cli/commands.hpp"

using namespace bandedge::cli;

int main(int argc, char** argv) {
  CLI::App app{"Qubit decoherence next to a photonic band edge"};
  app.set_version_flag("--version", std::string(bandedge::kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string preset_name;
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> overrides;
  bool json = false, svg = false;
  CommandOptions opts;

  app.add_option("--preset", preset_name, "Named parameter set")->check(CLI::IsMember(preset_names()));
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--set", overrides, "Override a config key (key=value), repeatable");
  app.add_flag("--json", json, "Machine-readable output");
  app.add_flag("--svg", svg, "Also write an SVG plot of |rho10|");
  app.add_flag("--quick", opts.quick, "Reduced verification set");
  app.add_option("--inject-fault", opts.inject_fault)->group("");

  auto* roots = app.add_subcommand("roots", "Print the quartic roots, residues, tau and D");
  auto* trajectory = app.add_subcommand("trajectory", "Write G(t) and rho(t) as CSV per model");
  auto* verify = app.add_subcommand("verify", "Run oracle agreement and invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  RunConfig cfg;
  try {
    if (!preset_name.empty()) cfg = preset(preset_name);
    if (!config_path.empty()) apply_file(cfg, config_path);
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set: expected key=value, got '" + kv + "'");
      apply(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!out_dir.empty()) cfg.out = out_dir;
    if (json) cfg.json = true;
    if (svg) cfg.svg = true;

    if (roots->parsed()) return cmd_roots(cfg, opts, std::cout, std::cerr);
    if (trajectory->parsed()) return cmd_trajectory(cfg, opts, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(cfg, opts, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const bandedge::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInvalidInput;
}
