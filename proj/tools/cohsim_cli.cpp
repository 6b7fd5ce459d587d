// Command-line driver: run scenarios from a config file or by catalogue
// name, validate configs, list the catalogue. Exit codes: 0 success,
// 2 config error, 3 numerical failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cohsim/config.hpp"
#include "cohsim/errors.hpp"
#include "cohsim/export.hpp"
#include "cohsim/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cohsim::ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_command(const std::string& config_path, const std::string& scenario,
                const std::string& out_dir, int threads, bool overwrite) {
  cohsim::ScenarioConfig cfg;
  if (!config_path.empty() && !scenario.empty())
    throw cohsim::ConfigError("pass either --config or --scenario, not both");
  if (config_path.empty() && scenario.empty())
    throw cohsim::ConfigError("pass --config <file> or --scenario <name>");
  if (!config_path.empty()) {
    cfg = cohsim::parse_config(read_file(config_path));
  } else {
    cfg = cohsim::default_config(scenario);
    cohsim::validate_config(cfg);
  }
  if (threads > 0) cfg.threads = threads;

  const auto t0 = std::chrono::steady_clock::now();
  auto result = cohsim::run_scenario(cfg);
  const double run_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto manifest = cohsim::export_result(result, out_dir, overwrite, run_seconds);

  std::cout << "wrote " << manifest.outputs.size() + 1 << " files to " << out_dir
            << " (config " << manifest.config_hash << ", "
            << manifest.wall_seconds << " s)\n";
  return 0;
}

int validate_command(const std::string& config_path) {
  const auto cfg = cohsim::parse_config(read_file(config_path));
  std::cout << cohsim::serialize_config(cfg);
  std::cout << "# config_hash: " << cohsim::config_hash(cfg) << "\n";
  return 0;
}

int list_command() {
  for (const auto& name : cohsim::scenario_names()) {
    const auto cfg = cohsim::default_config(name);
    std::cout << name << "  (states:";
    for (const auto& s : cohsim::supported_states(name)) std::cout << " " << s;
    std::cout << "; duration " << cfg.duration << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohsim " + std::string(cohsim::kVersion) +
               " - 1D quantum dynamics of coherent and incoherent fragment states"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a scenario and export CSV results");
  std::string config_path, scenario, out_dir = "cohsim_out";
  int threads = 0;
  bool overwrite = false;
  run->add_option("--config", config_path, "YAML config file");
  run->add_option("--scenario", scenario, "catalogue scenario name (defaults)");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--threads", threads, "parallel independent state runs");
  run->add_flag("--overwrite", overwrite, "replace existing output files");

  auto* validate = app.add_subcommand("validate", "parse a config and print it resolved");
  std::string vpath;
  validate->add_option("--config", vpath, "YAML config file")->required();

  app.add_subcommand("list-scenarios", "print the scenario catalogue");

  try {
    app.parse(argc, argv);
    if (run->parsed()) return run_command(config_path, scenario, out_dir, threads, overwrite);
    if (validate->parsed()) return validate_command(vpath);
    return list_command();
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const cohsim::ConfigError& e) {
    std::cerr << "cohsim: " << e.what() << "\n";
    return 2;
  } catch (const cohsim::NumericalError& e) {
    std::cerr << "cohsim: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "cohsim: " << e.what() << "\n";
    return 3;
  }
}
