#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cohsim/scenarios.hpp"

namespace cohsim {

struct FileEntry {
  std::string name;
  std::uint64_t bytes = 0;
  std::string fnv1a64;
};

struct RunManifest {
  std::string tool = "cohsim";
  std::string version;
  std::string config_hash;
  ScenarioConfig config;
  double wall_seconds = 0.0;
  std::vector<FileEntry> outputs;
  std::map<std::string, double> metadata;
  std::vector<std::pair<std::string, double>> mu_time_average;
};

/// Writes the figure-ready CSV set plus manifest.json into out_dir:
///   timeseries.csv               time, then per state dx2, mu, energy, norm
///   density_<state>.csv          first row x coordinates, first column times
///   g1_<state>_t<T>.csv          Re block left, Im block right; masked -> nan
///   bohm_<state>_t<T>.csv        x, q, f, valid flags; masked -> nan
/// Numbers are printed with 17 significant digits (bitwise round-trip).
/// Refuses to overwrite existing outputs unless `overwrite` is set.
/// `wall_seconds` (the caller's run timing) is embedded in the manifest.
RunManifest export_result(const ScenarioResult& result,
                          const std::filesystem::path& out_dir,
                          bool overwrite = false, double wall_seconds = 0.0);

/// manifest.json payload for a manifest (17-digit numbers).
std::string manifest_to_json(const RunManifest& manifest);

}  // namespace cohsim
