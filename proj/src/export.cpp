#include "cohsim/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cohsim/config.hpp"
#include "cohsim/errors.hpp"
#include "cohsim/version.hpp"

namespace cohsim {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string time_tag(double t) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

std::string state_tag(const std::string& state) {
  std::string s = state;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

class OutputSet {
 public:
  OutputSet(std::filesystem::path dir, bool overwrite)
      : dir_(std::move(dir)), overwrite_(overwrite) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw NumericalError("cannot create output directory " + dir_.string());
  }

  void write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    if (!overwrite_ && std::filesystem::exists(path))
      throw ConfigError("refusing to overwrite " + path.string() +
                        " (pass --overwrite)");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw NumericalError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw NumericalError("write failed for " + path.string());
    entries_.push_back({name, content.size(), fnv1a64_hex(content)});
  }

  std::vector<FileEntry> entries() { return entries_; }

 private:
  std::filesystem::path dir_;
  bool overwrite_;
  std::vector<FileEntry> entries_;
};

std::string timeseries_csv(const ScenarioResult& r) {
  std::ostringstream out;
  out << "time";
  for (const auto& s : r.series) {
    const auto tag = state_tag(s.state);
    out << "," << tag << "_dx2," << tag << "_mu," << tag << "_energy," << tag
        << "_norm";
  }
  out << "\n";
  for (size_t i = 0; i < r.times.size(); ++i) {
    out << g17(r.times[i]);
    for (const auto& s : r.series)
      out << "," << g17(s.dx2[i]) << "," << g17(s.mu[i]) << "," << g17(s.energy[i])
          << "," << g17(s.norm[i]);
    out << "\n";
  }
  return out.str();
}

std::string density_csv(const ScenarioResult& r, const StateSeries& s) {
  const Grid1D grid = make_grid(r.config.x_min, r.config.x_max, r.config.n_points);
  std::ostringstream out;
  out << g17(0.0);  // corner cell; row 0 holds x coordinates
  for (int j = 0; j < grid.n; ++j) out << "," << g17(grid.x(j));
  out << "\n";
  for (size_t i = 0; i < r.times.size(); ++i) {
    out << g17(r.times[i]);
    for (double v : s.density[i]) out << "," << g17(v);
    out << "\n";
  }
  return out.str();
}

std::string g1_csv(const G1Snapshot& snap) {
  const auto& f = snap.field;
  const int n = f.grid.n;
  std::ostringstream out;
  // Header row: x coordinates, once for the Re block and once for the Im block.
  out << g17(0.0);
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < n; ++j) out << "," << g17(f.grid.x(j));
  out << "\n";
  for (int i = 0; i < n; ++i) {
    out << g17(f.grid.x(i));
    for (int j = 0; j < n; ++j)
      out << "," << (f.mask(i, j) ? g17(f.values(i, j).real()) : "nan");
    for (int j = 0; j < n; ++j)
      out << "," << (f.mask(i, j) ? g17(f.values(i, j).imag()) : "nan");
    out << "\n";
  }
  return out.str();
}

std::string bohm_csv(const BohmSnapshot& snap) {
  const auto& f = snap.field;
  std::ostringstream out;
  out << "x,q,f,q_valid,f_valid\n";
  for (int j = 0; j < f.grid.n; ++j) {
    out << g17(f.grid.x(j)) << ",";
    out << (f.mask_q[j] ? g17(f.q[j]) : "nan") << ",";
    out << (f.mask_f[j] ? g17(f.f[j]) : "nan") << ",";
    out << (f.mask_q[j] ? 1 : 0) << "," << (f.mask_f[j] ? 1 : 0) << "\n";
  }
  return out.str();
}

nlohmann::json config_json(const ScenarioConfig& c) {
  nlohmann::json j;
  j["scenario"] = c.scenario;
  j["states"] = c.states;
  j["x_min"] = c.x_min;
  j["x_max"] = c.x_max;
  j["n_points"] = c.n_points;
  j["hard_wall"] = c.hard_wall;
  j["dt"] = c.dt;
  j["duration"] = c.duration;
  j["record_every"] = c.record_every;
  j["fragment_centers"] = c.fragment_centers;
  j["width_exponent"] = c.width_exponent;
  auto region = nlohmann::json::array();
  for (const auto& [lo, hi] : c.mu_region) region.push_back({lo, hi});
  j["mu_region"] = region;
  j["g1_times"] = c.g1_times;
  j["bohm_times"] = c.bohm_times;
  j["g1_resolution"] = c.g1_resolution;
  j["bohm_resolution"] = c.bohm_resolution;
  j["epsilon_rel"] = c.epsilon_rel;
  j["middle_region"] = c.middle_region;
  j["noon_phase"] = c.noon_phase;
  j["barrier_height_factor"] = c.barrier_height_factor;
  j["lattice_amplitude"] = c.lattice_amplitude;
  j["lattice_wavenumber"] = c.lattice_wavenumber;
  j["drive_amplitude"] = c.drive_amplitude;
  j["drive_frequency"] = c.drive_frequency;
  j["dip_depth"] = c.dip_depth;
  j["dip_width"] = c.dip_width;
  j["with_dip"] = c.with_dip;
  if (c.mu_avg_window) j["mu_avg_window"] = {(*c.mu_avg_window)[0], (*c.mu_avg_window)[1]};
  j["threads"] = c.threads;
  return j;
}

}  // namespace

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::json j;
  j["tool"] = m.tool;
  j["version"] = m.version;
  j["config_hash"] = m.config_hash;
  j["resolved_config"] = config_json(m.config);
  j["wall_seconds"] = m.wall_seconds;
  j["metadata"] = m.metadata;
  auto avg = nlohmann::json::object();
  for (const auto& [state, v] : m.mu_time_average) avg[state] = v;
  j["mu_time_average"] = avg;
  auto outs = nlohmann::json::array();
  for (const auto& e : m.outputs)
    outs.push_back({{"file", e.name}, {"bytes", e.bytes}, {"fnv1a64", e.fnv1a64}});
  j["outputs"] = outs;
  return j.dump(2) + "\n";
}

RunManifest export_result(const ScenarioResult& result,
                          const std::filesystem::path& out_dir, bool overwrite,
                          double wall_seconds) {
  OutputSet files(out_dir, overwrite);

  files.write("timeseries.csv", timeseries_csv(result));
  for (const auto& s : result.series)
    files.write("density_" + state_tag(s.state) + ".csv", density_csv(result, s));
  for (const auto& snap : result.g1_snapshots)
    files.write("g1_" + state_tag(snap.state) + "_t" + time_tag(snap.time) + ".csv",
                g1_csv(snap));
  for (const auto& snap : result.bohm_snapshots)
    files.write(
        "bohm_" + state_tag(snap.state) + "_t" + time_tag(snap.time) + ".csv",
        bohm_csv(snap));

  RunManifest manifest;
  manifest.version = kVersion;
  manifest.config = result.config;
  manifest.config_hash = config_hash(result.config);
  manifest.metadata = result.metadata;
  manifest.mu_time_average = result.mu_time_average;
  manifest.outputs = files.entries();
  manifest.wall_seconds = wall_seconds;

  // The manifest lists the CSV outputs; it is written last and not
  // self-referential.
  OutputSet manifest_file(out_dir, overwrite);
  manifest_file.write("manifest.json", manifest_to_json(manifest));
  return manifest;
}

}  // namespace cohsim
