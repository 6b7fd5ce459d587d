#include "cohsim/config.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "cohsim/errors.hpp"

namespace cohsim {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void bad_key(const YAML::Node& node, const std::string& what) {
  std::ostringstream msg;
  msg << "config error";
  if (node.Mark().line >= 0)
    msg << " (line " << node.Mark().line + 1 << ", column " << node.Mark().column + 1
        << ")";
  msg << ": " << what;
  throw ConfigError(msg.str());
}

double as_double(const YAML::Node& n, const char* key) {
  try {
    return n.as<double>();
  } catch (const YAML::Exception&) {
    bad_key(n, std::string("key '") + key + "' expects a number");
  }
}

int as_int(const YAML::Node& n, const char* key) {
  try {
    return n.as<int>();
  } catch (const YAML::Exception&) {
    bad_key(n, std::string("key '") + key + "' expects an integer");
  }
}

bool as_bool(const YAML::Node& n, const char* key) {
  try {
    return n.as<bool>();
  } catch (const YAML::Exception&) {
    bad_key(n, std::string("key '") + key + "' expects a boolean");
  }
}

std::vector<double> as_double_list(const YAML::Node& n, const char* key) {
  if (!n.IsSequence()) bad_key(n, std::string("key '") + key + "' expects a list");
  std::vector<double> out;
  for (const auto& e : n) out.push_back(as_double(e, key));
  return out;
}

}  // namespace

std::vector<std::string> supported_states(const std::string& scenario) {
  if (scenario == "figS4_single") return {"SF1"};
  if (scenario == "fig4_driven") return {"SF1", "MI", "SF2"};
  return {"SF1", "MI", "SF2", "NOON", "Mixture"};
}

void validate_config(const ScenarioConfig& cfg) {
  default_config(cfg.scenario);  // throws on unknown scenario, naming choices
  if (cfg.states.empty()) throw ConfigError("'states' must not be empty");
  const auto supported = supported_states(cfg.scenario);
  for (const auto& s : cfg.states) {
    if (std::find(supported.begin(), supported.end(), s) == supported.end()) {
      std::string msg = "state '" + s + "' is not supported by scenario '" +
                        cfg.scenario + "'; supported:";
      for (const auto& t : supported) msg += " " + t;
      throw ConfigError(msg);
    }
  }
  if (!(cfg.x_max > cfg.x_min)) throw ConfigError("grid extent is empty");
  if (cfg.n_points < 8) throw ConfigError("n_points must be at least 8");
  if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(cfg.duration > 0.0)) throw ConfigError("duration must be positive");
  if (cfg.record_every < 1) throw ConfigError("record_every must be >= 1");
  if (!(cfg.width_exponent > 0.0)) throw ConfigError("width_exponent must be positive");
  if (cfg.fragment_centers.empty()) throw ConfigError("fragment_centers is empty");
  for (double c : cfg.fragment_centers)
    if (c <= cfg.x_min || c >= cfg.x_max)
      throw ConfigError("fragment center " + g17(c) + " outside grid (" +
                        g17(cfg.x_min) + ", " + g17(cfg.x_max) + ")");
  for (const auto& [lo, hi] : cfg.mu_region)
    if (!(hi >= lo)) throw ConfigError("mu_region interval has hi < lo");
  for (double t : cfg.g1_times)
    if (t < 0.0 || t > cfg.duration + 1e-12)
      throw ConfigError("g1 time " + g17(t) + " outside the run");
  for (double t : cfg.bohm_times)
    if (t < 0.0 || t > cfg.duration + 1e-12)
      throw ConfigError("bohm time " + g17(t) + " outside the run");
  if (cfg.g1_resolution < 8 || cfg.g1_resolution > cfg.n_points)
    throw ConfigError("g1_resolution must be in [8, n_points]");
  if (cfg.bohm_resolution < 8 || cfg.bohm_resolution > cfg.n_points)
    throw ConfigError("bohm_resolution must be in [8, n_points]");
  if (!(cfg.epsilon_rel > 0.0)) throw ConfigError("epsilon_rel must be positive");
  if (!(cfg.middle_region > 0.0)) throw ConfigError("middle_region must be positive");
  if (!(cfg.barrier_height_factor > 0.0))
    throw ConfigError("barrier_height_factor must be positive");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  if (cfg.mu_avg_window) {
    const auto& [a, b] = *cfg.mu_avg_window;
    if (!(b > a) || a < 0.0 || b > cfg.duration + 1e-12)
      throw ConfigError("mu_avg_window must satisfy 0 <= t0 < t1 <= duration");
  }
}

ScenarioConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    std::ostringstream msg;
    msg << "config syntax error (line " << e.mark.line + 1 << ", column "
        << e.mark.column + 1 << "): " << e.msg;
    throw ConfigError(msg.str());
  }
  if (!root.IsMap()) throw ConfigError("config must be a key-value mapping");
  if (!root["scenario"]) throw ConfigError("config is missing the 'scenario' key");

  ScenarioConfig cfg = default_config(root["scenario"].as<std::string>());

  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (key == "scenario") {
      // already consumed
    } else if (key == "states") {
      if (!v.IsSequence()) bad_key(v, "'states' expects a list of state names");
      cfg.states.clear();
      for (const auto& e : v) cfg.states.push_back(e.as<std::string>());
    } else if (key == "x_min") {
      cfg.x_min = as_double(v, "x_min");
    } else if (key == "x_max") {
      cfg.x_max = as_double(v, "x_max");
    } else if (key == "n_points") {
      cfg.n_points = as_int(v, "n_points");
    } else if (key == "hard_wall") {
      cfg.hard_wall = as_bool(v, "hard_wall");
    } else if (key == "dt") {
      cfg.dt = as_double(v, "dt");
    } else if (key == "duration") {
      cfg.duration = as_double(v, "duration");
    } else if (key == "record_every") {
      cfg.record_every = as_int(v, "record_every");
    } else if (key == "fragment_centers") {
      cfg.fragment_centers = as_double_list(v, "fragment_centers");
    } else if (key == "width_exponent") {
      cfg.width_exponent = as_double(v, "width_exponent");
    } else if (key == "mu_region") {
      if (!v.IsSequence()) bad_key(v, "'mu_region' expects a list of [lo, hi] pairs");
      cfg.mu_region.clear();
      for (const auto& e : v) {
        const auto pair = as_double_list(e, "mu_region");
        if (pair.size() != 2) bad_key(e, "'mu_region' entries are [lo, hi] pairs");
        cfg.mu_region.emplace_back(pair[0], pair[1]);
      }
    } else if (key == "g1_times") {
      cfg.g1_times = as_double_list(v, "g1_times");
    } else if (key == "bohm_times") {
      cfg.bohm_times = as_double_list(v, "bohm_times");
    } else if (key == "g1_resolution") {
      cfg.g1_resolution = as_int(v, "g1_resolution");
    } else if (key == "bohm_resolution") {
      cfg.bohm_resolution = as_int(v, "bohm_resolution");
    } else if (key == "epsilon_rel") {
      cfg.epsilon_rel = as_double(v, "epsilon_rel");
    } else if (key == "middle_region") {
      cfg.middle_region = as_double(v, "middle_region");
    } else if (key == "noon_phase") {
      cfg.noon_phase = as_double(v, "noon_phase");
    } else if (key == "barrier_height_factor") {
      cfg.barrier_height_factor = as_double(v, "barrier_height_factor");
    } else if (key == "lattice_amplitude") {
      cfg.lattice_amplitude = as_double(v, "lattice_amplitude");
    } else if (key == "lattice_wavenumber") {
      cfg.lattice_wavenumber = as_double(v, "lattice_wavenumber");
    } else if (key == "drive_amplitude") {
      cfg.drive_amplitude = as_double(v, "drive_amplitude");
    } else if (key == "drive_frequency") {
      cfg.drive_frequency = as_double(v, "drive_frequency");
    } else if (key == "dip_depth") {
      cfg.dip_depth = as_double(v, "dip_depth");
    } else if (key == "dip_width") {
      cfg.dip_width = as_double(v, "dip_width");
    } else if (key == "with_dip") {
      cfg.with_dip = as_bool(v, "with_dip");
    } else if (key == "mu_avg_window") {
      const auto pair = as_double_list(v, "mu_avg_window");
      if (pair.size() != 2) bad_key(v, "'mu_avg_window' expects [t0, t1]");
      cfg.mu_avg_window = {{pair[0], pair[1]}};
    } else if (key == "threads") {
      cfg.threads = as_int(v, "threads");
    } else {
      bad_key(kv.first, "unknown key '" + key + "'");
    }
  }

  validate_config(cfg);
  return cfg;
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "scenario: " << cfg.scenario << "\n";
  out << "states: [";
  for (size_t i = 0; i < cfg.states.size(); ++i)
    out << (i ? ", " : "") << cfg.states[i];
  out << "]\n";
  out << "x_min: " << g17(cfg.x_min) << "\n";
  out << "x_max: " << g17(cfg.x_max) << "\n";
  out << "n_points: " << cfg.n_points << "\n";
  out << "hard_wall: " << (cfg.hard_wall ? "true" : "false") << "\n";
  out << "dt: " << g17(cfg.dt) << "\n";
  out << "duration: " << g17(cfg.duration) << "\n";
  out << "record_every: " << cfg.record_every << "\n";
  out << "fragment_centers: [";
  for (size_t i = 0; i < cfg.fragment_centers.size(); ++i)
    out << (i ? ", " : "") << g17(cfg.fragment_centers[i]);
  out << "]\n";
  out << "width_exponent: " << g17(cfg.width_exponent) << "\n";
  out << "mu_region: [";
  for (size_t i = 0; i < cfg.mu_region.size(); ++i)
    out << (i ? ", " : "") << "[" << g17(cfg.mu_region[i].first) << ", "
        << g17(cfg.mu_region[i].second) << "]";
  out << "]\n";
  out << "g1_times: [";
  for (size_t i = 0; i < cfg.g1_times.size(); ++i)
    out << (i ? ", " : "") << g17(cfg.g1_times[i]);
  out << "]\n";
  out << "bohm_times: [";
  for (size_t i = 0; i < cfg.bohm_times.size(); ++i)
    out << (i ? ", " : "") << g17(cfg.bohm_times[i]);
  out << "]\n";
  out << "g1_resolution: " << cfg.g1_resolution << "\n";
  out << "bohm_resolution: " << cfg.bohm_resolution << "\n";
  out << "epsilon_rel: " << g17(cfg.epsilon_rel) << "\n";
  out << "middle_region: " << g17(cfg.middle_region) << "\n";
  out << "noon_phase: " << g17(cfg.noon_phase) << "\n";
  out << "barrier_height_factor: " << g17(cfg.barrier_height_factor) << "\n";
  out << "lattice_amplitude: " << g17(cfg.lattice_amplitude) << "\n";
  out << "lattice_wavenumber: " << g17(cfg.lattice_wavenumber) << "\n";
  out << "drive_amplitude: " << g17(cfg.drive_amplitude) << "\n";
  out << "drive_frequency: " << g17(cfg.drive_frequency) << "\n";
  out << "dip_depth: " << g17(cfg.dip_depth) << "\n";
  out << "dip_width: " << g17(cfg.dip_width) << "\n";
  out << "with_dip: " << (cfg.with_dip ? "true" : "false") << "\n";
  if (cfg.mu_avg_window)
    out << "mu_avg_window: [" << g17((*cfg.mu_avg_window)[0]) << ", "
        << g17((*cfg.mu_avg_window)[1]) << "]\n";
  out << "threads: " << cfg.threads << "\n";
  return out.str();
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a64(bytes.data(), bytes.size()));
  return buf;
}

std::string config_hash(const ScenarioConfig& cfg) {
  return fnv1a64_hex(serialize_config(cfg));
}

}  // namespace cohsim
