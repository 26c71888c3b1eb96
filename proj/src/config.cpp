#include "levicool/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace levicool {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + v + "'");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": '" + v + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const std::uint64_t x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad seed value for " + key + ": '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("bad boolean value for " + key + ": '" + v + "'");
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  // key -> setter; one entry per accepted key keeps rejection strict
  const std::map<std::string, std::function<void(const std::string&,
                                                 const std::string&)>>
      setters = {
          {"particle.material",
           [&](const std::string& k, const std::string& v) {
             if (v != "diamond" && v != "silica" && v != "custom")
               throw ConfigError("unknown material for " + k + ": '" + v + "'");
             c.particle.material = v;
           }},
          {"particle.epsilon", [&](const std::string& k, const std::string& v) {
             c.particle.epsilon = parse_double(k, v); }},
          {"particle.density", [&](const std::string& k, const std::string& v) {
             c.particle.density = parse_double(k, v); }},
          {"particle.a_nm", [&](const std::string& k, const std::string& v) {
             c.particle.a_nm = parse_double(k, v); }},
          {"particle.b_nm", [&](const std::string& k, const std::string& v) {
             c.particle.b_nm = parse_double(k, v); }},
          {"beam.wavelength_nm", [&](const std::string& k, const std::string& v) {
             c.beam.wavelength_nm = parse_double(k, v); }},
          {"beam.power_mW", [&](const std::string& k, const std::string& v) {
             c.beam.power_mW = parse_double(k, v); }},
          {"beam.na", [&](const std::string& k, const std::string& v) {
             c.beam.na = parse_double(k, v); }},
          {"feedback.eta_x", [&](const std::string& k, const std::string& v) {
             c.feedback.eta_x = parse_double(k, v); }},
          {"feedback.eta_y", [&](const std::string& k, const std::string& v) {
             c.feedback.eta_y = parse_double(k, v); }},
          {"feedback.eta_z", [&](const std::string& k, const std::string& v) {
             c.feedback.eta_z = parse_double(k, v); }},
          {"feedback.zeta_1", [&](const std::string& k, const std::string& v) {
             c.feedback.zeta_1 = parse_double(k, v); }},
          {"feedback.zeta_2", [&](const std::string& k, const std::string& v) {
             c.feedback.zeta_2 = parse_double(k, v); }},
          {"feedback.r_nm", [&](const std::string& k, const std::string& v) {
             c.feedback.r_nm = parse_double(k, v); }},
          {"feedback.schedule", [&](const std::string&, const std::string& v) {
             c.feedback.schedule = v; }},
          {"measurement.N", [&](const std::string& k, const std::string& v) {
             c.measurement.N = parse_double(k, v); }},
          {"measurement.velocity_mode",
           [&](const std::string& k, const std::string& v) {
             parse_velocity_mode(v);  // validates
             (void)k;
             c.measurement.velocity_mode = v;
           }},
          {"integrator.steps_per_period",
           [&](const std::string& k, const std::string& v) {
             c.integrator.steps_per_period = parse_int(k, v); }},
          {"integrator.trajectories",
           [&](const std::string& k, const std::string& v) {
             c.integrator.trajectories = parse_int(k, v); }},
          {"integrator.seed", [&](const std::string& k, const std::string& v) {
             c.integrator.seed = parse_u64(k, v); }},
          {"integrator.duration_ms",
           [&](const std::string& k, const std::string& v) {
             c.integrator.duration_ms = parse_double(k, v); }},
          {"integrator.record_interval_ms",
           [&](const std::string& k, const std::string& v) {
             c.integrator.record_interval_ms = parse_double(k, v); }},
          {"integrator.threads", [&](const std::string& k, const std::string& v) {
             c.integrator.threads = parse_int(k, v); }},
          {"run.initial_temperature_K",
           [&](const std::string& k, const std::string& v) {
             c.run.initial_temperature_K = parse_double(k, v); }},
          {"sweep.parameter", [&](const std::string& k, const std::string& v) {
             if (v != "eta" && v != "dn")
               throw ConfigError("unknown sweep parameter for " + k + ": '" +
                                 v + "'");
             c.sweep.parameter = v;
           }},
          {"sweep.min", [&](const std::string& k, const std::string& v) {
             c.sweep.min = parse_double(k, v); }},
          {"sweep.max", [&](const std::string& k, const std::string& v) {
             c.sweep.max = parse_double(k, v); }},
          {"sweep.points", [&](const std::string& k, const std::string& v) {
             c.sweep.points = parse_int(k, v); }},
          {"sweep.log", [&](const std::string& k, const std::string& v) {
             c.sweep.log = parse_bool(k, v); }},
          {"sweep.n_values", [&](const std::string&, const std::string& v) {
             c.sweep.n_values = v; }},
          {"sweep.dn_values", [&](const std::string&, const std::string& v) {
             c.sweep.dn_values = v; }},
      };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" +
                        key + "'");
    it->second(key, value);
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream o;
  o << "particle.material = " << c.particle.material << "\n"
    << "particle.epsilon = " << fmt(c.particle.epsilon) << "\n"
    << "particle.density = " << fmt(c.particle.density) << "\n"
    << "particle.a_nm = " << fmt(c.particle.a_nm) << "\n"
    << "particle.b_nm = " << fmt(c.particle.b_nm) << "\n"
    << "beam.wavelength_nm = " << fmt(c.beam.wavelength_nm) << "\n"
    << "beam.power_mW = " << fmt(c.beam.power_mW) << "\n"
    << "beam.na = " << fmt(c.beam.na) << "\n"
    << "feedback.eta_x = " << fmt(c.feedback.eta_x) << "\n"
    << "feedback.eta_y = " << fmt(c.feedback.eta_y) << "\n"
    << "feedback.eta_z = " << fmt(c.feedback.eta_z) << "\n"
    << "feedback.zeta_1 = " << fmt(c.feedback.zeta_1) << "\n"
    << "feedback.zeta_2 = " << fmt(c.feedback.zeta_2) << "\n"
    << "feedback.r_nm = " << fmt(c.feedback.r_nm) << "\n"
    << "feedback.schedule = " << c.feedback.schedule << "\n"
    << "measurement.N = " << fmt(c.measurement.N) << "\n"
    << "measurement.velocity_mode = " << c.measurement.velocity_mode << "\n"
    << "integrator.steps_per_period = " << c.integrator.steps_per_period << "\n"
    << "integrator.trajectories = " << c.integrator.trajectories << "\n"
    << "integrator.seed = " << c.integrator.seed << "\n"
    << "integrator.duration_ms = " << fmt(c.integrator.duration_ms) << "\n"
    << "integrator.record_interval_ms = " << fmt(c.integrator.record_interval_ms)
    << "\n"
    << "integrator.threads = " << c.integrator.threads << "\n"
    << "run.initial_temperature_K = " << fmt(c.run.initial_temperature_K) << "\n"
    << "sweep.parameter = " << c.sweep.parameter << "\n"
    << "sweep.min = " << fmt(c.sweep.min) << "\n"
    << "sweep.max = " << fmt(c.sweep.max) << "\n"
    << "sweep.points = " << c.sweep.points << "\n"
    << "sweep.log = " << (c.sweep.log ? "true" : "false") << "\n"
    << "sweep.n_values = " << c.sweep.n_values << "\n"
    << "sweep.dn_values = " << c.sweep.dn_values << "\n";
  return o.str();
}

std::string config_hash(const RunConfig& c) {
  const std::string s = serialize_config(c);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Ellipsoid make_particle(const RunConfig& c) {
  Material m = c.particle.material == "silica" ? Material::silica()
                                               : Material::diamond();
  if (c.particle.material == "custom") {
    if (c.particle.epsilon <= 1.0 || c.particle.density <= 0.0)
      throw ConfigError(
          "particle.material = custom requires particle.epsilon > 1 and "
          "particle.density > 0");
    m = Material(c.particle.epsilon, c.particle.density, "custom");
  } else {
    if (c.particle.epsilon > 0.0) m.epsilon = c.particle.epsilon;
    if (c.particle.density > 0.0) m.density = c.particle.density;
  }
  try {
    return Ellipsoid(c.particle.a_nm * 1e-9, c.particle.b_nm * 1e-9, m);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad particle geometry: ") + e.what());
  }
}

Beam make_beam(const RunConfig& c) {
  try {
    return Beam(c.beam.wavelength_nm * 1e-9, c.beam.power_mW * 1e-3, c.beam.na);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad beam parameters: ") + e.what());
  }
}

FeedbackConfig make_feedback(const RunConfig& c) {
  FeedbackConfig fb;
  fb.eta = {c.feedback.eta_x, c.feedback.eta_y, c.feedback.eta_z};
  fb.zeta = {c.feedback.zeta_1, c.feedback.zeta_2};
  fb.size_scale_r =
      c.feedback.r_nm > 0.0
          ? c.feedback.r_nm * 1e-9
          : std::hypot(c.particle.a_nm, c.particle.b_nm) * 1e-9;
  // schedule "t_ms:mult,t_ms:mult"
  std::istringstream ss(c.feedback.schedule);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("bad schedule entry '" + item +
                        "', expected t_ms:multiplier");
    const double t_ms = parse_double("feedback.schedule", trim(item.substr(0, colon)));
    const double mult = parse_double("feedback.schedule", trim(item.substr(colon + 1)));
    fb.schedule.emplace_back(t_ms * 1e-3, mult);
  }
  try {
    fb.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad feedback configuration: ") + e.what());
  }
  return fb;
}

MeasurementModel make_measurement(const RunConfig& c) {
  MeasurementModel mm;
  if (c.measurement.N < 0.0)
    throw ConfigError("measurement.N must be >= 0");
  mm.N = c.measurement.N;
  mm.enabled = c.measurement.N > 0.0;
  mm.velocity_mode = parse_velocity_mode(c.measurement.velocity_mode);
  return mm;
}

VelocityMode parse_velocity_mode(const std::string& s) {
  if (s == "omega") return VelocityMode::omega_scaled;
  if (s == "none") return VelocityMode::none;
  if (s == "diff") return VelocityMode::finite_difference;
  throw ConfigError("unknown measurement.velocity_mode '" + s +
                    "' (expected omega, none, or diff)");
}

}  // namespace levicool
