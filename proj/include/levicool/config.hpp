#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "levicool/dynamics.hpp"

namespace levicool {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key=value run configuration with dotted section keys. Unknown
/// keys are rejected; unset keys keep their defaults. A value of 0 on
/// the "auto" fields means "derive a default".
struct RunConfig {
  struct Particle {
    std::string material = "diamond";  // diamond | silica | custom
    double epsilon = 0.0;              // 0 = material preset
    double density = 0.0;              // kg/m^3, 0 = material preset
    double a_nm = 48.0;
    double b_nm = 53.0;
  } particle;

  struct BeamSection {
    double wavelength_nm = 1064.0;
    double power_mW = 70.0;
    double na = 0.9;
  } beam;

  struct Feedback {
    double eta_x = 0.0, eta_y = 0.0, eta_z = 0.0;  // s/m^2
    double zeta_1 = 0.0, zeta_2 = 0.0;             // s/m^2
    double r_nm = 0.0;                             // 0 = sqrt(a^2 + b^2)
    std::string schedule;  // "t_ms:mult,t_ms:mult", applied in order
  } feedback;

  struct Measurement {
    double N = 0.0;
    std::string velocity_mode = "omega";  // omega | none | diff
  } measurement;

  struct Integrator {
    int steps_per_period = 100;
    int trajectories = 0;  // 0 = per-command default
    std::uint64_t seed = 12345;
    double duration_ms = 0.0;  // 0 = per-command default
    double record_interval_ms = 0.1;
    int threads = 1;
  } integrator;

  struct Run {
    double initial_temperature_K = 1e-6;
  } run;

  struct Sweep {
    std::string parameter = "eta";  // eta | dn
    double min = 3.3e11;            // eta range [s/m^2]
    double max = 3.3e13;
    int points = 7;
    bool log = true;
    std::string n_values = "0,2";   // measurement N per curve
    std::string dn_values = "0.083,0.2,0.3,0.41";  // for parameter = dn
  } sweep;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& c);
std::string config_hash(const RunConfig& c);  // FNV-1a 64 of the serialization

Ellipsoid make_particle(const RunConfig& c);
Beam make_beam(const RunConfig& c);
FeedbackConfig make_feedback(const RunConfig& c);
MeasurementModel make_measurement(const RunConfig& c);
VelocityMode parse_velocity_mode(const std::string& s);

}  // namespace levicool
