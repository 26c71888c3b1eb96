#pragma once

#include <cstdint>
#include <vector>

#include "levicool/dynamics.hpp"

namespace levicool {

/// One harmonic DOF with parametric feedback Delta = gain * x_m * xdot_m,
/// in arbitrary consistent units. The dimensionful x-DOF uses
/// (omega_x, m, hbar, Edot_T, eta); the scaled system of the
/// dimensionless mode uses (1, 1, 2, Delta_n/pi, eta hbar/(2 m)).
struct SingleDofSystem {
  double omega = 1.0;
  double mass = 1.0;
  double hbar_eff = 1.0;  // sets dx = N hbar_eff/(2 dp) and n = E/(hbar_eff w)
  double heating = 0.0;   // energy/time
  double gain = 0.0;      // Delta = gain x_m xdot_m
  double N = 0.0;
  VelocityMode velocity_mode = VelocityMode::omega_scaled;
};

SingleDofSystem dimensionful_x_system(const TrapCharacterization& c, double eta,
                                      double N,
                                      VelocityMode vm = VelocityMode::omega_scaled);
SingleDofSystem scaled_system(double delta_n, double eta_tilde, double N,
                              VelocityMode vm = VelocityMode::omega_scaled);

class SingleDofSim {
 public:
  SingleDofSim(const SingleDofSystem& sys, int steps_per_period,
               std::uint64_t seed, double delta_abort = 1.0,
               double energy_abort_factor = 1e6, int trajectory_index = 0);

  double dt() const { return dt_; }
  void init_phase(double energy);    // exact energy, uniform random phase
  void init_thermal(double energy);  // Gaussian x and v with mean energy
  void step();
  double energy() const;
  double occupation() const { return energy() / (sys_.hbar_eff * sys_.omega); }
  double kick_scale() const { return dp_; }
  double measurement_scale() const { return dx_; }

  double x = 0.0;
  double v = 0.0;
  double t = 0.0;

 private:
  SingleDofSystem sys_;
  NormalRng rng_;
  double dt_, dp_, dx_;
  double delta_abort_, energy_abort_factor_, energy_floor_ = 0.0;
  double prev_xm_ = 0.0;
  bool have_prev_ = false;
  int index_;
};

struct OccupationSeries {
  std::vector<double> t;  // in the system's time unit
  std::vector<double> occupation;
};

OccupationSeries run_single_dof(const SingleDofSystem& sys, int steps_per_period,
                                double duration, double record_interval,
                                double initial_occupation, std::uint64_t seed,
                                double delta_abort = 1.0);

/// Scaled single-DOF run; duration and record interval are in scaled
/// time (omega t).
OccupationSeries run_dimensionless(double delta_n, double N, double eta_tilde,
                                   double duration, double record_interval,
                                   int steps_per_period, std::uint64_t seed);

struct SteadyStateOptions {
  int trajectories = 12;
  std::uint64_t master_seed = 1;
  int steps_per_period = 100;
  double initial_occupation = 0.0;  // 0 = auto (a few times n_limit)
  double rel_tol = 0.01;            // windowed convergence threshold
  double window_relaxation_times = 50.0;
  int max_windows = 60;
  double delta_abort = 1e9;  // noise spikes in Delta are expected for N > 0
};

struct SteadyStateResult {
  double n_mean = 0.0;
  double n_se = 0.0;
  bool converged = false;
  int unstable = 0;  // trajectories aborted by the energy guard
  int used = 0;      // trajectories contributing to the mean
};

/// Windowed steady-state detection: windows of 50 relaxation times,
/// converged when consecutive window means agree to rel_tol, then the
/// trailing window is averaged. Ensemble statistics over trajectories.
SteadyStateResult steady_state_occupation(const SingleDofSystem& sys,
                                          const SteadyStateOptions& opt);

}  // namespace levicool
