#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "levicool/rates.hpp"
#include "levicool/rng.hpp"

namespace levicool {

using Vec5 = Eigen::Matrix<double, 5, 1>;

/// How the velocity entering the feedback signal is obtained from the
/// noisy position measurement.
enum class VelocityMode {
  none,               // exact velocity, noise on position only
  omega_scaled,       // independent noise of std omega*dq (default)
  finite_difference,  // (x_m(t) - x_m(t-dt))/dt
};

/// Parametric feedback Delta = g(t) * (sum eta_i x_i xdot_i
///                                     + sum zeta_j r^2 beta_j betadot_j),
/// with g(t) the staged gain multiplier from the schedule.
struct FeedbackConfig {
  std::array<double, 3> eta{0.0, 0.0, 0.0};  // s/m^2, for x, y, z
  std::array<double, 2> zeta{0.0, 0.0};      // s/m^2, for beta1, beta2
  double size_scale_r = 0.0;                 // m
  std::vector<std::pair<double, double>> schedule;  // (switch time s, multiplier)

  void validate() const;
  double gain_multiplier(double t) const;  // 1 before the first switch
  bool any_gain() const;
};

struct MeasurementModel {
  double N = 0.0;  // classical uncertainty multiple, dx dp = N hbar/2
  bool enabled = false;
  VelocityMode velocity_mode = VelocityMode::omega_scaled;
};

/// Coordinates (x, y, z, beta1, beta2) and conjugate momenta.
struct SimState {
  double t = 0.0;
  Vec5 q = Vec5::Zero();
  Vec5 p = Vec5::Zero();
};

struct IntegratorConfig {
  int steps_per_period = 100;  // of the fastest DOF, >= 20
  std::uint64_t master_seed = 1;
  int trajectories = 1;
  double record_interval = 1e-4;  // s
  int threads = 1;                // 0 = hardware concurrency
  double delta_abort = 1.0;       // |Delta| >= this aborts a trajectory
  double energy_abort_factor = 1e6;

  void validate() const;
};

struct InstabilityError : std::runtime_error {
  InstabilityError(const std::string& what, int trajectory_, double time_)
      : std::runtime_error(what), trajectory(trajectory_), time(time_) {}
  int trajectory;
  double time;
};

/// Per-DOF oscillator parameters derived from a characterization:
/// omega = (wx, wy, wz, wb1, wb2), inertial mass (m, m, m, I1, I1) and
/// heating (Et, Et, Et/2, Er, Er).
struct DofParams {
  Vec5 omega;
  Vec5 mass;
  Vec5 heating;
};

DofParams dof_params(const TrapCharacterization& c);

struct Measurement {
  Vec5 q;
  Vec5 qdot;
};

/// One fixed-step trajectory of the 5-DOF system: frozen-Delta RK4 on
/// the deterministic part, then additive momentum kicks.
class TrajectorySim {
 public:
  TrajectorySim(const DofParams& dofs, const FeedbackConfig& fb,
                const MeasurementModel& mm, const IntegratorConfig& ic,
                std::uint64_t seed, int trajectory_index = 0);

  double dt() const { return dt_; }
  const SimState& state() const { return state_; }
  SimState& state() { return state_; }
  NormalRng& rng() { return rng_; }

  void init_thermal(double temperature);
  Measurement measure();
  void step();

  double energy(int dof) const;
  double occupation(int dof) const;  // NaN when omega == 0
  Vec5 energies() const;

  const Vec5& kick_scales() const { return kick_scale_; }
  const Vec5& measurement_scales() const { return meas_scale_; }

 private:
  double feedback_delta(const Measurement& m) const;

  DofParams dofs_;
  FeedbackConfig fb_;
  MeasurementModel mm_;
  IntegratorConfig ic_;
  NormalRng rng_;
  SimState state_;
  Vec5 kick_scale_;  // sqrt(2 Edot dt m) per DOF
  Vec5 meas_scale_;  // N hbar/(2 kick_scale) per DOF
  Vec5 prev_qm_ = Vec5::Zero();
  bool have_prev_qm_ = false;
  double dt_;
  int index_;
  double energy_floor_ = 0.0;  // abort reference, set at init
};

struct TrajectorySeries {
  std::vector<double> t;
  std::array<std::vector<double>, 5> energy;  // J
};

TrajectorySeries run_trajectory(const DofParams& dofs, const FeedbackConfig& fb,
                                const MeasurementModel& mm,
                                const IntegratorConfig& ic, std::uint64_t seed,
                                double initial_temperature, double duration,
                                int trajectory_index = 0);

/// Ensemble mean and standard error per DOF and time sample. Standard
/// errors are NaN for a single trajectory; occupations are NaN for
/// DOFs with zero frequency.
struct EnsembleSeries {
  std::vector<double> t;
  std::array<std::vector<double>, 5> mean_energy, se_energy;
  std::array<std::vector<double>, 5> mean_occupation, se_occupation;
  std::uint64_t master_seed = 0;
  std::string config_hash;
  int trajectories = 0;
  std::vector<std::string> failures;  // per-trajectory abort reports
};

/// Trajectory i is seeded from (master_seed, i); the result is
/// independent of thread count.
EnsembleSeries run_ensemble(const TrapCharacterization& c,
                            const FeedbackConfig& fb, const MeasurementModel& mm,
                            const IntegratorConfig& ic,
                            double initial_temperature, double duration);

}  // namespace levicool
