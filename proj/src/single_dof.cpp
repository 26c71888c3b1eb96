#include "levicool/single_dof.hpp"

#include <cmath>
#include <stdexcept>

#include "levicool/constants.hpp"

namespace levicool {

using constants::pi;

SingleDofSystem dimensionful_x_system(const TrapCharacterization& c, double eta,
                                      double N, VelocityMode vm) {
  SingleDofSystem s;
  s.omega = c.freq.omega_x;
  s.mass = c.mass;
  s.hbar_eff = constants::hbar;
  s.heating = c.Edot_T;
  s.gain = eta;
  s.N = N;
  s.velocity_mode = vm;
  return s;
}

SingleDofSystem scaled_system(double delta_n, double eta_tilde, double N,
                              VelocityMode vm) {
  if (!(delta_n > 0.0)) throw std::invalid_argument("scaled_system: delta_n must be > 0");
  SingleDofSystem s;
  s.omega = 1.0;
  s.mass = 1.0;
  s.hbar_eff = 2.0;  // [x~, p~] scale: a0 = sqrt(hbar/(2 m w))
  s.heating = delta_n / pi;
  s.gain = eta_tilde;
  s.N = N;
  s.velocity_mode = vm;
  return s;
}

SingleDofSim::SingleDofSim(const SingleDofSystem& sys, int steps_per_period,
                           std::uint64_t seed, double delta_abort,
                           double energy_abort_factor, int trajectory_index)
    : sys_(sys), rng_(seed), delta_abort_(delta_abort),
      energy_abort_factor_(energy_abort_factor), index_(trajectory_index) {
  if (steps_per_period < 20)
    throw std::invalid_argument("SingleDofSim: steps_per_period must be >= 20");
  if (!(sys_.omega > 0.0)) throw std::invalid_argument("SingleDofSim: omega must be > 0");
  dt_ = 2.0 * pi / sys_.omega / steps_per_period;
  dp_ = std::sqrt(2.0 * sys_.heating * dt_ * sys_.mass);
  dx_ = (sys_.N > 0.0 && dp_ > 0.0) ? sys_.N * sys_.hbar_eff / (2.0 * dp_) : 0.0;
}

void SingleDofSim::init_phase(double e) {
  const double amp = std::sqrt(2.0 * e / (sys_.mass * sys_.omega * sys_.omega));
  const double phase = 2.0 * pi * rng_.uniform();
  x = amp * std::sin(phase);
  v = amp * sys_.omega * std::cos(phase);
  energy_floor_ = std::max(e, energy());
  have_prev_ = false;
}

void SingleDofSim::init_thermal(double e) {
  x = rng_.normal() * std::sqrt(e / (sys_.mass * sys_.omega * sys_.omega));
  v = rng_.normal() * std::sqrt(e / sys_.mass);
  energy_floor_ = std::max(e, energy());
  have_prev_ = false;
}

double SingleDofSim::energy() const {
  return 0.5 * sys_.mass * (v * v + sys_.omega * sys_.omega * x * x);
}

void SingleDofSim::step() {
  double delta = 0.0;
  if (sys_.gain != 0.0) {
    double xm = x;
    double vm = v;
    if (dx_ > 0.0) {
      xm += rng_.normal() * dx_;
      switch (sys_.velocity_mode) {
        case VelocityMode::none:
          break;
        case VelocityMode::omega_scaled:
          vm += rng_.normal() * sys_.omega * dx_;
          break;
        case VelocityMode::finite_difference:
          if (have_prev_) vm = (xm - prev_xm_) / dt_;
          break;
      }
      prev_xm_ = xm;
      have_prev_ = true;
    }
    delta = sys_.gain * xm * vm;
    if (!(std::abs(delta) < delta_abort_))
      throw InstabilityError("feedback modulation |Delta| exceeded limit",
                             index_, t);
  }
  const double w2 = sys_.omega * sys_.omega * (1.0 + delta);
  const double k1x = v, k1v = -w2 * x;
  const double k2x = v + 0.5 * dt_ * k1v, k2v = -w2 * (x + 0.5 * dt_ * k1x);
  const double k3x = v + 0.5 * dt_ * k2v, k3v = -w2 * (x + 0.5 * dt_ * k2x);
  const double k4x = v + dt_ * k3v, k4v = -w2 * (x + dt_ * k3x);
  x += dt_ / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
  v += dt_ / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  if (dp_ > 0.0) v += rng_.normal() * dp_ / sys_.mass;
  t += dt_;
  if (!std::isfinite(x) || !std::isfinite(v))
    throw InstabilityError("non-finite state", index_, t);
  if (energy_floor_ > 0.0 && energy() > energy_abort_factor_ * energy_floor_)
    throw InstabilityError("energy exploded", index_, t);
}

OccupationSeries run_single_dof(const SingleDofSystem& sys, int steps_per_period,
                                double duration, double record_interval,
                                double initial_occupation, std::uint64_t seed,
                                double delta_abort) {
  SingleDofSim sim(sys, steps_per_period, seed, delta_abort);
  sim.init_phase(initial_occupation * sys.hbar_eff * sys.omega);
  const long record_every =
      std::max<long>(1, std::lround(record_interval / sim.dt()));
  const long steps = std::lround(duration / sim.dt());
  OccupationSeries out;
  out.t.push_back(sim.t);
  out.occupation.push_back(sim.occupation());
  for (long s = 1; s <= steps; ++s) {
    sim.step();
    if (s % record_every == 0 || s == steps) {
      out.t.push_back(sim.t);
      out.occupation.push_back(sim.occupation());
    }
  }
  return out;
}

OccupationSeries run_dimensionless(double delta_n, double N, double eta_tilde,
                                   double duration, double record_interval,
                                   int steps_per_period, std::uint64_t seed) {
  // Noise spikes through the measured signal are part of the model, so
  // the |Delta| guard is left to the energy-explosion check.
  return run_single_dof(scaled_system(delta_n, eta_tilde, N), steps_per_period,
                        duration, record_interval, /*initial_occupation=*/100.0,
                        seed, /*delta_abort=*/1e9);
}

SteadyStateResult steady_state_occupation(const SingleDofSystem& sys,
                                          const SteadyStateOptions& opt) {
  if (!(sys.gain > 0.0))
    throw std::invalid_argument("steady_state_occupation: gain must be > 0");
  const double relax = std::sqrt(sys.gain * sys.heating / (2.0 * sys.mass));
  const double n_limit = std::sqrt(
      2.0 * sys.mass * sys.heating /
      (sys.gain * sys.hbar_eff * sys.hbar_eff * sys.omega * sys.omega));
  const double n0 = opt.initial_occupation > 0.0 ? opt.initial_occupation
                                                 : 3.0 * n_limit + 20.0;

  SteadyStateResult res;
  double sum = 0.0, sumsq = 0.0;
  bool all_converged = true;
  for (int i = 0; i < opt.trajectories; ++i) {
    SingleDofSim sim(sys, opt.steps_per_period,
                     trajectory_seed(opt.master_seed, i), opt.delta_abort,
                     1e6, i);
    sim.init_phase(n0 * sys.hbar_eff * sys.omega);
    const long window_steps = std::max<long>(
        1, std::lround(opt.window_relaxation_times / relax / sim.dt()));
    double prev_mean = -1.0;
    bool converged = false;
    double value = 0.0;
    try {
      for (int w = 0; w < opt.max_windows; ++w) {
        double acc = 0.0;
        for (long s = 0; s < window_steps; ++s) {
          sim.step();
          acc += sim.occupation();
        }
        const double mean = acc / window_steps;
        if (converged) {  // trailing window after convergence
          value = mean;
          break;
        }
        if (prev_mean > 0.0 && std::abs(mean - prev_mean) < opt.rel_tol * mean)
          converged = true;
        prev_mean = mean;
        value = mean;
      }
    } catch (const InstabilityError&) {
      ++res.unstable;
      continue;
    }
    if (!converged) all_converged = false;
    sum += value;
    sumsq += value * value;
    ++res.used;
  }
  if (res.used > 0) {
    res.n_mean = sum / res.used;
    if (res.used > 1) {
      const double var =
          std::max(0.0, (sumsq - sum * sum / res.used) / (res.used - 1));
      res.n_se = std::sqrt(var / res.used);
    }
    res.converged = all_converged;
  }
  return res;
}

}  // namespace levicool
