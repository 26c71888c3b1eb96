#include "levicool/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "levicool/constants.hpp"

namespace levicool {

using namespace constants;

void FeedbackConfig::validate() const {
  for (double g : eta)
    if (!(g >= 0.0)) throw std::invalid_argument("FeedbackConfig: eta must be >= 0");
  for (double g : zeta)
    if (!(g >= 0.0)) throw std::invalid_argument("FeedbackConfig: zeta must be >= 0");
  if (!(size_scale_r >= 0.0))
    throw std::invalid_argument("FeedbackConfig: size_scale_r must be >= 0");
  double prev = -std::numeric_limits<double>::infinity();
  for (const auto& [t, m] : schedule) {
    if (!(t > prev))
      throw std::invalid_argument("FeedbackConfig: schedule times must increase");
    if (!(m >= 0.0))
      throw std::invalid_argument("FeedbackConfig: schedule multiplier must be >= 0");
    prev = t;
  }
}

double FeedbackConfig::gain_multiplier(double t) const {
  double g = 1.0;
  for (const auto& [ts, m] : schedule) {
    if (t >= ts) g = m;
    else break;
  }
  return g;
}

bool FeedbackConfig::any_gain() const {
  return eta[0] > 0 || eta[1] > 0 || eta[2] > 0 || zeta[0] > 0 || zeta[1] > 0;
}

void IntegratorConfig::validate() const {
  if (steps_per_period < 20)
    throw std::invalid_argument("IntegratorConfig: steps_per_period must be >= 20");
  if (trajectories < 1)
    throw std::invalid_argument("IntegratorConfig: trajectories must be >= 1");
  if (!(record_interval > 0.0))
    throw std::invalid_argument("IntegratorConfig: record_interval must be > 0");
}

DofParams dof_params(const TrapCharacterization& c) {
  DofParams d;
  d.omega << c.freq.omega_x, c.freq.omega_y, c.freq.omega_z, c.freq.omega_beta1,
      c.freq.omega_beta2;
  d.mass << c.mass, c.mass, c.mass, c.inertia_i1, c.inertia_i1;
  d.heating << c.Edot_T, c.Edot_T, 0.5 * c.Edot_T, c.Edot_R, c.Edot_R;
  return d;
}

TrajectorySim::TrajectorySim(const DofParams& dofs, const FeedbackConfig& fb,
                             const MeasurementModel& mm,
                             const IntegratorConfig& ic, std::uint64_t seed,
                             int trajectory_index)
    : dofs_(dofs), fb_(fb), mm_(mm), ic_(ic), rng_(seed),
      index_(trajectory_index) {
  fb_.validate();
  ic_.validate();
  const double wmax = dofs_.omega.maxCoeff();
  if (!(wmax > 0.0))
    throw std::invalid_argument("TrajectorySim: need at least one bound DOF");
  dt_ = 2.0 * pi / wmax / ic_.steps_per_period;
  for (int i = 0; i < 5; ++i) {
    kick_scale_[i] = std::sqrt(2.0 * dofs_.heating[i] * dt_ * dofs_.mass[i]);
    meas_scale_[i] = (mm_.enabled && mm_.N > 0.0 && kick_scale_[i] > 0.0)
                         ? mm_.N * hbar / (2.0 * kick_scale_[i])
                         : 0.0;
  }
}

void TrajectorySim::init_thermal(double temperature) {
  for (int i = 0; i < 5; ++i) {
    const double w = dofs_.omega[i];
    const double m = dofs_.mass[i];
    state_.q[i] = (w > 0.0 && temperature > 0.0)
                      ? rng_.normal() * std::sqrt(k_B * temperature / (m * w * w))
                      : 0.0;
    state_.p[i] =
        temperature > 0.0 ? rng_.normal() * std::sqrt(m * k_B * temperature) : 0.0;
  }
  energy_floor_ = std::max(k_B * temperature, energies().maxCoeff());
  have_prev_qm_ = false;
}

Measurement TrajectorySim::measure() {
  Measurement m;
  m.q = state_.q;
  m.qdot = state_.p.cwiseQuotient(dofs_.mass);
  if (!mm_.enabled || mm_.N <= 0.0) return m;
  for (int i = 0; i < 5; ++i)
    if (meas_scale_[i] > 0.0) m.q[i] += rng_.normal() * meas_scale_[i];
  switch (mm_.velocity_mode) {
    case VelocityMode::none:
      break;
    case VelocityMode::omega_scaled:
      for (int i = 0; i < 5; ++i)
        if (meas_scale_[i] > 0.0)
          m.qdot[i] += rng_.normal() * dofs_.omega[i] * meas_scale_[i];
      break;
    case VelocityMode::finite_difference:
      if (have_prev_qm_) m.qdot = (m.q - prev_qm_) / dt_;
      break;
  }
  prev_qm_ = m.q;
  have_prev_qm_ = true;
  return m;
}

double TrajectorySim::feedback_delta(const Measurement& m) const {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d += fb_.eta[i] * m.q[i] * m.qdot[i];
  const double r2 = fb_.size_scale_r * fb_.size_scale_r;
  for (int j = 0; j < 2; ++j) d += fb_.zeta[j] * r2 * m.q[3 + j] * m.qdot[3 + j];
  return fb_.gain_multiplier(state_.t) * d;
}

void TrajectorySim::step() {
  double delta = 0.0;
  if (fb_.any_gain()) {
    delta = feedback_delta(measure());
    if (!(std::abs(delta) < ic_.delta_abort))
      throw InstabilityError("feedback modulation |Delta| exceeded limit",
                             index_, state_.t);
  }
  // q'' = -w^2 (1 + Delta) q per DOF, Delta frozen across substeps.
  const Vec5 w2 = dofs_.omega.array().square() * (1.0 + delta);
  Vec5 q = state_.q;
  Vec5 v = state_.p.cwiseQuotient(dofs_.mass);
  const Vec5 k1q = v;
  const Vec5 k1v = -w2.cwiseProduct(q);
  const Vec5 k2q = v + 0.5 * dt_ * k1v;
  const Vec5 k2v = -w2.cwiseProduct(q + 0.5 * dt_ * k1q);
  const Vec5 k3q = v + 0.5 * dt_ * k2v;
  const Vec5 k3v = -w2.cwiseProduct(q + 0.5 * dt_ * k2q);
  const Vec5 k4q = v + dt_ * k3v;
  const Vec5 k4v = -w2.cwiseProduct(q + dt_ * k3q);
  q += dt_ / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
  v += dt_ / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  state_.q = q;
  state_.p = v.cwiseProduct(dofs_.mass);
  for (int i = 0; i < 5; ++i)
    if (kick_scale_[i] > 0.0) state_.p[i] += rng_.normal() * kick_scale_[i];
  state_.t += dt_;
  if (!state_.q.allFinite() || !state_.p.allFinite())
    throw InstabilityError("non-finite state", index_, state_.t);
  if (energy_floor_ > 0.0 &&
      energies().maxCoeff() > ic_.energy_abort_factor * energy_floor_)
    throw InstabilityError("energy exploded", index_, state_.t);
}

double TrajectorySim::energy(int dof) const {
  const double m = dofs_.mass[dof];
  const double w = dofs_.omega[dof];
  const double p = state_.p[dof];
  const double q = state_.q[dof];
  return 0.5 * p * p / m + 0.5 * m * w * w * q * q;
}

double TrajectorySim::occupation(int dof) const {
  const double w = dofs_.omega[dof];
  if (!(w > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return energy(dof) / (hbar * w);
}

Vec5 TrajectorySim::energies() const {
  Vec5 e;
  for (int i = 0; i < 5; ++i) e[i] = energy(i);
  return e;
}

TrajectorySeries run_trajectory(const DofParams& dofs, const FeedbackConfig& fb,
                                const MeasurementModel& mm,
                                const IntegratorConfig& ic, std::uint64_t seed,
                                double initial_temperature, double duration,
                                int trajectory_index) {
  TrajectorySim sim(dofs, fb, mm, ic, seed, trajectory_index);
  sim.init_thermal(initial_temperature);
  const double dt = sim.dt();
  const long record_every =
      std::max<long>(1, std::lround(ic.record_interval / dt));
  const long steps = std::lround(duration / dt);
  TrajectorySeries out;
  auto record = [&] {
    out.t.push_back(sim.state().t);
    for (int i = 0; i < 5; ++i) out.energy[i].push_back(sim.energy(i));
  };
  record();
  for (long s = 1; s <= steps; ++s) {
    sim.step();
    if (s % record_every == 0 || s == steps) record();
  }
  return out;
}

EnsembleSeries run_ensemble(const TrapCharacterization& c,
                            const FeedbackConfig& fb, const MeasurementModel& mm,
                            const IntegratorConfig& ic,
                            double initial_temperature, double duration) {
  ic.validate();
  const DofParams dofs = dof_params(c);
  const int n = ic.trajectories;
  std::vector<TrajectorySeries> results(n);
  std::vector<std::string> failures(n);

  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      try {
        results[i] =
            run_trajectory(dofs, fb, mm, ic, trajectory_seed(ic.master_seed, i),
                           initial_temperature, duration, i);
      } catch (const InstabilityError& err) {
        failures[i] = "trajectory " + std::to_string(i) + " at t=" +
                      std::to_string(err.time) + "s: " + err.what();
      }
    }
  };

  int threads = ic.threads > 0 ? ic.threads
                               : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker, t * chunk, std::min(n, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  EnsembleSeries es;
  es.master_seed = ic.master_seed;
  es.trajectories = n;
  const TrajectorySeries* ref = nullptr;
  int ok = 0;
  for (int i = 0; i < n; ++i) {
    if (!failures[i].empty()) {
      es.failures.push_back(failures[i]);
      continue;
    }
    if (!ref) ref = &results[i];
    ++ok;
  }
  if (!ref) {
    if (!es.failures.empty())
      throw InstabilityError("all trajectories failed: " + es.failures.front(),
                             0, 0.0);
    return es;
  }
  const std::size_t samples = ref->t.size();
  es.t = ref->t;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int d = 0; d < 5; ++d) {
    es.mean_energy[d].assign(samples, 0.0);
    es.se_energy[d].assign(samples, nan);
    es.mean_occupation[d].assign(samples, nan);
    es.se_occupation[d].assign(samples, nan);
  }
  for (int d = 0; d < 5; ++d) {
    for (std::size_t s = 0; s < samples; ++s) {
      double sum = 0.0, sumsq = 0.0;
      for (int i = 0; i < n; ++i) {
        if (!failures[i].empty()) continue;
        const double e = results[i].energy[d][s];
        sum += e;
        sumsq += e * e;
      }
      const double mean = sum / ok;
      es.mean_energy[d][s] = mean;
      if (ok > 1) {
        const double var = std::max(0.0, (sumsq - sum * sum / ok) / (ok - 1));
        es.se_energy[d][s] = std::sqrt(var / ok);
      }
      const double w = dofs.omega[d];
      if (w > 0.0) {
        es.mean_occupation[d][s] = mean / (hbar * w);
        if (ok > 1) es.se_occupation[d][s] = es.se_energy[d][s] / (hbar * w);
      }
    }
  }
  return es;
}

}  // namespace levicool
