#pragma once

namespace levicool {

/// Closed-form feedback-cooling solution for one harmonic DOF with
/// heating rate Edot and parametric gain eta.
struct CoolingSolution {
  double E_limit;          // J
  double n_limit;          // E_limit/(hbar omega)
  double relaxation_rate;  // sqrt(eta Edot/(2 m)) [1/s]
};

/// Cycle-averaged feedback cooling power, -eta E^2/(2 m).
double cooling_power(double energy, double eta, double mass);

/// Steady state of dE/dt = Edot - eta E^2/(2 m).
CoolingSolution cooling_limit(double Edot, double eta, double mass,
                              double omega);

/// Analytic E(t) for dE/dt = Edot - eta E^2/(2 m) from E(0) = E_i.
/// The fixed point E_i = E_limit returns the constant E_limit.
double energy_trajectory(double E_i, double t, double Edot, double eta,
                         double mass);

}  // namespace levicool
