#include "levicool/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "levicool/constants.hpp"

namespace levicool {

double cooling_power(double energy, double eta, double mass) {
  if (!(energy >= 0.0)) throw std::domain_error("cooling_power: energy must be >= 0");
  return -eta * energy * energy / (2.0 * mass);
}

CoolingSolution cooling_limit(double Edot, double eta, double mass,
                              double omega) {
  if (!(Edot > 0.0 && eta > 0.0 && mass > 0.0 && omega > 0.0))
    throw std::domain_error("cooling_limit: all inputs must be > 0");
  CoolingSolution s;
  s.n_limit = std::sqrt(2.0 * mass * Edot /
                        (eta * constants::hbar * constants::hbar * omega * omega));
  s.E_limit = constants::hbar * omega * s.n_limit;
  s.relaxation_rate = std::sqrt(eta * Edot / (2.0 * mass));
  return s;
}

double energy_trajectory(double E_i, double t, double Edot, double eta,
                         double mass) {
  if (!(E_i >= 0.0)) throw std::domain_error("energy_trajectory: E_i must be >= 0");
  const double g = std::sqrt(eta / (2.0 * mass));
  const double e_limit = std::sqrt(Edot) / g;
  const double num = g * E_i + std::sqrt(Edot);
  const double den = g * E_i - std::sqrt(Edot);
  if (den == 0.0) return e_limit;  // exact fixed point, B undefined
  const double b = num / den;
  const double rate = std::sqrt(eta * Edot / (2.0 * mass));
  return e_limit * (1.0 + 2.0 / (b * std::exp(2.0 * rate * t) - 1.0));
}

}  // namespace levicool
