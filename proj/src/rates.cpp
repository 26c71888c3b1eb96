#include "levicool/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "levicool/constants.hpp"

namespace levicool {

using namespace constants;

namespace {

// (8 pi Jp/3) (k0^2/(4 pi eps0))^2, shared by both heating rates.
double scatter_prefactor(const FocusParameters& f) {
  const double g = f.k0 * f.k0 / (4.0 * pi * eps0);
  return 8.0 * pi * f.photon_flux / 3.0 * g * g;
}

}  // namespace

double translational_heating_rate(const Ellipsoid& p, const FocusParameters& f) {
  const double az = polarizability(p).alpha_z;
  const double m = mass(p);
  return scatter_prefactor(f) * az * az * hbar * hbar * f.k0 * f.k0 / (2.0 * m);
}

double rotational_heating_rate(const Ellipsoid& p, const FocusParameters& f) {
  const auto t = polarizability(p);
  const double da = t.alpha_z - t.alpha_x;
  const double i1 = moments_of_inertia(p).i1;
  return scatter_prefactor(f) * da * da * hbar * hbar / (2.0 * i1);
}

double rotational_localization_rate(const Ellipsoid& p, const FocusParameters& f,
                                    double alpha, double beta, double alpha2,
                                    double beta2) {
  const auto t = polarizability(p);
  const double da = t.alpha_z - t.alpha_x;
  const double g = f.k0 * f.k0 / (4.0 * pi * eps0);
  // 1 - cos2b cos2b' - cos(a-a') sin2b sin2b', written so equal
  // orientations give exactly zero
  const double sb = std::sin(beta - beta2);
  const double sa = std::sin(0.5 * (alpha - alpha2));
  const double angular = 2.0 * sb * sb + 2.0 * sa * sa *
                                             std::sin(2.0 * beta) *
                                             std::sin(2.0 * beta2);
  return 0.5 * f.photon_flux * g * g * (2.0 * pi / 3.0) * da * da * angular;
}

TrapFrequencies trap_frequencies(double mass, double inertia_i1,
                                 const PolarizabilityTensor& t,
                                 const FocusParameters& f) {
  if (t.alpha_z < t.alpha_x)
    throw std::domain_error(
        "trap_frequencies: alpha_z < alpha_x, no stable alignment");
  TrapFrequencies w;
  const double e0 = f.field_amplitude;
  w.omega_x = std::sqrt(t.alpha_z / mass) * e0 / f.w0;
  w.omega_z = w.omega_x;
  w.omega_y = std::sqrt(t.alpha_z / (2.0 * mass)) * e0 / f.y0;
  w.omega_beta1 = std::sqrt((t.alpha_z - t.alpha_x) / (2.0 * inertia_i1)) * e0;
  w.omega_beta2 = w.omega_beta1;
  return w;
}

TrapFrequencies trap_frequencies(const Ellipsoid& p, const FocusParameters& f) {
  return trap_frequencies(mass(p), moments_of_inertia(p).i1, polarizability(p), f);
}

RatioSet ratios(const Ellipsoid& p, const FocusParameters& f) {
  const double et = translational_heating_rate(p, f);
  const double er = rotational_heating_rate(p, f);
  const auto w = trap_frequencies(p, f);
  RatioSet r;
  r.energy = er / et;
  if (w.omega_beta1 > 0.0) {
    r.omega = w.omega_beta1 / w.omega_x;
    r.ndot = (er / w.omega_beta1) / (et / w.omega_x);
    r.dn = (er / (w.omega_beta1 * w.omega_beta1)) / (et / (w.omega_x * w.omega_x));
  } else {
    r.omega = 0.0;
    r.ndot = 0.0;
    r.dn = 0.0;
  }
  return r;
}

RatioSet approximate_ratios(const Ellipsoid& p, const Beam& b) {
  const auto t = polarizability(p);
  const double rel = (t.alpha_z - t.alpha_x) / t.alpha_z;
  const double s2 = p.a * p.a + p.b * p.b;
  const double lam = b.wavelength;
  const double w0 = lam / (pi * b.numerical_aperture);
  RatioSet r;
  const double q = lam / (2.0 * pi * std::sqrt(s2));
  r.energy = 5.0 * q * q * rel * rel;
  r.omega = std::sqrt(5.0) * w0 / std::sqrt(2.0 * s2) * std::sqrt(rel);
  r.ndot = r.energy / r.omega;
  r.dn = lam * lam / (2.0 * pi * pi * w0 * w0) * rel;
  return r;
}

double occupation(double energy, double omega) {
  if (!(omega > 0.0)) throw std::domain_error("occupation: omega must be > 0");
  return energy / (hbar * omega);
}

double delta_n(double heating_rate, double omega) {
  if (!(omega > 0.0)) throw std::domain_error("delta_n: omega must be > 0");
  return 2.0 * pi * heating_rate / (hbar * omega * omega);
}

double TrapCharacterization::beta_max(double temperature) const {
  if (!(temperature >= 0.0)) throw std::domain_error("beta_max: T must be >= 0");
  const double wb = freq.omega_beta1;
  if (!(wb > 0.0)) throw std::domain_error("beta_max: omega_beta must be > 0");
  return std::sqrt(2.0 * k_B * temperature / (inertia_i1 * wb * wb));
}

TrapCharacterization characterize(const Ellipsoid& p, const Beam& b) {
  const auto f = focus(b);
  TrapCharacterization c;
  c.mass = mass(p);
  c.inertia_i1 = moments_of_inertia(p).i1;
  c.alpha = polarizability(p);
  c.freq = trap_frequencies(c.mass, c.inertia_i1, c.alpha, f);
  c.Edot_T = translational_heating_rate(p, f);
  c.Edot_R = rotational_heating_rate(p, f);
  c.momentum_diffusion = c.Edot_T * c.mass / (hbar * hbar);
  c.ratios = ratios(p, f);
  return c;
}

}  // namespace levicool
