#pragma once

#include "levicool/beam.hpp"
#include "levicool/particle.hpp"

namespace levicool {

struct TrapFrequencies {
  double omega_x;      // = omega_z [rad/s]
  double omega_y;
  double omega_z;
  double omega_beta1;  // = omega_beta2
  double omega_beta2;
};

/// The four rotation-vs-translation comparison quotients.
struct RatioSet {
  double energy;      // Edot_R/Edot_T
  double omega;       // omega_beta1/omega_x
  double ndot;        // <ndot>_R/<ndot>_T
  double dn;          // Delta n_R/Delta n_T
};

/// One table row: everything derived from a (particle, beam) pair.
/// Heating rates are per degree of freedom in J/s; the z rate is
/// Edot_T/2, each librational rate is Edot_R.
struct TrapCharacterization {
  double mass;        // kg
  double inertia_i1;  // kg m^2
  PolarizabilityTensor alpha;
  TrapFrequencies freq;
  double Edot_T;              // per x or y DOF [J/s]
  double Edot_R;              // per librational DOF [J/s]
  double momentum_diffusion;  // Edot_T m/hbar^2
  RatioSet ratios;            // exact quotients of the stored fields

  double beta_max(double temperature) const;  // sqrt(2 kB T/(I1 w_b^2)) [rad]
};

double translational_heating_rate(const Ellipsoid& p, const FocusParameters& f);
double rotational_heating_rate(const Ellipsoid& p, const FocusParameters& f);

/// Off-diagonal decay rate between orientations (alpha, beta) and
/// (alpha2, beta2); gamma does not enter for a symmetric top.
double rotational_localization_rate(const Ellipsoid& p, const FocusParameters& f,
                                    double alpha, double beta, double alpha2,
                                    double beta2);

/// Throws std::domain_error when alpha_z < alpha_x (no stable alignment).
TrapFrequencies trap_frequencies(double mass, double inertia_i1,
                                 const PolarizabilityTensor& t,
                                 const FocusParameters& f);
TrapFrequencies trap_frequencies(const Ellipsoid& p, const FocusParameters& f);

/// Exact quotients of the per-DOF rates and frequencies.
RatioSet ratios(const Ellipsoid& p, const FocusParameters& f);

/// Small-oscillation closed forms; agree with the exact quotients to a
/// few percent over the geometries of interest.
RatioSet approximate_ratios(const Ellipsoid& p, const Beam& b);

double occupation(double energy, double omega);      // E/(hbar w)
double delta_n(double heating_rate, double omega);   // 2 pi Edot/(hbar w^2)

TrapCharacterization characterize(const Ellipsoid& p, const Beam& b);

}  // namespace levicool
