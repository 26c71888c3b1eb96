#pragma once

namespace levicool {

/// Trapping laser: linearly polarized along z, propagating along +y.
struct Beam {
  double wavelength;          // m
  double power;               // W
  double numerical_aperture;  // (0, 1]

  Beam(double wavelength_, double power_, double numerical_aperture_);
};

/// Gaussian-focus parameters derived from a Beam.
struct FocusParameters {
  double w0;               // waist, lambda/(pi NA) [m]
  double y0;               // axial length, pi w0^2/lambda [m]
  double intensity;        // P k0^2 NA^2/(2 pi) [W/m^2]
  double field_amplitude;  // sqrt(2 I/(c eps0)) [V/m]
  double photon_flux;      // I lambda/(2 pi hbar c) [1/m^2/s]
  double k0;               // 2 pi/lambda [1/m]
};

FocusParameters focus(const Beam& b);

}  // namespace levicool
