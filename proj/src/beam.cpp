#include "levicool/beam.hpp"

#include <cmath>
#include <stdexcept>

#include "levicool/constants.hpp"

namespace levicool {

Beam::Beam(double wavelength_, double power_, double numerical_aperture_)
    : wavelength(wavelength_),
      power(power_),
      numerical_aperture(numerical_aperture_) {
  if (!(wavelength > 0.0)) throw std::invalid_argument("Beam: wavelength must be > 0");
  if (!(power >= 0.0)) throw std::invalid_argument("Beam: power must be >= 0");
  if (!(numerical_aperture > 0.0 && numerical_aperture <= 1.0))
    throw std::invalid_argument("Beam: NA must be in (0, 1]");
}

FocusParameters focus(const Beam& b) {
  using namespace constants;
  FocusParameters f;
  f.k0 = 2.0 * pi / b.wavelength;
  f.w0 = b.wavelength / (pi * b.numerical_aperture);
  f.y0 = pi * f.w0 * f.w0 / b.wavelength;
  f.intensity = b.power * f.k0 * f.k0 * b.numerical_aperture *
                b.numerical_aperture / (2.0 * pi);
  f.photon_flux = f.intensity * b.wavelength / (2.0 * pi * hbar * c);
  f.field_amplitude = std::sqrt(2.0 * f.intensity / (c * eps0));
  return f;
}

}  // namespace levicool
