#include "levicool/particle.hpp"

#include <cmath>
#include <stdexcept>

#include "levicool/constants.hpp"

namespace levicool {

namespace {
constexpr double kSeriesSwitch = 1e-2;  // e below this uses the Taylor branch
}

Material::Material(double epsilon_, double density_, std::string label_)
    : epsilon(epsilon_), density(density_), label(std::move(label_)) {
  if (!(epsilon > 1.0)) throw std::invalid_argument("Material: epsilon must be > 1");
  if (!(density > 0.0)) throw std::invalid_argument("Material: density must be > 0");
}

Material Material::diamond() { return Material(5.7, 3500.0, "diamond"); }
Material Material::silica() { return Material(2.1, 2200.0, "silica"); }

Ellipsoid::Ellipsoid(double a_, double b_, Material material_)
    : a(a_), b(b_), material(std::move(material_)) {
  if (!(a >= 0.0) || !(b >= 0.0) || a > b)
    throw std::invalid_argument("Ellipsoid: require 0 <= a <= b");
}

double Ellipsoid::volume() const {
  return 4.0 / 3.0 * constants::pi * a * a * b;
}

double Ellipsoid::ellipticity() const {
  if (b == 0.0) return 0.0;
  return std::sqrt(1.0 - (a * a) / (b * b));
}

double mass(const Ellipsoid& e) { return e.material.density * e.volume(); }

InertiaMoments moments_of_inertia(const Ellipsoid& e) {
  const double m = mass(e);
  return {m * (e.a * e.a + e.b * e.b) / 5.0, 2.0 * m * e.a * e.a / 5.0};
}

DepolarizationFactors depolarization_factors(const Ellipsoid& el) {
  const double e = el.ellipticity();
  double lz;
  if (e < kSeriesSwitch) {
    // Lz = 1/3 - 2e^2/15 - 2e^4/35 - 2e^6/63 + O(e^8)
    const double e2 = e * e;
    lz = 1.0 / 3.0 - e2 * (2.0 / 15.0 + e2 * (2.0 / 35.0 + e2 * (2.0 / 63.0)));
  } else {
    const double e2 = e * e;
    lz = (1.0 - e2) / e2 * (std::log((1.0 + e) / (1.0 - e)) / (2.0 * e) - 1.0);
  }
  const double lx = 0.5 * (1.0 - lz);
  return {lx, lx, lz};
}

PolarizabilityTensor polarizability(const Ellipsoid& e) {
  const double v = e.volume();
  const double de = e.material.epsilon - 1.0;
  const auto l = depolarization_factors(e);
  const double ax = constants::eps0 * v * de / (1.0 + l.lx * de);
  const double az = constants::eps0 * v * de / (1.0 + l.lz * de);
  return {ax, ax, az};
}

Eigen::Matrix3d euler_zyz(double alpha, double beta, double gamma) {
  return (Eigen::AngleAxisd(alpha, Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(beta, Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(gamma, Eigen::Vector3d::UnitZ()))
      .toRotationMatrix();
}

Eigen::Matrix3d rotate_polarizability(const PolarizabilityTensor& t,
                                      double alpha, double beta, double gamma) {
  const Eigen::Matrix3d r = euler_zyz(alpha, beta, gamma);
  const Eigen::Vector3d diag(t.alpha_x, t.alpha_y, t.alpha_z);
  return r.transpose() * diag.asDiagonal() * r;
}

}  // namespace levicool
