#pragma once

#include <Eigen/Dense>
#include <string>

namespace levicool {

/// Dielectric material of the trapped particle.
struct Material {
  double epsilon;  // relative dielectric constant, > 1
  double density;  // kg/m^3
  std::string label;

  Material(double epsilon_, double density_, std::string label_ = "");

  static Material diamond();  // eps = 5.7, rho = 3500 kg/m^3
  static Material silica();   // eps = 2.1, rho = 2200 kg/m^3
};

/// Prolate spheroid with short half-axis a (doubly degenerate) and long
/// half-axis b, 0 < a <= b. The sphere a = b is allowed.
struct Ellipsoid {
  double a;  // m
  double b;  // m
  Material material;

  Ellipsoid(double a_, double b_, Material material_);

  double volume() const;       // (4/3) pi a^2 b
  double ellipticity() const;  // sqrt(1 - a^2/b^2), in [0, 1)
};

/// Diagonal polarizability in the body frame (SI, C m^2/V).
struct PolarizabilityTensor {
  double alpha_x;
  double alpha_y;
  double alpha_z;

  double anisotropy() const { return (alpha_z - alpha_x) / alpha_z; }
};

struct InertiaMoments {
  double i1;  // about a short axis, m(a^2+b^2)/5
  double i3;  // about the long axis, 2 m a^2/5
};

struct DepolarizationFactors {
  double lx;
  double ly;
  double lz;
};

double mass(const Ellipsoid& e);

InertiaMoments moments_of_inertia(const Ellipsoid& e);

/// Prolate-spheroid depolarization factors. Lx + Ly + Lz = 1 and the
/// sphere limit is Lz -> 1/3; a series branch is used for small e to
/// avoid cancellation.
DepolarizationFactors depolarization_factors(const Ellipsoid& e);

PolarizabilityTensor polarizability(const Ellipsoid& e);

/// Active z-y-z Euler rotation matrix R(alpha, beta, gamma).
Eigen::Matrix3d euler_zyz(double alpha, double beta, double gamma);

/// Lab-frame polarizability R^T diag(ax, ay, az) R for orientation
/// (alpha, beta, gamma).
Eigen::Matrix3d rotate_polarizability(const PolarizabilityTensor& t,
                                      double alpha, double beta, double gamma);

}  // namespace levicool
