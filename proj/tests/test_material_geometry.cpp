#include <cmath>

#include "doctest.h"
#include "levicool/constants.hpp"
#include "levicool/particle.hpp"

using namespace levicool;

namespace {
Ellipsoid diamond(double a_nm, double b_nm) {
  return Ellipsoid(a_nm * 1e-9, b_nm * 1e-9, Material::diamond());
}
Ellipsoid silica(double a_nm, double b_nm) {
  return Ellipsoid(a_nm * 1e-9, b_nm * 1e-9, Material::silica());
}
}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS(Material(1.0, 2200.0));
  CHECK_THROWS(Material(2.1, -1.0));
  CHECK_THROWS(Ellipsoid(60e-9, 40e-9, Material::silica()));  // a > b
}

TEST_CASE("mass") {
  // 50 nm silica sphere: the published estimate is ~1.2e-18 kg
  const Ellipsoid sph = silica(50, 50);
  CHECK(mass(sph) == doctest::Approx(1.2e-18).epsilon(0.05));
  // frozen 40-digit evaluation of rho (4/3) pi a^2 b
  CHECK(mass(diamond(48, 53)) ==
        doctest::Approx(1.790255423204065e-18).epsilon(1e-12));
  CHECK(mass(Ellipsoid(0, 0, Material::silica())) == 0.0);
}

TEST_CASE("moments of inertia") {
  const Ellipsoid sph = silica(50, 50);
  const auto i = moments_of_inertia(sph);
  const double m = mass(sph);
  CHECK(i.i1 == doctest::Approx(0.4 * m * 2500e-18).epsilon(1e-12));
  CHECK(i.i1 == doctest::Approx(i.i3).epsilon(1e-12));

  CHECK(moments_of_inertia(diamond(48, 53)).i1 ==
        doctest::Approx(1.830715195768477e-33).epsilon(1e-12));

  // doubling both axes at fixed density scales I1 by 2^5
  const auto small = moments_of_inertia(diamond(20, 40));
  const auto big = moments_of_inertia(diamond(40, 80));
  CHECK(big.i1 / small.i1 == doctest::Approx(32.0).epsilon(1e-12));
}

TEST_CASE("depolarization factors") {
  SUBCASE("sphere limit") {
    const auto l = depolarization_factors(silica(50, 50));
    CHECK(l.lz == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(l.lx == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("needle limit") {
    const auto l = depolarization_factors(silica(1, 100000));
    CHECK(l.lz < 1e-6);
    CHECK(l.lx == doctest::Approx(0.5).epsilon(1e-5));
  }
  SUBCASE("frozen value at e = 0.77") {
    // b chosen so that sqrt(1 - a^2/b^2) = 0.77
    const double a = 50e-9;
    const double b = a / std::sqrt(1.0 - 0.77 * 0.77);
    const auto l = depolarization_factors(Ellipsoid(a, b, Material::silica()));
    CHECK(l.lz == doctest::Approx(0.2232224842739178).epsilon(1e-10));
  }
  SUBCASE("sum rule across ellipticities") {
    for (double anm : {1.0, 10.0, 30.0, 49.9, 49.999, 50.0}) {
      const auto l = depolarization_factors(silica(anm, 50));
      CHECK(l.lx + l.ly + l.lz == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("series branch is continuous at the switchover") {
    // ellipticities just below and above the switch point
    const double b = 50e-9;
    auto lz_at = [&](double e) {
      const double a = b * std::sqrt(1.0 - e * e);
      return depolarization_factors(Ellipsoid(a, b, Material::silica())).lz;
    };
    // the two branches straddle the switch; their difference must match
    // the analytic local change d(lz) = -(2/15) d(e^2), i.e. no jump
    const double e1 = 0.99e-2, e2 = 1.01e-2;
    const double expected = 2.0 / 15.0 * (e2 * e2 - e1 * e1);
    CHECK(lz_at(e1) - lz_at(e2) == doctest::Approx(expected).epsilon(1e-3));
  }
}

TEST_CASE("polarizability") {
  SUBCASE("reference anisotropy values") {
    CHECK(polarizability(diamond(48, 53)).anisotropy() ==
          doctest::Approx(0.07).epsilon(0.05));
    CHECK(polarizability(silica(15, 70)).anisotropy() ==
          doctest::Approx(0.30).epsilon(0.05));
  }
  SUBCASE("sphere agrees with the Clausius-Mossotti form") {
    const double r = 50e-9, eps = 2.1;
    const auto t = polarizability(silica(50, 50));
    const double sphere = 4.0 * constants::pi * constants::eps0 *
                          (eps - 1.0) / (eps + 2.0) * r * r * r;
    CHECK(t.alpha_z == doctest::Approx(sphere).epsilon(1e-12));
    CHECK(t.alpha_x == doctest::Approx(sphere).epsilon(1e-12));
  }
  SUBCASE("monotone in ellipticity at fixed volume") {
    // fixed a^2 b, growing b
    double prev_az = 0.0, prev_ax = 1.0;
    bool first = true;
    for (double b_nm : {50.0, 60.0, 80.0, 120.0}) {
      const double a_nm = std::sqrt(50.0 * 50.0 * 50.0 / b_nm);
      const auto t = polarizability(diamond(a_nm, b_nm));
      if (!first) {
        CHECK(t.alpha_z > prev_az);
        CHECK(t.alpha_x < prev_ax);
      }
      prev_az = t.alpha_z;
      prev_ax = t.alpha_x;
      first = false;
    }
  }
}

TEST_CASE("rotate_polarizability") {
  const auto t = polarizability(diamond(15, 70));
  SUBCASE("identity angles") {
    const Eigen::Matrix3d m = rotate_polarizability(t, 0, 0, 0);
    CHECK(m(0, 0) == doctest::Approx(t.alpha_x));
    CHECK(m(1, 1) == doctest::Approx(t.alpha_y));
    CHECK(m(2, 2) == doctest::Approx(t.alpha_z));
    CHECK(std::abs(m(0, 1)) < 1e-45);
  }
  SUBCASE("beta = pi/2 swaps x and z") {
    const Eigen::Matrix3d m =
        rotate_polarizability(t, 0, constants::pi / 2.0, 0);
    CHECK(m(0, 0) == doctest::Approx(t.alpha_z).epsilon(1e-12));
    CHECK(m(2, 2) == doctest::Approx(t.alpha_x).epsilon(1e-12));
  }
  SUBCASE("similarity invariants at random angles") {
    double ang[3] = {0.3, 1.1, -2.4};
    for (int k = 0; k < 5; ++k) {
      const Eigen::Matrix3d m =
          rotate_polarizability(t, ang[0] + k, ang[1] * k, ang[2] - k);
      CHECK((m - m.transpose()).norm() < 1e-12 * m.norm());
      CHECK(m.trace() ==
            doctest::Approx(t.alpha_x + t.alpha_y + t.alpha_z).epsilon(1e-12));
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
      CHECK(es.eigenvalues()(0) == doctest::Approx(t.alpha_x).epsilon(1e-12));
      CHECK(es.eigenvalues()(2) == doctest::Approx(t.alpha_z).epsilon(1e-12));
    }
  }
}
