#include <cmath>
#include <initializer_list>

#include "doctest.h"
#include "levicool/beam.hpp"

using namespace levicool;

TEST_CASE("validation") {
  CHECK_THROWS(Beam(-1.0, 0.07, 0.9));
  CHECK_THROWS(Beam(1064e-9, 0.07, 1.5));
  CHECK_THROWS(Beam(1064e-9, 0.07, 0.0));
}

TEST_CASE("focus parameters at the reference operating point") {
  const auto f = focus(Beam(1064e-9, 70e-3, 0.9));
  // frozen 40-digit evaluations
  CHECK(f.w0 == doctest::Approx(3.763130209995036e-7).epsilon(1e-12));
  CHECK(f.intensity == doctest::Approx(3.146876297744030e11).epsilon(1e-12));
  CHECK(f.photon_flux == doctest::Approx(1.685561361162321e30).epsilon(1e-12));
  CHECK(f.field_amplitude == doctest::Approx(1.539820570534078e7).epsilon(1e-12));
  CHECK(f.y0 == doctest::Approx(3.14159265 * f.w0 * f.w0 / 1064e-9).epsilon(1e-9));
}

TEST_CASE("zero power") {
  const auto f = focus(Beam(1064e-9, 0.0, 0.9));
  CHECK(f.intensity == 0.0);
  CHECK(f.field_amplitude == 0.0);
  CHECK(f.photon_flux == 0.0);
  CHECK(f.w0 > 0.0);
}

TEST_CASE("power scaling") {
  const auto f1 = focus(Beam(1064e-9, 0.01, 0.9));
  for (double scale : {2.0, 4.5, 10.0}) {
    const auto fs = focus(Beam(1064e-9, 0.01 * scale, 0.9));
    CHECK(fs.intensity / f1.intensity == doctest::Approx(scale).epsilon(1e-12));
    CHECK(fs.photon_flux / f1.photon_flux == doctest::Approx(scale).epsilon(1e-12));
    CHECK(fs.field_amplitude / f1.field_amplitude ==
          doctest::Approx(std::sqrt(scale)).epsilon(1e-12));
    CHECK(fs.w0 == f1.w0);
  }
}
