#include <cmath>
#include <vector>

#include "doctest.h"
#include "levicool/rng.hpp"

using namespace levicool;

TEST_CASE("seed determinism") {
  NormalRng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.normal() == b.normal());
}

TEST_CASE("different trajectory seeds give different streams") {
  const std::uint64_t s0 = trajectory_seed(1, 0);
  const std::uint64_t s1 = trajectory_seed(1, 1);
  const std::uint64_t t0 = trajectory_seed(2, 0);
  CHECK(s0 != s1);
  CHECK(s0 != t0);
  NormalRng a(s0), b(s1);
  int same = 0;
  for (int i = 0; i < 100; ++i)
    if (a.normal() == b.normal()) ++same;
  CHECK(same == 0);
}

TEST_CASE("normal moments") {
  NormalRng rng(7);
  const int n = 200000;
  double sum = 0, sumsq = 0, sum4 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sumsq += x * x;
    sum4 += x * x * x * x;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(sumsq / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(sum4 / n == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("uniform range") {
  NormalRng rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
