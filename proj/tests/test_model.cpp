#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravcat/model.hpp"
#include "support/generators.hpp"

using namespace gravcat;

TEST_CASE("model params reject negative or non-finite values") {
  CHECK_THROWS_AS(ModelParams(-1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(NAN, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1.0, INFINITY), std::invalid_argument);
  CHECK_NOTHROW(ModelParams(0.0, 0.0));
}

TEST_CASE("eigensystem in the decoupled limit") {
  const Eigensystem e = eigensystem(ModelParams(1.0, 0.0));
  CHECK(e.omega == 1.0);
  CHECK(e.eps1 == 0.0);
  CHECK(e.eps2 == 1.0);
  CHECK(e.eps3 == -1.0);
  CHECK(e.eps4 == 0.0);
  CHECK(e.theta_plus == 0.0);
  CHECK(e.theta_minus == doctest::Approx(-std::numbers::pi / 2).epsilon(1e-15));
}

TEST_CASE("eigensystem at w = delta = 3") {
  const Eigensystem e = eigensystem(ModelParams(3.0, 3.0));
  const double omega = 3.0 * std::numbers::sqrt2;
  CHECK(e.omega == doctest::Approx(omega).epsilon(1e-15));
  CHECK(e.omega * e.omega == doctest::Approx(18.0).epsilon(1e-15));
  CHECK(e.eps1 == -3.0);
  CHECK(e.eps2 == doctest::Approx(4.242640687119285).epsilon(1e-15));
  CHECK(e.eps3 == doctest::Approx(-4.242640687119285).epsilon(1e-15));
  CHECK(e.eps4 == 3.0);

  // Ground state sin(th+)|11> + cos(th+)|00> equals
  // (|11> + (1 + sqrt2)|00>) / (sqrt2 sqrt(2 + sqrt2)).
  const double norm = std::numbers::sqrt2 * std::sqrt(2.0 + std::numbers::sqrt2);
  CHECK(std::sin(e.theta_plus) == doctest::Approx(1.0 / norm).epsilon(1e-14));
  CHECK(std::cos(e.theta_plus) == doctest::Approx((1.0 + std::numbers::sqrt2) / norm).epsilon(1e-14));
}

TEST_CASE("eigensystem properties on random parameters") {
  testing::TripleGenerator gen(11);
  for (int i = 0; i < 500; ++i) {
    const ModelParams p = gen.next().params;
    const Eigensystem e = eigensystem(p);
    CAPTURE(p.w());
    CAPTURE(p.delta());
    CHECK(std::abs(e.eps1 + e.eps2 + e.eps3 + e.eps4) <= 1e-15 * e.omega);
    CHECK(e.omega >= std::max(p.w(), p.delta()));
    CHECK(e.omega * e.omega == doctest::Approx(p.w() * p.w() + p.delta() * p.delta()).epsilon(1e-14));
    CHECK(e.eps3 <= e.eps1);
    CHECK(e.eps1 <= e.eps4);
    CHECK(e.eps4 <= e.eps2);
    CHECK(std::tan(e.theta_plus) == doctest::Approx(p.delta() / (p.w() + e.omega)).epsilon(1e-12));
    // w - omega loses digits for delta << w; compare via the product identity
    // tan(th-) (w - omega) = delta, i.e. tan(th-) = -(w + omega)/delta.
    CHECK(std::tan(e.theta_minus) == doctest::Approx(-(p.w() + e.omega) / p.delta()).epsilon(1e-9));

    const double c = gen.log_uniform(1e-3, 1e3);
    const Eigensystem s = eigensystem(p.scaled(c));
    CHECK(s.eps2 == doctest::Approx(c * e.eps2).epsilon(1e-14));
    CHECK(s.eps1 == doctest::Approx(c * e.eps1).epsilon(1e-14));
    CHECK(s.theta_plus == doctest::Approx(e.theta_plus).epsilon(1e-13));
    CHECK(s.theta_minus == doctest::Approx(e.theta_minus).epsilon(1e-13));
  }
}

namespace {

// Independent evaluation of alpha (1/d - 1/d') / k_B, d' = sqrt(d^2 + L^2).
double naive_delta(double m, double d, double L) {
  const double alpha = 6.67430e-11 * m * m;
  return alpha * (1.0 / d - 1.0 / std::sqrt(d * d + L * L)) / 1.380649e-23;
}

}  // namespace

TEST_CASE("physical mapping reproduces the quoted coupling values") {
  PhysicalSetup weak{.mass = 1e-12, .d = 1e-6, .L = 0.5e-6, .w_over_kB = 0.015};
  const ModelParams p = params_from_physical(weak);
  CHECK(p.unit_mode() == UnitMode::Physical);
  CHECK(p.w() == 0.015);
  CHECK(p.delta() == doctest::Approx(naive_delta(1e-12, 1e-6, 0.5e-6)).epsilon(1e-10));
  CHECK(std::abs(p.delta() / 0.5101e-6 - 1.0) < 1e-3);

  PhysicalSetup strong{.mass = 1e-7, .d = 3e-4, .L = 1.5e-4, .w_over_kB = 0.015};
  const ModelParams q = params_from_physical(strong);
  CHECK(q.delta() == doctest::Approx(naive_delta(1e-7, 3e-4, 1.5e-4)).epsilon(1e-10));
  CHECK(std::abs(q.delta() / 17.0072 - 1.0) < 1e-3);

  strong.convention = DeltaConvention::Half;
  CHECK(params_from_physical(strong).delta() == doctest::Approx(0.5 * q.delta()).epsilon(1e-15));
}

TEST_CASE("physical mapping edge cases") {
  PhysicalSetup s{.mass = 0.0, .d = 1e-6, .L = 1e-6, .w_over_kB = 1.0};
  CHECK(params_from_physical(s).delta() == 0.0);
  CHECK(s.far_separation() > s.d);

  s.d = 0.0;
  CHECK_THROWS_AS(params_from_physical(s), std::invalid_argument);
  s.d = 1e-6;
  s.L = -1.0;
  CHECK_THROWS_AS(params_from_physical(s), std::invalid_argument);
}
