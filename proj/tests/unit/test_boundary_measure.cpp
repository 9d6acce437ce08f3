#include "doctest.h"

#include "../support.hpp"
#include "pluripot/boundary_measure.hpp"

using namespace pluripot;

TEST_CASE("boundary form of the ball") {
  const Domain d = testsupport::ball(2);
  // 4 det L / |grad rho| = 4 / 2
  CHECK(boundary_form_density(d, make_boundary_point(d, unit(2, 0))) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("boundary form vanishes at weakly pseudoconvex points") {
  const Domain d = testsupport::egg(4);
  CHECK(std::abs(boundary_form_density(d, make_boundary_point(d, unit(2, 0)))) < 1e-6);
}

TEST_CASE("quadrature recovers the surface volume of the sphere") {
  const Domain d = testsupport::ball(2);
  const auto q = build_quadrature(d, 32);
  REQUIRE(reference_surface_volume(d).has_value());
  CHECK(q.total_measure == doctest::Approx(*reference_surface_volume(d)).epsilon(1e-10));
}

TEST_CASE("reproducing formula on the disc and ball") {
  const auto F = [](const CVec& z) { return std::real(z(0) * z(0)) + 1.0; };
  {
    const Domain d = testsupport::disc();
    const CVec z = vec({cplx(0.3, -0.2)});
    const auto r = reproduce_adaptive(d, F, z, 64, 1e-8, 1024);
    CHECK(r.value == doctest::Approx(F(z)).epsilon(1e-6));
  }
  {
    const Domain d = testsupport::ball(2);
    const CVec z = vec({0.2, cplx(0.1, 0.1)});
    const auto r = reproduce_adaptive(d, F, z, 32, 1e-6, 256);
    CHECK(r.value == doctest::Approx(F(z)).epsilon(1e-4));
  }
}

TEST_CASE("green ratio tends to minus the Poisson kernel") {
  const Domain d = testsupport::ball(2);
  const auto xi = make_boundary_point(d, unit(2, 0));
  const CVec z = vec({0.1, 0.2});
  const auto g = green_ratio(d, z, xi, decade_ladder(2, 7));
  CHECK(g.value == doctest::Approx(-testsupport::ball_poisson_oracle(z, unit(2, 0))).epsilon(1e-4));
}
