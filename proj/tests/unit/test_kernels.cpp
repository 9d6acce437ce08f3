#include "doctest.h"

#include "../support.hpp"
#include "pluripot/kernels.hpp"

using namespace pluripot;
using testsupport::Gen;

TEST_CASE("ball Poisson kernel at the centre") {
  const Domain d = testsupport::ball(2);
  const auto xi = make_boundary_point(d, unit(2, 0));
  CHECK(poisson_kernel(d, xi, CVec::Zero(2)).value == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("green function of the disc") {
  const Domain d = testsupport::disc();
  const auto g = green_function(d, vec({0.0}), vec({0.5}));
  CHECK(g.value == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(green_function(d, vec({0.2}), vec({0.2})).neg_infinity);
}

TEST_CASE("property: ball Poisson kernel matches the oracle") {
  Gen g(301);
  for (int n : {2, 3}) {
    const Domain d = testsupport::ball(n);
    for (int i = 0; i < 40; ++i) {
      const CVec xi = g.on_sphere(n);
      const auto b = make_boundary_point(d, xi);
      const CVec z = g.in_domain(d, 1e-3);
      CHECK(poisson_kernel(d, b, z).value ==
            doctest::Approx(testsupport::ball_poisson_oracle(z, xi)).epsilon(1e-10));
    }
  }
}

TEST_CASE("property: egg Poisson kernel matches the oracle and the geodesic formula") {
  Gen g(302);
  for (int m : {2, 4, 6}) {
    const Domain d = testsupport::egg(m);
    const auto xi = make_boundary_point(d, unit(2, 0));
    for (int i = 0; i < 30; ++i) {
      const CVec z = g.in_domain(d, 1e-3);
      const double cf = poisson_kernel(d, xi, z, Method::closed_form).value;
      CHECK(cf == doctest::Approx(testsupport::egg_poisson_oracle(m, z)).epsilon(1e-12));
      const CVec zz = vec({z(0), 0.0});
      CHECK(poisson_kernel(d, xi, zz, Method::geodesic_formula).value ==
            doctest::Approx(testsupport::egg_poisson_oracle(m, zz)).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: horofunction ladder equals the log ratio of Poisson kernels") {
  Gen g(303);
  const Domain d = testsupport::ball(2);
  const auto xi = make_boundary_point(d, unit(2, 0));
  for (int i = 0; i < 10; ++i) {
    const CVec p = g.in_domain(d, 0.05), z = g.in_domain(d, 0.05);
    const double h = horofunction(d, xi, p, z, Method::limit_ladder).value;
    const double ref = std::log(std::abs(poisson_kernel(d, xi, p).value / poisson_kernel(d, xi, z).value));
    CHECK(h == doctest::Approx(ref).epsilon(1e-5));
  }
}

TEST_CASE("green normal derivative is minus the Poisson kernel") {
  const Domain d = testsupport::ball(2);
  const auto xi = make_boundary_point(d, unit(2, 0));
  const CVec z = vec({0.3, cplx(0.1, 0.2)});
  const auto g = green_normal_derivative(d, xi, z);
  CHECK(g.value == doctest::Approx(-poisson_kernel(d, xi, z).value).epsilon(1e-5));
}

TEST_CASE("horosphere membership at the base point") {
  const Domain d = testsupport::ball(2);
  const auto xi = make_boundary_point(d, unit(2, 0));
  const CVec p = CVec::Zero(2);
  CHECK(horosphere_contains(d, xi, p, 1.0, vec({0.5, 0.0})) == Membership::inside);
  CHECK(horosphere_contains(d, xi, p, 1.0, vec({-0.5, 0.0})) == Membership::outside);
}

TEST_CASE("decade ladder") {
  const auto l = decade_ladder(2, 4);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == doctest::Approx(1e-2));
  CHECK(l[2] == doctest::Approx(1e-4));
}
