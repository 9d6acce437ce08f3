#include "doctest.h"

#include "../support.hpp"
#include "pluripot/geodesics.hpp"
#include "pluripot/hyperbolic.hpp"

using namespace pluripot;
using testsupport::Gen;

namespace {

cplx mobius(cplx a, cplx theta, cplx z) { return theta * (z - a) / (1.0 - std::conj(a) * z); }

}  // namespace

TEST_CASE("disc distance from the origin") {
  CHECK(disc_distance(0.0, 0.5) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(disc_distance(0.3, 0.3) == 0.0);
}

TEST_CASE("property: disc distance matches the oracle and is Mobius invariant") {
  Gen g(201);
  for (int i = 0; i < 200; ++i) {
    const cplx a = g.in_disc(0.99), b = g.in_disc(0.99), c = g.in_disc(0.9);
    const cplx th = std::polar(1.0, g.uniform(0.0, 6.28));
    const double k = disc_distance(a, b);
    CHECK(k == doctest::Approx(testsupport::disc_distance_oracle(a, b)).epsilon(1e-10));
    CHECK(disc_distance(mobius(c, th, a), mobius(c, th, b)) == doctest::Approx(k).epsilon(1e-9));
    CHECK(disc_distance(b, a) == doctest::Approx(k).epsilon(1e-14));
  }
}

TEST_CASE("property: cayley transports distance and Poisson kernels") {
  Gen g(202);
  for (int i = 0; i < 100; ++i) {
    const cplx a = g.in_disc(0.95), b = g.in_disc(0.95);
    CHECK(std::real(cayley(a)) < 0.0);
    CHECK(std::abs(cayley_inverse(cayley(a)) - a) < 1e-13);
    CHECK(halfplane_distance(cayley(a), cayley(b)) == doctest::Approx(disc_distance(a, b)).epsilon(1e-9));
  }
}

TEST_CASE("half-plane Poisson kernel") {
  CHECK(poisson_halfplane(-1.0) == doctest::Approx(-2.0));
  CHECK(poisson_disc(0.0) == doctest::Approx(-1.0));
}

TEST_CASE("ball distance reduces to the disc on a slice") {
  Gen g(203);
  for (int i = 0; i < 50; ++i) {
    const cplx a = g.in_disc(0.99), b = g.in_disc(0.99);
    const CVec v = g.on_sphere(3);
    CHECK(ball_distance(a * v, b * v) == doctest::Approx(disc_distance(a, b)).epsilon(1e-10));
  }
}

TEST_CASE("property: ellipsoid distance bounds bracket the value") {
  Gen g(204);
  const Domain d = testsupport::egg(4);
  for (int i = 0; i < 30; ++i) {
    const CVec z = g.in_domain(d, 1e-2), w = g.in_domain(d, 1e-2);
    const auto b = kobayashi_distance(d, z, w);
    CHECK(b.lower <= b.upper + 1e-12);
    CHECK(b.lower >= 0.0);
  }
}

TEST_CASE("egg geodesics are isometric embeddings of the disc") {
  const Domain d = testsupport::egg(4);
  for (cplx a : {cplx(0.0), cplx(0.5), cplx(0.2, -0.7)}) {
    const auto phi = egg_geodesic(d, a);
    CHECK(phi.normal_derivative == doctest::Approx(1.0 / (1.0 + std::pow(std::abs(a), 4))));
    for (double t : {0.3, 0.8, 0.95}) {
      CHECK(d.contains(phi(t)));
      if (a == cplx(0.0))
        CHECK(ellipsoid_axis_distance(d, phi(0.0)(0), phi(t)) == doctest::Approx(disc_distance(0.0, t)).epsilon(1e-10));
    }
    CHECK((phi(1.0) - unit(2, 0)).norm() < 1e-12);
  }
}

TEST_CASE("annulus horofunction ladder agrees with the covering") {
  const auto h = annulus_horofunction(0.5, 1.0, 0.7, cplx(0.6, 0.2));
  CHECK(h.value == doctest::Approx(h.covering).epsilon(1e-6));
  CHECK(annulus_horofunction_covering(0.5, 1.0, 0.7, 0.7) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("angular derivative of a disc automorphism") {
  // f(z) = (z + c)/(1 + c z) with real c fixes 1 and has f'(1) = (1 - c)/(1 + c)
  const double c = 0.4;
  const auto f = [c](cplx z) { return (z + c) / (1.0 + c * z); };
  const auto ad = angular_derivative(f, make_angular_approach(1.0));
  CHECK(std::abs(ad.value - (1.0 - c) / (1.0 + c)) < 1e-6);
  CHECK_FALSE(ad.disagreement);
}
