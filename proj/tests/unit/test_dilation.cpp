#include "doctest.h"

#include "../support.hpp"
#include "pluripot/dilation.hpp"
#include "pluripot/kernels.hpp"

using namespace pluripot;
using testsupport::Gen;

namespace {

std::vector<CVec> ladder_to(const BoundaryPoint& xi) { return normal_approach(xi, decade_ladder(2, 7)); }

}  // namespace

TEST_CASE("identity has dilation 1") {
  const Domain d = testsupport::ball(2);
  const auto m = identity_map(d);
  const auto xi = make_boundary_point(d, unit(2, 0));
  const CVec p = CVec::Zero(2);
  const auto e = dilation(m, p, p, ladder_to(xi));
  CHECK(e.lambda == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("egg to ball map is Omega preserving with alpha 1") {
  const auto m = egg_to_ball({4});
  const auto xi = make_boundary_point(m.source, unit(2, 0));
  const auto eta = make_boundary_point(m.target, unit(2, 0));
  Gen g(501);
  std::vector<CVec> zs;
  for (int i = 0; i < 20; ++i) zs.push_back(g.in_domain(m.source, 1e-2));
  std::vector<GeodesicDisc> geos{egg_geodesic(m.source, 0.3)};
  CHECK(omega_preserving_check(m, xi, eta, 1.0, zs, geos, 1e-10).passed());
}

TEST_CASE("property: normalized dilation does not depend on the base points") {
  const auto m = coordinate_projection(2);
  const auto xi = make_boundary_point(m.source, unit(2, 0));
  const auto eta = make_boundary_point(m.target, vec({1.0}));
  const auto ap = ladder_to(xi);
  Gen g(502);
  const double a0 = normalized_dilation(m, xi, eta, CVec::Zero(2), vec({0.0}), ap);
  for (int i = 0; i < 4; ++i) {
    const CVec p = g.in_domain(m.source, 0.2);
    const CVec pp = vec({g.in_disc(0.7)});
    CHECK(normalized_dilation(m, xi, eta, p, pp, ap) == doctest::Approx(a0).epsilon(1e-6));
  }
}

TEST_CASE("property: julia inequalities are consistent") {
  const auto m = coordinate_projection(2);
  const auto xi = make_boundary_point(m.source, unit(2, 0));
  const auto eta = make_boundary_point(m.target, vec({1.0}));
  const CVec p = CVec::Zero(2), pp = vec({0.0});
  const double lam = dilation(m, p, pp, ladder_to(xi)).lambda;
  Gen g(503);
  std::vector<CVec> zs;
  for (int i = 0; i < 30; ++i) zs.push_back(g.in_domain(m.source, 1e-2));
  const auto jr = julia_checks(m, xi, eta, p, pp, lam, zs);
  CHECK(jr.mj.passed());
  CHECK(jr.pj.passed());
  CHECK(jr.consistency.passed());
}

TEST_CASE("map descriptors") {
  CHECK(map_from_json(nlohmann::json{{"map", "egg_to_ball"}, {"m", {4}}}).name.size() > 0);
  CHECK_THROWS_AS(map_from_json(nlohmann::json{{"map", "egg_to_ball"}, {"shape", 1}}), ConfigError);
  CHECK_THROWS_AS(map_from_json(nlohmann::json{{"map", "blowup"}}), ConfigError);
}

TEST_CASE("gamma lambda approach stays on the sphere slice") {
  const auto pts = gamma_lambda_approach(cplx(0.5, 0.3), {1e-2, 1e-3});
  REQUIRE(pts.size() == 2);
  CHECK(pts[1](0).real() == doctest::Approx(1.0 - 1e-3));
  CHECK(pts[1].norm() < 1.0);
}
