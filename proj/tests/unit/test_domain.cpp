#include "doctest.h"

#include "../support.hpp"
#include "pluripot/domain.hpp"

using namespace pluripot;
using testsupport::Gen;

TEST_CASE("odd ellipsoid exponent is rejected") {
  CHECK_THROWS_AS(make_domain(DomainSpec{"ellipsoid", 0, {3}, 0.0}), ConfigError);
  CHECK_THROWS_AS(make_domain(DomainSpec{"annulus", 1, {}, 1.5}), ConfigError);
  CHECK_THROWS_AS(make_domain(DomainSpec{"torus", 2, {}, 0.0}), ConfigError);
}

TEST_CASE("shorthand parsing") {
  CHECK(parse_domain_shorthand("ball3").n == 3);
  CHECK(parse_domain_shorthand("egg4").m == std::vector<int>{4});
  CHECK(parse_domain_shorthand("disc").kind == "disc");
  CHECK_THROWS_AS(parse_domain_shorthand("egg"), ConfigError);
}

TEST_CASE("descriptor round trip through json") {
  const DomainSpec s{"ellipsoid", 0, {4, 6}, 0.0};
  const auto back = domain_spec_from_json(domain_spec_to_json(s));
  CHECK(back.kind == s.kind);
  CHECK(back.m == s.m);
  CHECK_THROWS_AS(domain_spec_from_json(nlohmann::json{{"kind", "ball"}, {"colour", 1}}), ConfigError);
}

TEST_CASE("projection onto the egg along the axis") {
  const Domain d = testsupport::egg(4);
  const auto pr = boundary_project(d, vec({0.9, 0.0}));
  CHECK(pr.delta == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(std::abs(pr.point.xi(0) - 1.0) < 1e-12);
  CHECK(std::abs(pr.point.normal(0) - 1.0) < 1e-12);
}

TEST_CASE("property: projection reconstructs the point") {
  Gen g(101);
  for (const Domain& d : {testsupport::ball(2), testsupport::ball(3), testsupport::egg(2), testsupport::egg(4),
                          testsupport::egg(6)}) {
    for (int i = 0; i < 40; ++i) {
      const CVec z = g.in_domain(d, 1e-3);
      const auto pr = boundary_project(d, z);
      const CVec back = pr.point.xi - pr.delta * pr.point.normal;
      INFO(d.name(), " sample ", i);
      CHECK((back - z).norm() < 1e-9);
      CHECK(std::abs(d.defining_function(pr.point.xi)) < 1e-12);
      CHECK(pr.delta > 0.0);
    }
  }
}

TEST_CASE("property: boundary frame is orthonormal and tangent") {
  Gen g(102);
  const Domain d = testsupport::egg(4);
  for (int i = 0; i < 20; ++i) {
    const auto b = boundary_project(d, g.in_domain(d, 1e-2)).point;
    CHECK(std::abs(b.normal.norm() - 1.0) < 1e-12);
    for (const CVec& t : b.tangent) {
      CHECK(std::abs(t.norm() - 1.0) < 1e-12);
      CHECK(std::abs(herm(t, b.normal)) < 1e-12);
    }
  }
}

TEST_CASE("levi data of the ball") {
  const Domain d = testsupport::ball(2);
  const auto b = make_boundary_point(d, unit(2, 0));
  const auto L = levi_data(d, b);
  REQUIRE(L.L.rows() == 1);
  CHECK(std::abs(L.L(0, 0) - 1.0) < 1e-6);
  CHECK(L.grad_norm == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("line type") {
  const Domain b2 = testsupport::ball(2), e4 = testsupport::egg(4);
  CHECK(line_type(b2, make_boundary_point(b2, unit(2, 0))).type == 2);
  CHECK(line_type(e4, make_boundary_point(e4, unit(2, 0))).type == 4);
}

TEST_CASE("property: line type is invariant under coordinate rotations") {
  Gen g(103);
  const Domain d = testsupport::egg(4);
  for (int i = 0; i < 8; ++i) {
    const auto b = boundary_project(d, g.in_domain(d, 1e-2)).point;
    CVec xi = b.xi;
    xi(0) *= std::polar(1.0, g.uniform(0.0, 6.28));
    xi(1) *= std::polar(1.0, g.uniform(0.0, 6.28));
    const int t0 = line_type(d, b).type;
    const int t1 = line_type(d, make_boundary_point(d, xi)).type;
    CHECK(t0 == t1);
  }
}

TEST_CASE("distance to the boundary of the ball is 1 - |z|") {
  Gen g(104);
  const Domain d = testsupport::ball(3);
  for (int i = 0; i < 20; ++i) {
    const CVec z = g.in_domain(d, 1e-3);
    CHECK(delta(d, z) == doctest::Approx(1.0 - z.norm()).epsilon(1e-12));
  }
}
