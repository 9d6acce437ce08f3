#include "doctest.h"

#include "../support.hpp"
#include "pluripot/kernels.hpp"
#include "pluripot/verify.hpp"

using namespace pluripot;
using testsupport::Gen;

namespace {

double norm2(const CVec& z) { return z.squaredNorm(); }

}  // namespace

TEST_CASE("complex hessian of |z|^2 is the identity") {
  const auto s = complex_hessian(norm2, vec({0.2, cplx(0.1, -0.3)}), 1e-2);
  CHECK((s.H - CMat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("monge-ampere of |z|^2") {
  const auto ma = monge_ampere_residual(norm2, vec({0.1, 0.2}), 1e-2);
  CHECK(ma.det == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ma.relative == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ma.scaled == doctest::Approx(32.0).epsilon(1e-9));
}

TEST_CASE("psh check accepts |z|^2 and rejects its negative") {
  Gen g(401);
  std::vector<CVec> zs;
  for (int i = 0; i < 10; ++i) zs.push_back(g.in_domain(testsupport::ball(2), 0.1));
  CHECK(psh_check(norm2, zs, 1e-2, 1e-8).passed());
  CHECK_FALSE(psh_check([](const CVec& z) { return -z.squaredNorm(); }, zs, 1e-2, 1e-8).passed());
}

TEST_CASE("property: complex hessian is hermitian and matches a quadratic form") {
  Gen g(402);
  for (int i = 0; i < 20; ++i) {
    CMat A = CMat::Random(3, 3);
    A = (A + A.adjoint()).eval();
    const auto u = [&A](const CVec& z) { return std::real(z.dot(A * z)); };
    const auto s = complex_hessian(u, g.on_sphere(3), 1e-2);
    CHECK((s.H - s.H.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.H - A.transpose()).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("laplacian of |w|^2 is 4") {
  const auto l = laplacian_1d([](cplx w) { return std::norm(w); }, cplx(0.3, 0.1), 1e-2);
  CHECK(l.value == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("noise scan of a harmonic function stays near the floor") {
  std::vector<cplx> pts;
  std::vector<double> hs;
  for (int i = 0; i < 16; ++i) {
    pts.push_back(std::polar(0.5, 0.4 * i));
    hs.push_back(1e-3);
  }
  const auto s = laplacian_noise_scan([](cplx w) { return std::real(w * w * w); }, pts, hs);
  CHECK(s.floor > 0.0);
  CHECK(s.peak < 10.0);
  const auto q = laplacian_noise_scan([](cplx w) { return std::norm(w); }, pts, hs);
  CHECK(q.peak > 1e6);
}

TEST_CASE("poisson kernel of the ball is maximal along slice geodesics") {
  const Domain d = testsupport::ball(2);
  const auto xi = make_boundary_point(d, unit(2, 0));
  const Field om = [&](const CVec& z) { return poisson_kernel(d, xi, z).value; };
  const auto phi = ball_geodesic(vec({0.2, cplx(0.1, 0.3)}), unit(2, 0));
  std::vector<cplx> zs{0.1, cplx(0.3, 0.2), cplx(-0.4, 0.1)};
  CHECK(harmonic_along_geodesic(om, phi, zs, 1e-5).passed());
}

TEST_CASE("report verdicts") {
  VerificationReport r;
  r.tolerance = 1e-3;
  r.add(1e-4, true);
  r.add(2e-3, false);
  r.finalize();
  CHECK(r.samples == 2);
  CHECK(r.max_residual == doctest::Approx(2e-3));
  CHECK(r.verdict == Verdict::fail);
}
