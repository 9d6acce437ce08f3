// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "pluripot/boundary_measure.hpp"
#include "pluripot/dilation.hpp"
#include "pluripot/hyperbolic.hpp"
#include "pluripot/kernels.hpp"
#include "pluripot/verify.hpp"
#include "support.hpp"

using namespace pluripot;
using namespace testsupport;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1. closed-form and geodesic-formula Poisson kernel on phi_a(0)
Outcome criterion1() {
  Gen g(101);
  double worst_cf = 0.0, worst_geo = 0.0;
  for (int m : {2, 4, 6}) {
    const Domain d = egg(m);
    const auto xi = make_boundary_point(d, vec({1.0, 0.0}));
    for (int i = 0; i < 100; ++i) {
      const cplx a = g.in_disc(0.999);
      const double A = std::pow(std::abs(a), m);
      const CVec z = egg_geodesic(m, a)(0.0);
      const double expect = -(1.0 + A);
      const double cf = poisson_kernel(d, xi, z, Method::closed_form).value;
      const double geo = poisson_kernel(d, xi, z, Method::geodesic_formula).value;
      worst_cf = std::max(worst_cf, std::abs(cf - expect));
      worst_geo = std::max(worst_geo, std::abs(geo - cf));
    }
  }
  return {worst_cf <= 1e-10 && worst_geo <= 1e-10,
          fmt("closed form err %.3e", worst_cf) + fmt(", geodesic vs closed %.3e", worst_geo)};
}

// 2. ladder horofunction vs log|Omega(p)| - log|Omega(z)|
Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  Gen g(202);
  double worst = 0.0;
  for (const Domain& d : {ball(2), egg(4)}) {
    const auto xi = make_boundary_point(d, vec({1.0, 0.0}));
    for (int i = 0; i < 20; ++i) {
      const CVec p = g.in_domain(d, 0.05), z = g.in_domain(d, 0.05);
      const double lad = horofunction(d, xi, p, z, Method::limit_ladder).value;
      const double formula = std::log(std::abs(poisson_kernel(d, xi, p).value)) -
                             std::log(std::abs(poisson_kernel(d, xi, z).value));
      worst = std::max(worst, std::abs(lad - formula));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-5 && secs < 30.0, fmt("max err %.3e", worst) + fmt(", %.2f s", secs)};
}

// 3. k(z, p) + log delta(z) + log(|Omega(p)|/2) at delta = 1e-6
Outcome criterion3() {
  double worst = 0.0;
  const std::vector<double> ds{1e-6};
  auto run = [&](const Domain& d, const BoundaryPoint& xi, const CVec& p, const std::vector<CVec>& zs) {
    const double target = -std::log(std::abs(poisson_kernel(d, xi, p).value) / 2.0);
    for (const CVec& z : zs) {
      const auto k = kobayashi_distance(d, z, p);
      const double e = std::abs(k.value() + std::log(delta(d, z)) - target) + k.width();
      worst = std::max(worst, e);
    }
  };
  Gen g(303);
  const Domain b = ball(2);
  for (int i = 0; i < 5; ++i) {
    const auto xi = make_boundary_point(b, g.on_sphere(2));
    const CVec p = g.in_domain(b, 0.05);
    run(b, xi, p, normal_approach(xi, ds));
    run(b, xi, p, slanted_approach(xi, ds, 1.0));
    run(b, xi, p, slanted_approach(xi, ds, -3.0));
  }
  const Domain e = egg(4);
  const auto xi = make_boundary_point(e, vec({1.0, 0.0}));
  for (cplx p0 : {cplx(0.0), cplx(0.3), cplx(-0.2, 0.1), cplx(0.0, -0.6)}) {
    const CVec p = vec({p0, 0.0});
    run(e, xi, p, normal_approach(xi, ds));
    run(e, xi, p, slanted_approach(xi, ds, 1.0));
    run(e, xi, p, curved_approach(xi, ds, 0.5));
    run(e, xi, p, curved_approach(xi, ds, 0.3));
  }
  return {worst <= 1e-3, fmt("max err %.3e", worst)};
}

// 4. Green normal derivative and Green ratio vs |Omega|
Outcome criterion4() {
  Gen g(404);
  double worst_der = 0.0, worst_ratio = 0.0;
  const auto ladder = decade_ladder(2, 7);
  for (const Domain& d : {ball(2), egg(4)}) {
    for (int i = 0; i < 10; ++i) {
      const CVec x = d.kind() == Kind::ball ? g.on_sphere(2) : vec({1.0, 0.0});
      const auto xi = make_boundary_point(d, x);
      const CVec z = g.in_domain(d, 0.05);
      const double om = std::abs(poisson_kernel(d, xi, z).value);
      const auto der = green_normal_derivative(d, xi, z);
      const auto rat = green_ratio(d, z, xi, ladder);
      worst_der = std::max(worst_der, std::abs(der.value - om) / om);
      worst_ratio = std::max(worst_ratio, std::abs(rat.value - om) / om);
    }
  }
  return {worst_der <= 1e-4 && worst_ratio <= 1e-4,
          fmt("derivative rel err %.3e", worst_der) + fmt(", ratio rel err %.3e", worst_ratio)};
}

// 5. Monge-Ampere degeneracy, psh floor, harmonicity along geodesics
Outcome criterion5() {
  Gen g(505);
  double worst_ma = 0.0, worst_psh = 0.0, worst_harm = 0.0;
  for (const Domain& d : {ball(2), egg(4)}) {
    const auto xi = make_boundary_point(d, vec({1.0, 0.0}));
    const Field u = [&](const CVec& z) { return poisson_kernel(d, xi, z, Method::closed_form).value; };
    std::vector<CVec> samples;
    for (int i = 0; i < 200; ++i) samples.push_back(g.in_domain(d, 0.02));
    for (const CVec& z : samples) {
      const auto ma = monge_ampere_residual(u, z, 1e-2 * delta(d, z), &d);
      worst_ma = std::max(worst_ma, ma.relative);
    }
    const auto psh = psh_check(u, samples, 1e-2, 1e-6, &d);
    worst_psh = std::max(worst_psh, psh.max_residual);
    const int m = d.exponents()[1];
    for (int i = 0; i < 5; ++i) {
      const auto phi = egg_geodesic(m, g.in_disc(0.9));
      std::vector<cplx> zs;
      for (int k = 0; k < 10; ++k) zs.push_back(g.in_disc(0.9));
      const auto rep = harmonic_along_geodesic(u, phi, zs, 1e-5);
      worst_harm = std::max(worst_harm, rep.max_residual);
    }
  }
  return {worst_ma <= 1e-5 && worst_psh <= 1e-6 && worst_harm <= 1e-5,
          fmt("MA rel %.3e", worst_ma) + fmt(", psh floor %.3e", -worst_psh) + fmt(", harmonic %.3e", worst_harm)};
}

// 6. vanishing away from the pole and the curve limit at the pole
Outcome criterion6() {
  double worst_away = 0.0, worst_curve = 0.0;
  const auto ladder = decade_ladder(1, 8);
  {
    const Domain b = ball(2);
    const auto xi = make_boundary_point(b, vec({1.0, 0.0}));
    Gen g(606);
    for (int i = 0; i < 5; ++i) {
      CVec eta = g.on_sphere(2);
      if ((eta - xi.xi).norm() < 0.2) eta = -eta;
      const auto bp = make_boundary_point(b, eta);
      const CVec zl = normal_approach(bp, ladder).back();
      worst_away = std::max(worst_away, std::abs(poisson_kernel(b, xi, zl).value));
    }
  }
  {
    const Domain e = egg(4);
    const auto xi = make_boundary_point(e, vec({1.0, 0.0}));
    for (const CVec& eta : {vec({-1.0, 0.0}), vec({0.0, 1.0}), vec({0.0, cplx(0.0, -1.0)}),
                            vec({std::sqrt(0.5), std::pow(0.5, 0.25)}), vec({cplx(0.0, 0.6), std::pow(0.64, 0.25)})}) {
      const auto bp = make_boundary_point(e, eta);
      const CVec zl = normal_approach(bp, ladder).back();
      worst_away = std::max(worst_away, std::abs(poisson_kernel(e, xi, zl).value));
    }
  }
  for (int m : {2, 4, 6}) {
    const Domain d = egg(m);
    const auto xi = make_boundary_point(d, vec({1.0, 0.0}));
    for (cplx a : {cplx(0.0), cplx(0.5), cplx(0.2, -0.7), cplx(-0.9, 0.1)}) {
      const auto phi = egg_geodesic(m, a);
      std::vector<double> vals;
      for (int k = 2; k <= 8; ++k) {
        const double s = std::pow(10.0, -k);
        vals.push_back(poisson_kernel(d, xi, phi(1.0 - s)).value * s);
      }
      const double lim = aitken(vals).value;
      worst_curve = std::max(worst_curve, std::abs(lim - (-2.0 / phi.normal_derivative)));
    }
  }
  return {worst_away <= 1e-3 && worst_curve <= 1e-3,
          fmt("max |Omega| away %.3e", worst_away) + fmt(", curve limit err %.3e", worst_curve)};
}

// 7. reproducing formula on B^2
Outcome criterion7() {
  const Domain b = ball(2);
  const std::vector<std::function<double(const CVec&)>> fs{
      [](const CVec&) { return 1.0; },
      [](const CVec& z) { return z(0).real(); },
      [](const CVec& z) { return z(0).imag(); },
      [](const CVec& z) { return (z(0) * z(1)).real(); },
      [](const CVec& z) { return (z(0) * z(0)).real(); },
  };
  Gen g(707);
  std::vector<CVec> zs{vec({0.0, 0.0})};
  for (int i = 0; i < 4; ++i) zs.push_back(g.in_domain(b, 0.3));
  double worst = 0.0;
  bool converged = true;
  for (const auto& F : fs) {
    for (const CVec& z : zs) {
      const auto r = reproduce_adaptive(b, F, z, 16, 1e-4, 128);
      converged = converged && r.converged;
      worst = std::max(worst, std::abs(r.value - F(z)));
    }
  }
  return {worst <= 1e-3 && converged, fmt("max err %.3e", worst) + (converged ? "" : ", refinement not converged")};
}

// 8. dilation suite
Outcome criterion8() {
  double worst = 0.0, egg_err = 0.0;
  const auto ladder = decade_ladder(2, 7);
  {
    const auto f = egg_to_ball({4});
    const auto xi = make_boundary_point(f.source, vec({1.0, 0.0}));
    const auto eta = make_boundary_point(f.target, vec({1.0, 0.0}));
    const double alpha = normalized_dilation(f, xi, eta, vec({0.0, 0.0}), vec({0.0, 0.0}), normal_approach(xi, ladder));
    Gen g(808);
    std::vector<CVec> zs;
    for (int i = 0; i < 100; ++i) zs.push_back(g.in_domain(f.source, 1e-3));
    const auto rep = omega_preserving_check(f, xi, eta, alpha, zs, {egg_geodesic(4, 0.4), egg_geodesic(4, cplx(0.1, 0.8))}, 1e-10);
    egg_err = std::max(std::abs(alpha - 1.0), rep.max_residual);
  }
  const auto f = coordinate_projection(2);
  const auto xi = make_boundary_point(f.source, vec({1.0, 0.0}));
  const auto eta = make_boundary_point(f.target, vec({1.0}));
  const double alpha = normalized_dilation(f, xi, eta, vec({0.0, 0.0}), vec({0.0}), normal_approach(xi, ladder));
  worst = std::max(worst, std::abs(alpha - 1.0));
  for (cplx lam : {cplx(0.0), cplx(0.3), cplx(0.0, 0.6)}) {
    const double q = 1.0 - std::norm(lam);
    const auto curve = gamma_lambda_approach(lam, ladder);
    std::vector<double> kt, ratio;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const double s = ladder[i];
      kt.push_back(poisson_kernel(f.source, xi, curve[i]).value * s);
      ratio.push_back(poisson_kernel(f.source, xi, curve[i]).value / poisson_kernel(f.target, eta, f(curve[i])).value);
    }
    const auto dr = delta_ratio_limit(f, curve);
    const double e1 = std::abs(aitken(kt).value + 2.0 * q);
    const double e2 = std::abs(aitken(ratio).value - q);
    const double e3 = std::abs(dr.value - 1.0 / q);
    worst = std::max({worst, e1, e2, e3});
  }
  return {egg_err <= 1e-10 && worst <= 1e-3, fmt("egg->ball identity %.3e", egg_err) + fmt(", projection limits %.3e", worst)};
}

// 9. annulus non-harmonicity against a harmonic control
Outcome criterion9() {
  const double r = 0.5;
  const cplx xi = 1.0, p = std::sqrt(r);
  std::vector<cplx> pts_a, pts_d;
  std::vector<double> h_a, h_d;
  for (int i = 0; i < 8; ++i) {
    const double rad_a = r + (1.0 - r) * (i + 1) / 9.0, rad_d = (i + 0.5) / 9.0;
    for (int k = 0; k < 32; ++k) {
      pts_a.push_back(std::polar(rad_a, 2.0 * kPi * k / 32));
      h_a.push_back(1e-4 * std::min(1.0 - rad_a, rad_a - r));
      pts_d.push_back(std::polar(rad_d, 2.0 * kPi * k / 32));
      h_d.push_back(1e-4 * (1.0 - rad_d));
    }
  }
  const PlaneField ua = [&](cplx z) { return -std::exp(-annulus_horofunction_covering(r, xi, p, z)); };
  const auto sa = laplacian_noise_scan(ua, pts_a, h_a);
  const Domain dd = disc();
  const auto bxi = make_boundary_point(dd, vec({1.0}));
  const CVec bp = vec({p});
  const PlaneField ud = [&](cplx z) { return -std::exp(-horofunction(dd, bxi, bp, vec({z})).value); };
  const auto sd = laplacian_noise_scan(ud, pts_d, h_d);
  return {sa.peak > 100.0 && sd.peak < 10.0,
          fmt("annulus peak %.3e x floor", sa.peak) + fmt(", disc max %.3f x floor", sd.peak)};
}

// 10. strong asymptoticity of geodesics with a shared endpoint
Outcome criterion10() {
  double worst20 = 0.0;
  bool monotone = true;
  auto run = [&](const Domain& d, const GeodesicDisc& phi, const GeodesicDisc& psi) {
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {5.0, 10.0, 15.0, 20.0}) {
      const auto gr = asymptoticity_gap(d, phi, psi, t);
      if (!(gr.value < prev)) monotone = false;
      prev = gr.value;
      if (t == 20.0) worst20 = std::max(worst20, gr.value);
    }
  };
  const Domain e2 = egg(2);
  run(e2, egg_geodesic(2, 0.0), egg_geodesic(2, 0.5));
  run(e2, egg_geodesic(2, cplx(0.3, 0.3)), egg_geodesic(2, cplx(-0.7, 0.2)));
  const Domain b = ball(2);
  Gen g(1010);
  const CVec xi = vec({1.0, 0.0});
  for (int i = 0; i < 3; ++i) run(b, ball_geodesic(g.in_domain(b, 0.1), xi), ball_geodesic(g.in_domain(b, 0.1), xi));
  return {worst20 < 1e-3 && monotone, fmt("gap at t=20 %.3e", worst20) + (monotone ? ", monotone" : ", not monotone")};
}

// 11. line type
Outcome criterion11() {
  const Domain e = egg(4);
  const int t1 = line_type(e, make_boundary_point(e, vec({1.0, 0.0}))).type;
  const int t2 = line_type(e, make_boundary_point(e, vec({0.0, 1.0}))).type;
  bool ball_ok = true;
  Gen g(1111);
  for (int n : {2, 3}) {
    const Domain b = ball(n);
    for (int i = 0; i < 3; ++i) ball_ok = ball_ok && line_type(b, make_boundary_point(b, g.on_sphere(n))).type == 2;
  }
  return {t1 == 4 && t2 == 2 && ball_ok, "egg4 (1,0): " + std::to_string(t1) + ", egg4 (0,1): " + std::to_string(t2) +
                                             (ball_ok ? ", balls: 2" : ", balls: mismatch")};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> cs{criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                                                 criterion7, criterion8, criterion9, criterion10, criterion11};
  int failed = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = cs[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu: %s  %s  [%.2f s]\n", i + 1, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed ? 1 : 0;
}
