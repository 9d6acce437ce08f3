#include "pluripot/geodesics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/math/special_functions/erf.hpp>

#include "pluripot/hyperbolic.hpp"

namespace pluripot {

GeodesicDisc egg_geodesic(int m, cplx a) {
  return egg_geodesic(make_domain(DomainSpec{"ellipsoid", 2, {m}, 0.0}), a, 1);
}

GeodesicDisc egg_geodesic(const Domain& d, cplx a, int j) {
  if (d.kind() != Kind::ellipsoid && d.kind() != Kind::ball) throw ConfigError("egg_geodesic needs an ellipsoid");
  if (j < 1 || j >= d.dim()) throw ConfigError("egg_geodesic: coordinate index out of range");
  const int n = d.dim();
  const int m = d.exponents()[j];
  const double A = std::pow(std::abs(a), m);
  const double p = 2.0 / m;
  GeodesicDisc g;
  g.map = [=](cplx z) {
    CVec v = CVec::Zero(n);
    v(0) = (z + A) / (1.0 + A);
    v(j) = a * std::pow((1.0 - z) / (1.0 + A), p);
    return v;
  };
  g.derivative = [=](cplx z) {
    CVec v = CVec::Zero(n);
    v(0) = 1.0 / (1.0 + A);
    v(j) = -a * p / (1.0 + A) * std::pow((1.0 - z) / (1.0 + A), p - 1.0);
    return v;
  };
  g.endpoint = unit(n, 0);
  g.normal_derivative = 1.0 / (1.0 + A);
  g.provenance = Provenance::closed_form;
  char buf[96];
  std::snprintf(buf, sizeof buf, "egg(m=%d,a=%g%+gi,j=%d)", m, a.real(), a.imag(), j);
  g.label = buf;
  return g;
}

std::optional<EggChart> egg_chart(const Domain& d, const CVec& z) {
  if (d.kind() != Kind::ellipsoid) return std::nullopt;
  int coord = 0;
  for (int j = 1; j < d.dim(); ++j) {
    if (z(j) != 0.0) {
      if (coord) return std::nullopt;
      coord = j;
    }
  }
  EggChart c;
  if (!coord) {
    c.coord = 1;
    c.a = 0.0;
    c.zeta = z(0);
    return c;
  }
  const int m = d.exponents()[coord];
  c.coord = coord;
  c.a = z(coord) / std::pow(1.0 - z(0), 2.0 / m);
  const double A = std::pow(std::abs(c.a), m);
  c.zeta = z(0) * (1.0 + A) - A;
  return c;
}

GeodesicDisc ball_geodesic(const CVec& z, const CVec& xi) {
  if (z.size() != xi.size()) throw ConfigError("ball_geodesic: dimension mismatch");
  if (!(z.squaredNorm() < 1.0)) throw ConfigError("ball_geodesic: z must be interior");
  if (std::abs(xi.norm() - 1.0) > 1e-12) throw ConfigError("ball_geodesic: xi must lie on the sphere");
  if ((z - xi).norm() == 0.0) throw ConfigError("ball_geodesic: z equals xi");
  const CVec v = (z - xi) / (z - xi).norm();
  const CVec c = xi - herm(xi, v) * v;
  const double R = std::sqrt(1.0 - c.squaredNorm());
  const cplx alpha = herm(z - c, v) / R;
  cplx beta = herm(xi - c, v) / R;
  beta /= std::abs(beta);
  const cplx u = (beta - alpha) / (1.0 - std::conj(alpha) * beta);
  auto M = [=](cplx s) { return (u * s + alpha) / (1.0 + std::conj(alpha) * u * s); };
  auto dM = [=](cplx s) {
    const cplx den = 1.0 + std::conj(alpha) * u * s;
    return u * (1.0 - std::norm(alpha)) / (den * den);
  };
  GeodesicDisc g;
  g.map = [=](cplx s) { return CVec(c + (R * M(s)) * v); };
  g.derivative = [=](cplx s) { return CVec((R * dM(s)) * v); };
  g.endpoint = xi;
  g.normal_derivative = herm(g.derivative(1.0), xi).real();
  g.provenance = Provenance::closed_form;
  g.label = "ball-slice";
  return g;
}

double ball_distance(const CVec& z, const CVec& w) {
  const double nz = z.squaredNorm(), nw = w.squaredNorm();
  if (!(nz < 1.0) || !(nw < 1.0)) throw ConfigError("ball_distance: points must be interior");
  const CVec dz = w - z;
  const double den = std::norm(1.0 - herm(z, w));
  const double num = dz.squaredNorm() * (1.0 - nz) + std::norm(herm(z, dz));
  const double t = std::sqrt(num / den);
  return hyperbolic_from_t(t, (1.0 - nz) * (1.0 - nw) / den);
}

namespace {

// epsilon = 1 - mu for the Minkowski functional mu of
// |x_0|^2 + sum |x_j|^{m_j} < 1, given s0 = 1 - |x_0|^2 and q_j = |x_j|^{m_j}.
double minkowski_defect(double s0, const std::vector<double>& q, const std::vector<int>& e) {
  const double c0 = 1.0 - s0;
  double qs = 0.0;
  for (double x : q) qs += x;
  const double T = s0 - qs;
  if (!(T > 0.0)) throw ConfigError("point is not interior");
  if (c0 + qs == 0.0) return 1.0;
  auto g = [&](double eps) {
    const double L = std::log1p(-eps);
    double s = c0 * std::expm1(-2.0 * L) - T;
    for (std::size_t j = 0; j < q.size(); ++j) s += q[j] * std::expm1(-e[j + 1] * L);
    return s;
  };
  auto dg = [&](double eps) {
    const double b = 1.0 - eps;
    double s = 2.0 * c0 / (b * b * b);
    for (std::size_t j = 0; j < q.size(); ++j) s += q[j] * e[j + 1] * std::pow(b, -e[j + 1] - 1);
    return s;
  };
  double lo = 0.0, hi = 1.0;
  double x = std::min(0.5, T / dg(0.0));
  for (int it = 0; it < 200; ++it) {
    const double gx = g(x);
    if (gx == 0.0) return x;
    (gx < 0.0 ? lo : hi) = x;
    double nx = x - gx / dg(x);
    if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
    if (std::abs(nx - x) <= 1e-16 * x) return nx;
    x = nx;
  }
  return x;
}

bool on_axis(const CVec& z) {
  for (Eigen::Index j = 1; j < z.size(); ++j)
    if (z(j) != 0.0) return false;
  return true;
}

}  // namespace

double ellipsoid_axis_distance(const Domain& d, cplx a, const CVec& x) {
  const auto& e = d.exponents();
  if (e.empty()) throw ConfigError("ellipsoid_axis_distance needs an ellipsoid");
  const double na = std::norm(a);
  if (!(na < 1.0)) throw ConfigError("axis point is not interior");
  const double den = std::norm(1.0 - std::conj(a) * x(0));
  const double s0 = (1.0 - na) * (1.0 - std::norm(x(0))) / den;
  std::vector<double> q;
  for (int j = 1; j < d.dim(); ++j) {
    const double ax = std::abs(x(j));
    q.push_back((1.0 - na) * (e[j] == 2 ? ax * ax : std::pow(ax, e[j])) / den);
  }
  const double eps = minkowski_defect(s0, q, e);
  const double mu = 1.0 - eps;
  if (mu < 0.5) return 2.0 * std::atanh(mu);
  return std::log((2.0 - eps) / eps);
}

namespace {

// Low-discrepancy unit vectors on S^{2n-1} (R_d sequence through the
// inverse normal CDF).
std::vector<CVec> sphere_directions(int n, int count) {
  const int dd = 2 * n;
  double phi = 2.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dd + 1));
  std::vector<double> alpha(dd);
  for (int i = 0; i < dd; ++i) alpha[i] = std::fmod(std::pow(1.0 / phi, i + 1), 1.0);
  std::vector<CVec> out;
  for (int k = 1; k <= count; ++k) {
    CVec v(n);
    for (int i = 0; i < n; ++i) {
      double u[2];
      for (int c = 0; c < 2; ++c) {
        const double x = std::fmod(0.5 + k * alpha[2 * i + c], 1.0);
        u[c] = std::sqrt(2.0) * boost::math::erf_inv(2.0 * x - 1.0);
      }
      v(i) = cplx(u[0], u[1]);
    }
    out.push_back(v / v.norm());
  }
  return out;
}

CVec domain_center(const Domain& d) {
  switch (d.kind()) {
    case Kind::half_plane: return vec({-1.0});
    case Kind::annulus: return vec({(1.0 + d.inner_radius()) / 2.0});
    case Kind::general_convex: return d.reference_points().front();
    default: return CVec::Zero(d.dim());
  }
}

}  // namespace

double caratheodory_lower_bound(const Domain& d, const CVec& z, const CVec& w) {
  if (!d.contains(z) || !d.contains(w)) throw ConfigError("caratheodory_lower_bound: points must be interior");
  if (d.kind() == Kind::annulus) return 0.0;  // not convex
  if ((z - w).norm() == 0.0) return 0.0;
  std::vector<CVec> support;
  const CVec c = domain_center(d);
  for (const CVec& u : sphere_directions(d.dim(), 2 * d.dim() * 32)) {
    try {
      support.push_back(ray_to_boundary(d, c, u));
    } catch (const NumericalError&) {
    }
  }
  for (const CVec* p : {&z, &w}) {
    try {
      support.push_back(boundary_project(d, *p).point.xi);
    } catch (const std::exception&) {
    }
  }
  try {
    support.push_back(ray_to_boundary(d, z, z - w));
    support.push_back(ray_to_boundary(d, w, w - z));
  } catch (const NumericalError&) {
  }
  double best = 0.0;
  for (const CVec& eta : support) {
    CVec nrm = d.gradient(eta);
    if (!(nrm.norm() > 0)) continue;
    nrm /= nrm.norm();
    const cplx fz = herm(z - eta, nrm), fw = herm(w - eta, nrm);
    if (!(fz.real() < 0.0) || !(fw.real() < 0.0)) continue;
    best = std::max(best, halfplane_distance(fz, fw));
  }
  return best;
}

namespace {

double slice_radius(const Domain& d, const CVec& base, const CVec& dir, double scale) {
  auto ray = [&](double th) {
    const CVec u = std::polar(1.0, th) * dir;
    return (ray_to_boundary(d, base, u) - base).norm() / scale;
  };
  const int K = 64;
  double best = std::numeric_limits<double>::infinity();
  int arg = 0;
  for (int k = 0; k < K; ++k) {
    const double r = ray(2.0 * kPi * k / K);
    if (r < best) best = r, arg = k;
  }
  double a = 2.0 * kPi * (arg - 1) / K, b = 2.0 * kPi * (arg + 1) / K;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = ray(x1), f2 = ray(x2);
  for (int it = 0; it < 40; ++it) {
    if (f1 < f2) {
      b = x2, x2 = x1, f2 = f1, x1 = b - gr * (b - a), f1 = ray(x1);
    } else {
      a = x1, x1 = x2, f1 = f2, x2 = a + gr * (b - a), f2 = ray(x2);
    }
  }
  return std::min({best, f1, f2}) * (1.0 - 1e-9);
}

}  // namespace

namespace {

// Best single slice disc through z and w, +inf when none fits.
double single_slice_bound(const Domain& d, const CVec& z, const CVec& w) {
  const CVec dir = w - z;
  const double scale = dir.norm();
  if (scale == 0.0) return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  auto objective = [&](double x, double y) {
    const cplx c(x, y);
    const CVec base = z + c * dir;
    if (!d.contains(base)) return inf;
    double R;
    try {
      R = slice_radius(d, base, dir / scale, scale);
    } catch (const NumericalError&) {
      return inf;
    }
    const cplx a = -c / R, b = (1.0 - c) / R;
    if (!(std::norm(a) < 1.0) || !(std::norm(b) < 1.0)) return inf;
    return disc_distance(a, b);
  };
  // Nelder-Mead over the disc centre in the slice coordinate.
  std::array<std::array<double, 2>, 3> s{{{0.5, 0.0}, {0.75, 0.0}, {0.5, 0.25}}};
  std::array<double, 3> f{};
  for (int i = 0; i < 3; ++i) f[i] = objective(s[i][0], s[i][1]);
  for (int it = 0; it < 200; ++it) {
    std::array<int, 3> o{0, 1, 2};
    std::sort(o.begin(), o.end(), [&](int a, int b) { return f[a] < f[b]; });
    const auto b = s[o[0]], g = s[o[1]], wv = s[o[2]];
    const double fb = f[o[0]], fg = f[o[1]], fw = f[o[2]];
    const double size = std::abs(b[0] - wv[0]) + std::abs(b[1] - wv[1]) + std::abs(b[0] - g[0]) + std::abs(b[1] - g[1]);
    if (size < 1e-12) break;
    const std::array<double, 2> m{(b[0] + g[0]) / 2, (b[1] + g[1]) / 2};
    auto at = [&](double t) { return std::array<double, 2>{m[0] + t * (wv[0] - m[0]), m[1] + t * (wv[1] - m[1])}; };
    const auto r = at(-1.0);
    const double fr = objective(r[0], r[1]);
    if (fr < fb) {
      const auto e = at(-2.0);
      const double fe = objective(e[0], e[1]);
      if (fe < fr) s[o[2]] = e, f[o[2]] = fe;
      else s[o[2]] = r, f[o[2]] = fr;
    } else if (fr < fg) {
      s[o[2]] = r, f[o[2]] = fr;
    } else {
      const auto k = fr < fw ? at(-0.5) : at(0.5);
      const double fk = objective(k[0], k[1]);
      if (fk < std::min(fr, fw)) {
        s[o[2]] = k, f[o[2]] = fk;
      } else {
        for (int i : {o[1], o[2]}) {
          s[i] = {(s[i][0] + b[0]) / 2, (s[i][1] + b[1]) / 2};
          f[i] = objective(s[i][0], s[i][1]);
        }
      }
    }
  }
  return *std::min_element(f.begin(), f.end());
}

// Chain of slice discs through midpoints of the segment.
double chained_slice_bound(const Domain& d, const CVec& z, const CVec& w, int depth) {
  const double single = single_slice_bound(d, z, w);
  if (std::isfinite(single) || depth == 0) return single;
  const CVec mid = 0.5 * (z + w);
  return chained_slice_bound(d, z, mid, depth - 1) + chained_slice_bound(d, mid, w, depth - 1);
}

}  // namespace

double slice_upper_bound(const Domain& d, const CVec& z, const CVec& w) {
  if (!d.contains(z) || !d.contains(w)) throw ConfigError("slice_upper_bound: points must be interior");
  const double best = chained_slice_bound(d, z, w, 6);
  if (!std::isfinite(best)) throw NumericalError("slice_upper_bound: could not fit a disc in the slice");
  return best;
}

DistanceBound kobayashi_distance(const Domain& d, const CVec& z, const CVec& w) {
  if (!d.contains(z) || !d.contains(w)) throw ConfigError("kobayashi_distance: points must be interior");
  auto exact = [](double v) { return DistanceBound{v, v, true}; };
  switch (d.kind()) {
    case Kind::disc: return exact(disc_distance(z(0), w(0)));
    case Kind::half_plane: return exact(halfplane_distance(z(0), w(0)));
    case Kind::annulus: return exact(annulus_distance(d.inner_radius(), z(0), w(0)));
    case Kind::ball: return exact(ball_distance(z, w));
    case Kind::ellipsoid: {
      const auto& e = d.exponents();
      if (std::all_of(e.begin(), e.end(), [](int m) { return m == 2; })) return exact(ball_distance(z, w));
      if (on_axis(z)) return exact(ellipsoid_axis_distance(d, z(0), w));
      if (on_axis(w)) return exact(ellipsoid_axis_distance(d, w(0), z));
      const auto cz = egg_chart(d, z), cw = egg_chart(d, w);
      if (cz && cw && cz->coord == cw->coord && std::abs(cz->a - cw->a) <= 1e-13 * (1.0 + std::abs(cz->a)))
        return exact(disc_distance(cz->zeta, cw->zeta));
      DistanceBound b;
      b.lower = caratheodory_lower_bound(d, z, w);
      b.upper = slice_upper_bound(d, z, w);
      // triangle inequality through axis points, where distances are exact
      for (cplx o : {cplx(0.0), z(0), w(0), 0.5 * (z(0) + w(0))}) {
        if (!(std::norm(o) < 1.0)) continue;
        const double kz = ellipsoid_axis_distance(d, o, z), kw = ellipsoid_axis_distance(d, o, w);
        b.lower = std::max(b.lower, std::abs(kz - kw));
        b.upper = std::min(b.upper, kz + kw);
      }
      if (b.lower > b.upper) b.lower = b.upper;
      return b;
    }
    case Kind::general_convex: {
      DistanceBound b;
      b.lower = caratheodory_lower_bound(d, z, w);
      b.upper = slice_upper_bound(d, z, w);
      if (b.lower > b.upper) b.lower = b.upper;
      return b;
    }
  }
  throw NumericalError("unsupported domain");
}

GapResult asymptoticity_gap(const Domain& d, const GeodesicDisc& phi, const GeodesicDisc& psi, double t) {
  if ((phi.endpoint - psi.endpoint).norm() > 1e-12) throw ConfigError("asymptoticity_gap: geodesics must share the endpoint");
  const double s = t + std::log(psi.normal_derivative / phi.normal_derivative);
  const auto b = kobayashi_distance(d, phi.real_geodesic(t), psi.real_geodesic(s));
  GapResult g;
  g.value = b.upper;
  g.lower = b.lower;
  g.inconclusive = !b.exact && b.width() > 0.5 * b.upper;
  return g;
}

}  // namespace pluripot
