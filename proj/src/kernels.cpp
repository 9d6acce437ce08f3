#include "pluripot/kernels.hpp"

#include <cmath>

#include "pluripot/hyperbolic.hpp"
#include "pluripot/ladder.hpp"

namespace pluripot {

std::string to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::geodesic_formula: return "geodesic_formula";
    case Method::limit_ladder: return "limit_ladder";
    case Method::distance_bounds: return "distance_bounds";
  }
  return "?";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::outside: return "outside";
    case Membership::indeterminate: return "indeterminate";
  }
  return "?";
}

double log_tanh_half(double k) {
  if (k > 1.0) {
    const double e = std::exp(-k);
    return std::log1p(-e) - std::log1p(e);
  }
  return std::log(std::tanh(k / 2.0));
}

std::vector<double> decade_ladder(int first, int last) {
  std::vector<double> out;
  for (int j = first; j <= last; ++j) out.push_back(std::pow(10.0, -j));
  return out;
}

KernelValue green_function(const Domain& d, const CVec& w, const CVec& z, double tol) {
  if (!d.contains(z) || !d.contains(w)) throw ConfigError("green_function: points must be interior");
  KernelValue kv;
  if ((z - w).norm() == 0.0) {
    kv.neg_infinity = true;
    kv.method = Method::closed_form;
    return kv;
  }
  const auto b = kobayashi_distance(d, z, w);
  if (b.exact) {
    kv.value = log_tanh_half(b.upper);
    kv.method = d.caps().closed_form_green ? Method::closed_form : Method::geodesic_formula;
    return kv;
  }
  const double lo = b.lower > 0 ? log_tanh_half(b.lower) : -std::numeric_limits<double>::infinity();
  const double hi = log_tanh_half(b.upper);
  if (!std::isfinite(lo)) throw NumericalError("green_function: distance lower bound is zero");
  kv.value = 0.5 * (lo + hi);
  kv.uncertainty = 0.5 * (hi - lo);
  kv.method = Method::distance_bounds;
  if (kv.uncertainty > tol) throw NumericalError("green_function: distance bounds too wide for the requested tolerance");
  return kv;
}

namespace {

// Ellipsoid boundary points of the form (e^{i theta}, 0, ..., 0).
std::optional<cplx> ellipsoid_axis_pole(const Domain& d, const BoundaryPoint& xi) {
  for (int j = 1; j < d.dim(); ++j)
    if (std::abs(xi.xi(j)) > 1e-14) return std::nullopt;
  return xi.xi(0) / std::abs(xi.xi(0));
}

bool all_two(const Domain& d) {
  for (int m : d.exponents())
    if (m != 2) return false;
  return !d.exponents().empty();
}

std::optional<double> poisson_closed(const Domain& d, const BoundaryPoint& xi, const CVec& z) {
  switch (d.kind()) {
    case Kind::disc: return poisson_disc(z(0), xi.xi(0));
    case Kind::half_plane: return poisson_halfplane(z(0) - cplx(0.0, xi.xi(0).imag()));
    case Kind::ball: return -(1.0 - z.squaredNorm()) / std::norm(1.0 - herm(z, xi.xi));
    case Kind::ellipsoid: {
      if (all_two(d)) return -(1.0 - z.squaredNorm()) / std::norm(1.0 - herm(z, xi.xi));
      const auto ph = ellipsoid_axis_pole(d, xi);
      if (!ph) return std::nullopt;
      return d.defining_function(z) / std::norm(1.0 - z(0) * std::conj(*ph));
    }
    default: return std::nullopt;
  }
}

std::optional<double> poisson_geodesic(const Domain& d, const BoundaryPoint& xi, const CVec& z) {
  if (d.kind() == Kind::disc) return poisson_disc(z(0), xi.xi(0));
  if (d.kind() == Kind::ball) {
    const auto g = ball_geodesic(z, xi.xi);
    return -1.0 / g.normal_derivative;
  }
  if (d.kind() != Kind::ellipsoid) return std::nullopt;
  const auto ph = ellipsoid_axis_pole(d, xi);
  if (!ph) return std::nullopt;
  CVec zr = z;
  zr(0) *= std::conj(*ph);
  const auto c = egg_chart(d, zr);
  if (!c) return std::nullopt;
  const double A = std::pow(std::abs(c->a), d.exponents()[c->coord]);
  // Omega(phi_a(zeta)) = Omega^D_1(zeta) / phi'_N(1)
  return poisson_disc(c->zeta, 1.0) * (1.0 + A);
}

}  // namespace

std::vector<Method> poisson_methods(const Domain& d, const BoundaryPoint& xi, const CVec& z) {
  std::vector<Method> out;
  if (poisson_closed(d, xi, z)) out.push_back(Method::closed_form);
  if (poisson_geodesic(d, xi, z)) out.push_back(Method::geodesic_formula);
  if (d.kind() != Kind::half_plane) out.push_back(Method::limit_ladder);
  return out;
}

KernelValue poisson_kernel(const Domain& d, const BoundaryPoint& xi, const CVec& z, std::optional<Method> force) {
  if (!d.contains(z)) throw ConfigError("poisson_kernel: point must be interior");
  KernelValue kv;
  if (!force || *force == Method::closed_form) {
    if (auto v = poisson_closed(d, xi, z)) {
      kv.value = *v;
      kv.method = Method::closed_form;
      return kv;
    }
    if (force) throw NumericalError("poisson_kernel: no closed form for this domain/point");
  }
  if (!force || *force == Method::geodesic_formula) {
    if (auto v = poisson_geodesic(d, xi, z)) {
      kv.value = *v;
      kv.method = Method::geodesic_formula;
      return kv;
    }
    if (force) throw NumericalError("poisson_kernel: no catalogued geodesic through this point");
  }
  if (d.kind() == Kind::half_plane) throw NumericalError("poisson_kernel: no ladder for the half-plane");
  const auto g = green_normal_derivative(d, xi, z);
  kv.value = -g.value;
  kv.uncertainty = g.uncertainty;
  kv.method = Method::limit_ladder;
  return kv;
}

KernelValue horofunction(const Domain& d, const BoundaryPoint& xi, const CVec& p, const CVec& z,
                         std::optional<Method> force) {
  if (!d.contains(z) || !d.contains(p)) throw ConfigError("horofunction: points must be interior");
  KernelValue kv;
  const bool want_ladder = force && *force == Method::limit_ladder;
  if (!want_ladder) {
    const auto ms = poisson_methods(d, xi, z);
    const auto mp = poisson_methods(d, xi, p);
    for (Method m : {Method::closed_form, Method::geodesic_formula}) {
      if (force && *force != m) continue;
      if (std::find(ms.begin(), ms.end(), m) == ms.end() || std::find(mp.begin(), mp.end(), m) == mp.end()) continue;
      const double op = poisson_kernel(d, xi, p, m).value, oz = poisson_kernel(d, xi, z, m).value;
      kv.value = std::log(std::abs(op)) - std::log(std::abs(oz));
      kv.method = m;
      return kv;
    }
    if (force) throw NumericalError("horofunction: requested method unavailable");
  }
  std::vector<double> est;
  double width = 0.0;
  for (double t : decade_ladder(2, 8)) {
    const CVec w = xi.xi - t * xi.normal;
    if (!d.contains(w)) continue;
    const auto a = kobayashi_distance(d, z, w), b = kobayashi_distance(d, w, p);
    est.push_back(a.value() - b.value());
    width = std::max(width, 0.5 * (a.width() + b.width()));
  }
  const auto lr = aitken(est);
  if (est.size() < 3 || std::abs(est.back() - est[est.size() - 2]) > 1e-4 + width)
    throw NumericalError("horofunction: distance-limit ladder did not converge");
  kv.value = lr.value;
  kv.uncertainty = lr.uncertainty + width;
  kv.method = Method::limit_ladder;
  return kv;
}

KernelValue green_normal_derivative(const Domain& d, const BoundaryPoint& xi, const CVec& z) {
  if (!d.contains(z)) throw ConfigError("green_normal_derivative: point must be interior");
  std::vector<double> est;
  double width = 0.0;
  for (double s : decade_ladder(2, 8)) {
    const double t = -s;
    const CVec w = xi.xi + t * xi.normal;
    if (!d.contains(w)) continue;
    const auto b = kobayashi_distance(d, z, w);
    est.push_back(log_tanh_half(b.value()) / t);
    if (!b.exact) width = std::max(width, std::abs(log_tanh_half(b.upper) - log_tanh_half(b.lower)) / s);
  }
  if (est.size() < 3) throw NumericalError("green_normal_derivative: ladder left the domain");
  const auto lr = aitken(est);
  if (std::abs(est.back() - est[est.size() - 2]) > 1e-4 * std::max(1.0, std::abs(est.back())) + width)
    throw NumericalError("green_normal_derivative: ladder did not converge");
  KernelValue kv;
  kv.value = lr.value;
  kv.uncertainty = lr.uncertainty + width;
  kv.method = Method::limit_ladder;
  return kv;
}

namespace {

Membership decide(double margin, double unc) {
  if (std::abs(margin) <= unc) return Membership::indeterminate;
  return margin < 0 ? Membership::inside : Membership::outside;
}

}  // namespace

Membership horosphere_contains(const Domain& d, const BoundaryPoint& xi, const CVec& p, double R, const CVec& z) {
  if (!(R > 0)) throw ConfigError("horosphere radius must be positive");
  const auto h = horofunction(d, xi, p, z);
  return decide(h.value - std::log(R), h.uncertainty);
}

Membership k_region_contains(const Domain& d, const BoundaryPoint& xi, const CVec& p, double M, const CVec& z) {
  if (!(M > 1)) throw ConfigError("K-region parameter M must exceed 1");
  const auto h = horofunction(d, xi, p, z);
  const auto k = kobayashi_distance(d, z, p);
  return decide(h.value + k.value() - 2.0 * std::log(M), h.uncertainty + 0.5 * k.width());
}

KernelValue boundary_distance_asymptotic(const Domain& d, const BoundaryPoint&, const CVec& p,
                                         const std::vector<CVec>& approach) {
  std::vector<double> est;
  double width = 0.0;
  for (const CVec& z : approach) {
    const auto k = kobayashi_distance(d, z, p);
    est.push_back(k.value() + std::log(delta(d, z)));
    width = std::max(width, 0.5 * k.width());
  }
  if (est.size() < 2) throw NumericalError("boundary_distance_asymptotic: approach too short");
  const auto lr = aitken(est);
  KernelValue kv;
  kv.value = lr.value;
  kv.uncertainty = lr.uncertainty + width;
  kv.method = Method::limit_ladder;
  return kv;
}

std::vector<CVec> normal_approach(const BoundaryPoint& xi, const std::vector<double>& deltas) {
  std::vector<CVec> out;
  for (double t : deltas) out.push_back(xi.xi - t * xi.normal);
  return out;
}

std::vector<CVec> slanted_approach(const BoundaryPoint& xi, const std::vector<double>& deltas, double slope) {
  if (xi.tangent.empty()) return normal_approach(xi, deltas);
  std::vector<CVec> out;
  for (double t : deltas) out.push_back(xi.xi - t * xi.normal + (slope * t) * xi.tangent.front());
  return out;
}

std::vector<CVec> curved_approach(const BoundaryPoint& xi, const std::vector<double>& deltas, double power) {
  if (xi.tangent.empty()) return normal_approach(xi, deltas);
  std::vector<CVec> out;
  for (double t : deltas) out.push_back(xi.xi - t * xi.normal + std::pow(t, power) * xi.tangent.front());
  return out;
}

}  // namespace pluripot
