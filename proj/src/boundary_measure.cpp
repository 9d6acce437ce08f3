#include "pluripot/boundary_measure.hpp"

#include <cmath>
#include <cstdio>

#include <boost/math/special_functions/legendre.hpp>

#include "pluripot/ladder.hpp"

namespace pluripot {

double boundary_form_density(const Domain& d, const BoundaryPoint& xi, double rho_scale) {
  const int n = d.dim();
  if (n == 1) return 1.0;
  const auto L = levi_data(d, xi, 1e-3, rho_scale);
  const double det = L.L.determinant().real();
  const double gpow = std::pow(L.grad_norm, n - 1);
  if (std::abs(det) <= 1e-10 * gpow) return 0.0;
  double fact = 1.0;
  for (int k = 2; k <= n - 1; ++k) fact *= k;
  return std::pow(4.0, n - 1) * fact * det / gpow;
}

std::optional<double> reference_surface_volume(const Domain& d) {
  if (d.kind() == Kind::disc) return 2.0 * kPi;
  if (d.kind() == Kind::ball) {
    // |S^{2n-1}| = 2 pi^n / (n-1)!
    double fact = 1.0;
    for (int k = 2; k <= d.dim() - 1; ++k) fact *= k;
    return 2.0 * std::pow(kPi, d.dim()) / fact;
  }
  return std::nullopt;
}

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.clear();
  w.clear();
  const auto zeros = boost::math::legendre_p_zeros<double>(n);
  for (double r : zeros) {
    const double dp = boost::math::legendre_p_prime<double>(n, r);
    const double wt = 2.0 / ((1.0 - r * r) * dp * dp);
    x.push_back(r);
    w.push_back(wt);
    if (r != 0.0) {
      x.push_back(-r);
      w.push_back(wt);
    }
  }
}

}  // namespace

BoundaryQuadrature build_quadrature(const Domain& d, int resolution) {
  if (resolution < 4) throw ConfigError("quadrature resolution too coarse");
  BoundaryQuadrature q{d, {}, resolution, 0.0};
  if (d.kind() == Kind::disc) {
    for (int k = 0; k < resolution; ++k) {
      const cplx x = std::polar(1.0, 2.0 * kPi * k / resolution);
      q.nodes.push_back({vec({x}), 2.0 * kPi / resolution, 1.0});
    }
  } else if ((d.kind() == Kind::ball || d.kind() == Kind::ellipsoid) && d.dim() == 2) {
    const double m = d.exponents()[1];
    std::vector<double> gx, gw;
    gauss_legendre(resolution, gx, gw);
    const int nth = resolution;
    const double dth = 2.0 * kPi / nth;
    for (std::size_t i = 0; i < gx.size(); ++i) {
      const double eta = kPi / 4.0 * (gx[i] + 1.0);
      const double weta = kPi / 4.0 * gw[i];
      const double se = std::sin(eta), ce = std::cos(eta);
      const double s = std::pow(se, 2.0 / m), R = ce;
      const double dsdeta = (2.0 / m) * std::pow(se, 2.0 / m - 1.0) * ce;
      const double jac = s * std::sqrt(R * R + (m / 2.0) * (m / 2.0) * std::pow(s, 2.0 * m - 2.0)) * dsdeta;
      // the density is invariant under the torus action, so one evaluation per eta
      const double dens = boundary_form_density(d, make_boundary_point(d, vec({R, s})));
      for (int a = 0; a < nth; ++a) {
        for (int b = 0; b < nth; ++b) {
          CVec xi = vec({std::polar(R, dth * a), std::polar(s, dth * b)});
          q.nodes.push_back({std::move(xi), weta * jac * dth * dth, dens});
        }
      }
    }
  } else {
    throw ConfigError("build_quadrature supports the disc and two-dimensional balls/ellipsoids");
  }
  // pairwise summation for a deterministic, accurate total
  std::vector<double> ws;
  for (const auto& n : q.nodes) ws.push_back(n.weight);
  while (ws.size() > 1) {
    std::vector<double> next;
    for (std::size_t i = 0; i + 1 < ws.size(); i += 2) next.push_back(ws[i] + ws[i + 1]);
    if (ws.size() % 2) next.push_back(ws.back());
    ws.swap(next);
  }
  q.total_measure = ws.empty() ? 0.0 : ws[0];
  if (auto ref = reference_surface_volume(d))
    if (std::abs(q.total_measure / *ref - 1.0) > 1e-3) throw NumericalError("quadrature sanity check failed: resolution too coarse");
  return q;
}

double reproduce_pluriharmonic(const Domain& d, const std::function<double(const CVec&)>& F, const CVec& z,
                               const BoundaryQuadrature& q) {
  if (!d.contains(z)) throw ConfigError("reproduce_pluriharmonic: point must be interior");
  const int n = d.dim();
  std::vector<double> terms;
  terms.reserve(q.nodes.size());
  BoundaryPoint bp;
  for (const auto& node : q.nodes) {
    if (node.density == 0.0) {
      terms.push_back(0.0);
      continue;
    }
    bp.xi = node.xi;
    const auto om = poisson_kernel(d, bp, z, Method::closed_form);
    terms.push_back(node.weight * node.density * std::pow(std::abs(om.value), n) * F(node.xi));
  }
  while (terms.size() > 1) {
    std::vector<double> next;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2) next.push_back(terms.back());
    terms.swap(next);
  }
  return (terms.empty() ? 0.0 : terms[0]) / std::pow(2.0 * kPi, n);
}

AdaptiveIntegral reproduce_adaptive(const Domain& d, const std::function<double(const CVec&)>& F, const CVec& z,
                                    int start_resolution, double tol, int max_resolution) {
  AdaptiveIntegral out;
  int res = start_resolution;
  double prev = reproduce_pluriharmonic(d, F, z, build_quadrature(d, res));
  while (res * 2 <= max_resolution) {
    res *= 2;
    const double cur = reproduce_pluriharmonic(d, F, z, build_quadrature(d, res));
    out.previous = prev;
    out.value = cur;
    out.resolution = res;
    if (std::abs(cur - prev) < tol) {
      out.converged = true;
      return out;
    }
    prev = cur;
  }
  return out;
}

KernelValue green_ratio(const Domain& d, const CVec& z, const BoundaryPoint& xi, const std::vector<double>& ladder) {
  std::vector<double> est;
  double width = 0.0;
  for (double t : ladder) {
    const CVec w = xi.xi - t * xi.normal;
    if (!d.contains(w)) continue;
    const auto g = green_function(d, z, w);
    est.push_back(g.value / -delta(d, w));
    width = std::max(width, g.uncertainty / t);
  }
  if (est.size() < 3) throw NumericalError("green_ratio: ladder left the domain");
  if (std::abs(est.back() - est[est.size() - 2]) > 1e-3 * std::max(1.0, std::abs(est.back())) + width)
    throw NumericalError("green_ratio: ladder did not converge");
  const auto lr = aitken(est);
  KernelValue kv;
  kv.value = lr.value;
  kv.uncertainty = lr.uncertainty + width;
  kv.method = Method::limit_ladder;
  return kv;
}

void write_quadrature_csv(std::ostream& os, const BoundaryQuadrature& q) {
  const int n = q.domain.dim();
  for (int j = 0; j < n; ++j) os << "xi" << j << "_re,xi" << j << "_im,";
  os << "weight,density\n";
  char buf[64];
  for (const auto& node : q.nodes) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,", node.xi(j).real());
      os << buf;
      std::snprintf(buf, sizeof buf, "%.17g,", node.xi(j).imag());
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", node.weight, node.density);
    os << buf;
  }
}

}  // namespace pluripot
