#pragma once

#include <functional>
#include <ostream>
#include <vector>

#include "pluripot/common.hpp"
#include "pluripot/domain.hpp"
#include "pluripot/kernels.hpp"

namespace pluripot {

// 4^{n-1} (n-1)! det(L) / |d rho|^{n-1}: density of the boundary form
// against Euclidean surface measure. Zero at weakly pseudoconvex points.
double boundary_form_density(const Domain& d, const BoundaryPoint& xi, double rho_scale = 1.0);

struct QuadratureNode {
  CVec xi;
  double weight = 0.0;   // Euclidean surface element
  double density = 0.0;  // boundary_form_density at xi
};

struct BoundaryQuadrature {
  Domain domain;
  std::vector<QuadratureNode> nodes;
  int resolution = 0;
  double total_measure = 0.0;
};

// Product-angle rule: uniform in the two phases, Gauss-Legendre in the
// modulus angle. Supports the disc and two-dimensional balls/ellipsoids.
BoundaryQuadrature build_quadrature(const Domain& d, int resolution);

// Known (2n-1)-volume of the boundary when available (balls, disc).
std::optional<double> reference_surface_volume(const Domain& d);

// (2 pi)^{-n} sum weight * density * |Omega_xi(z)|^n * F(xi)
double reproduce_pluriharmonic(const Domain& d, const std::function<double(const CVec&)>& F, const CVec& z,
                               const BoundaryQuadrature& q);

struct AdaptiveIntegral {
  double value = 0.0;
  double previous = 0.0;
  int resolution = 0;
  bool converged = false;
};

// Doubles the resolution until two successive integrals differ by < tol.
AdaptiveIntegral reproduce_adaptive(const Domain& d, const std::function<double(const CVec&)>& F, const CVec& z,
                                    int start_resolution = 16, double tol = 1e-3, int max_resolution = 128);

// lim G_z(w)/(-delta(w)) for w -> xi along the inner normal.
KernelValue green_ratio(const Domain& d, const CVec& z, const BoundaryPoint& xi, const std::vector<double>& ladder);

void write_quadrature_csv(std::ostream& os, const BoundaryQuadrature& q);

}  // namespace pluripot
