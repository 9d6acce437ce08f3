#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pluripot/common.hpp"
#include "pluripot/domain.hpp"
#include "pluripot/geodesics.hpp"

namespace pluripot {

enum class Method { closed_form, geodesic_formula, limit_ladder, distance_bounds };
std::string to_string(Method m);

struct KernelValue {
  double value = 0.0;
  Method method = Method::closed_form;
  double uncertainty = 0.0;
  bool neg_infinity = false;  // logarithmic pole of the Green function
};

// log tanh(k/2) without cancellation for large k.
double log_tanh_half(double k);

// G_w(z) = log tanh(k(z,w)/2). Throws NumericalError when distance bounds
// leave an uncertainty above tol.
KernelValue green_function(const Domain& d, const CVec& w, const CVec& z,
                           double tol = std::numeric_limits<double>::infinity());

// Omega_xi(z), highest-precedence method available unless one is forced.
KernelValue poisson_kernel(const Domain& d, const BoundaryPoint& xi, const CVec& z,
                           std::optional<Method> force = std::nullopt);
// Which methods can evaluate Omega at this pair.
std::vector<Method> poisson_methods(const Domain& d, const BoundaryPoint& xi, const CVec& z);

KernelValue horofunction(const Domain& d, const BoundaryPoint& xi, const CVec& p, const CVec& z,
                         std::optional<Method> force = std::nullopt);

// lim_{t -> 0-} G_z(xi + t n_xi) / t, a positive number equal to -Omega_xi(z).
KernelValue green_normal_derivative(const Domain& d, const BoundaryPoint& xi, const CVec& z);

enum class Membership { inside, outside, indeterminate };
std::string to_string(Membership m);

Membership horosphere_contains(const Domain& d, const BoundaryPoint& xi, const CVec& p, double R, const CVec& z);
Membership k_region_contains(const Domain& d, const BoundaryPoint& xi, const CVec& p, double M, const CVec& z);

// lim k(z_j, p) + log delta(z_j); the expected limit is -log(|Omega_xi(p)|/2).
KernelValue boundary_distance_asymptotic(const Domain& d, const BoundaryPoint& xi, const CVec& p,
                                         const std::vector<CVec>& approach);

// Approach ladders toward xi, one point per delta.
std::vector<CVec> normal_approach(const BoundaryPoint& xi, const std::vector<double>& deltas);
// xi - delta n + slope * delta * tau
std::vector<CVec> slanted_approach(const BoundaryPoint& xi, const std::vector<double>& deltas, double slope);
// xi - delta n + delta^power * tau, tangential for power < 1
std::vector<CVec> curved_approach(const BoundaryPoint& xi, const std::vector<double>& deltas, double power);

std::vector<double> decade_ladder(int first, int last);

}  // namespace pluripot
