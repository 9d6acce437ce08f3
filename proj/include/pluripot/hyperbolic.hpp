#pragma once

#include <functional>
#include <vector>

#include "pluripot/common.hpp"
#include "pluripot/ladder.hpp"

namespace pluripot {

// 2 artanh(t), given t and 1 - t^2 computed without cancellation.
double hyperbolic_from_t(double t, double one_minus_t2);

// Poincare distance on the unit disc, k(0,z) = log((1+|z|)/(1-|z|)).
double disc_distance(cplx a, cplx b);
// Same normalization on H = {Re < 0}.
double halfplane_distance(cplx a, cplx b);

// C(z) = (z-1)/(z+1) : D -> H and its inverse.
cplx cayley(cplx z);
cplx cayley_inverse(cplx w);
cplx cayley_inverse_derivative(cplx w);

// -(1-|z|^2)/|xi - z|^2
double poisson_disc(cplx z, cplx xi = 1.0);
// 2 Re(1/z), pole at 0 on the imaginary axis
double poisson_halfplane(cplx z);

// Strip S_r = {log r < Re w < 0} covering the annulus A_r through exp.
struct Strip {
  double width;  // -log r
  explicit Strip(double r);
  // Conformal map S_r -> H sending -width/2 to -1 and 0 to i.
  cplx to_halfplane(cplx w) const;
  double distance(cplx a, cplx b) const;
  // Horofunction at the boundary point 0 of the strip, base point q.
  double horofunction0(cplx q, cplx w) const;
};

double annulus_distance(double r, cplx z, cplx w);

struct AnnulusHorofunction {
  double value = 0.0;        // ladder limit
  double uncertainty = 0.0;
  double covering = 0.0;     // min over lifts of the strip horofunction
  std::vector<double> raw;
};

// h_{xi,p}(z) on A_r for |xi| = 1, via w = (1 - 10^-j) xi.
AnnulusHorofunction annulus_horofunction(double r, cplx xi, cplx p, cplx z, int cutoff = 8);
// Closed form through the covering strip (no ladder).
double annulus_horofunction_covering(double r, cplx xi, cplx p, cplx z);

struct AngularApproach {
  cplx xi = 1.0;
  double M = 2.0;
  double angle = 0.0;       // direction of approach relative to the radius
  std::vector<double> t;    // t_k -> 1
  std::vector<cplx> points() const;
};

// t_k = 1 - 2^-k, k = 1..kmax; angle must satisfy 1/cos(angle) < M.
AngularApproach make_angular_approach(cplx xi, double M = 2.0, int kmax = 24, double angle = 0.0);

struct AngularDerivative {
  cplx value;
  double modulus_from_julia = 0.0;  // lim (1-|f|)/(1-|z|)
  double uncertainty = 0.0;
  bool disagreement = false;        // |value| vs Julia quotient differ by > 1e-4
};

AngularDerivative angular_derivative(const std::function<cplx(cplx)>& f, const AngularApproach& ap);

}  // namespace pluripot
