#pragma once

#include <functional>
#include <string>

#include "pluripot/common.hpp"
#include "pluripot/domain.hpp"

namespace pluripot {

enum class Provenance { closed_form, constructed };

struct GeodesicDisc {
  std::function<CVec(cplx)> map;
  std::function<CVec(cplx)> derivative;
  CVec endpoint;
  double normal_derivative = 1.0;  // phi'_N(1)
  Provenance provenance = Provenance::closed_form;
  std::string label;

  CVec operator()(cplx z) const { return map(z); }
  // Real geodesic t -> phi(tanh(t/2)).
  CVec real_geodesic(double t) const { return map(std::tanh(t / 2.0)); }
};

// phi_a on the egg E_m in C^2, endpoint (1,0), phi'_N(1) = 1/(1+|a|^m).
GeodesicDisc egg_geodesic(int m, cplx a);
// Same family inside an n-dimensional ellipsoid, nonzero only in z_0 and z_j.
GeodesicDisc egg_geodesic(const Domain& d, cplx a, int j = 1);
// Parameters (a, zeta) of the catalogued egg geodesic through z, if z has at
// most one nonzero tangential coordinate.
struct EggChart {
  int coord = 1;
  cplx a;
  cplx zeta;
};
std::optional<EggChart> egg_chart(const Domain& d, const CVec& z);

// Affine slice disc of B^n with phi(0) = z and phi(1) = xi.
GeodesicDisc ball_geodesic(const CVec& z, const CVec& xi);

struct DistanceBound {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  double value() const { return exact ? upper : 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

double ball_distance(const CVec& z, const CVec& w);
// Exact distance on an ellipsoid when one point has all tangential
// coordinates zero; the other point is arbitrary.
double ellipsoid_axis_distance(const Domain& d, cplx axis0, const CVec& x);

DistanceBound kobayashi_distance(const Domain& d, const CVec& z, const CVec& w);
double caratheodory_lower_bound(const Domain& d, const CVec& z, const CVec& w);
double slice_upper_bound(const Domain& d, const CVec& z, const CVec& w);

struct GapResult {
  double value = 0.0;
  double lower = 0.0;
  bool inconclusive = false;
};

GapResult asymptoticity_gap(const Domain& d, const GeodesicDisc& phi, const GeodesicDisc& psi, double t);

}  // namespace pluripot
