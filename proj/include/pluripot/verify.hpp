#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pluripot/common.hpp"
#include "pluripot/domain.hpp"
#include "pluripot/geodesics.hpp"

namespace pluripot {

using Field = std::function<double(const CVec&)>;
using PlaneField = std::function<double(cplx)>;

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct SampleDetail {
  int index = 0;
  double residual = 0.0;
  bool ok = true;
  std::string info;
};

struct VerificationReport {
  std::string check;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::pass;
  std::vector<SampleDetail> details;
  std::string note;

  // Adds a sample and keeps max_residual current.
  void add(double residual, bool ok, std::string info = {});
  // pass iff max_residual <= tolerance, unless a sample was marked
  // inconclusive and no sample failed outright.
  void finalize(bool any_inconclusive = false);
  bool passed() const { return verdict == Verdict::pass; }
};

nlohmann::json to_json(const VerificationReport& r, bool with_details = false);

struct HessianSample {
  CVec z;
  double h = 0.0;
  CMat H;
  double richardson_gap = 0.0;
};

// d^2u/dz_j dzbar_k by the polarized 4-point stencil at steps h and h/2.
// With a domain, the stencil must stay inside it.
HessianSample complex_hessian(const Field& u, const CVec& z, double h, const Domain* d = nullptr);

struct MongeAmpere {
  double det = 0.0;       // det of the complex Hessian
  double scaled = 0.0;    // 4^n n! det, the density of (dd^c u)^n
  double relative = 0.0;  // |det| / lambda_max^n
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  Eigen::VectorXd eigenvalues;
  CMat eigenvectors;
};

MongeAmpere monge_ampere_residual(const Field& u, const CVec& z, double h, const Domain* d = nullptr);
MongeAmpere monge_ampere_of(const HessianSample& s);

// Steps are h_rel * delta_D(z) when a domain is given, h_rel otherwise.
VerificationReport psh_check(const Field& u, const std::vector<CVec>& samples, double h_rel, double tol,
                             const Domain* d = nullptr);

struct Laplacian1D {
  double value = 0.0;
  double richardson_gap = 0.0;
};

Laplacian1D laplacian_1d(const PlaneField& u, cplx z, double h);

struct StencilNoise {
  double floor = 0.0;  // max |L c| h^2 / max|c| over the grid, c = Re exp(w)
  double peak = 0.0;   // max ratio
  cplx peak_at;
  std::vector<cplx> points;   // after snapping to the step grid
  std::vector<double> ratio;  // |L u| h^2 / (max|u| floor)
};

// Laplacian of u at each point in units of the stencil noise floor measured
// on a harmonic control with the same points and steps. Steps are rounded
// down to powers of two and points snapped to the step grid, so the stencil
// offsets are exact in floating point.
StencilNoise laplacian_noise_scan(const PlaneField& u, const std::vector<cplx>& points,
                                  const std::vector<double>& steps);

// |Laplacian of u o phi| divided by |u o phi| / (1-|zeta|)^2 at each sample.
VerificationReport harmonic_along_geodesic(const Field& u, const GeodesicDisc& phi, const std::vector<cplx>& samples,
                                           double tol, double h_rel = 1e-2);

struct PhragmenLindelof {
  VerificationReport membership;  // limsup u(gamma(t))(1-t) <= -2/gamma'_N(1)
  VerificationReport domination;  // u <= Omega_xi at samples
  bool consistent = true;         // membership implies domination
};

PhragmenLindelof phragmen_lindelof_compare(const Field& u, const Domain& d, const BoundaryPoint& xi,
                                           const std::vector<GeodesicDisc>& curves, const std::vector<CVec>& samples,
                                           double tol);

}  // namespace pluripot
