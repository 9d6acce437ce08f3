#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pluripot/common.hpp"
#include "pluripot/domain.hpp"
#include "pluripot/geodesics.hpp"
#include "pluripot/verify.hpp"

namespace pluripot {

struct MapUnderTest {
  std::string name;
  Domain source;
  Domain target;
  std::function<CVec(const CVec&)> f;
  // df_z(v); empty means central differences in the complex direction v
  std::function<CVec(const CVec&, const CVec&)> df;
  std::vector<std::pair<CVec, CVec>> contacts;  // (xi, eta)

  CVec operator()(const CVec& z) const { return f(z); }
  CVec differential(const CVec& z, const CVec& v, double h) const;
};

MapUnderTest identity_map(const Domain& d);
// z -> z_0 from B^n to the disc
MapUnderTest coordinate_projection(int n = 2);
// (z_0, z_1, ...) -> (z_0, z_1^{m_1/2}, ...) from E_m to B^n
MapUnderTest egg_to_ball(const std::vector<int>& m);

// {"map": "coordinate_projection" | "egg_to_ball" | "identity", "n", "m", "domain"}
MapUnderTest map_from_json(const nlohmann::json& j);

struct DilationEstimate {
  double lambda = 0.0;      // exp of the extrapolated limit
  double log_lambda = 0.0;
  double ladder_min = 0.0;  // min over the ladder of the log quotient
  bool monotone = true;
  double uncertainty = 0.0;
  std::vector<double> raw;
};

// log lambda = liminf [k_D(z,p) - k_D'(f(z),p')] along the approach.
DilationEstimate dilation(const MapUnderTest& m, const CVec& p, const CVec& pp, const std::vector<CVec>& approach);

// alpha = lambda * Omega_xi(p) / Omega'_eta(p')
double normalized_dilation(const MapUnderTest& m, const BoundaryPoint& xi, const BoundaryPoint& eta, const CVec& p,
                           const CVec& pp, const std::vector<CVec>& approach);

struct JuliaReport {
  VerificationReport mj;           // h'(f z) - h(z) <= log lambda
  VerificationReport pj;           // Omega(z)/Omega'(f z) <= alpha
  VerificationReport consistency;  // exp(MJ gap) = PJ ratio * Omega'(p')/Omega(p)
  double sup_mj = -1e300;
  double sup_pj = -1e300;
};

JuliaReport julia_checks(const MapUnderTest& m, const BoundaryPoint& xi, const BoundaryPoint& eta, const CVec& p,
                         const CVec& pp, double lambda, const std::vector<CVec>& samples, double tol = 1e-9);

struct LadderLimit {
  double value = 0.0;
  double uncertainty = 0.0;
  std::vector<double> raw;
};

// lim <df_z(n_xi), n_eta>
LadderLimit jwc_derivative_limit(const MapUnderTest& m, const BoundaryPoint& xi, const BoundaryPoint& eta,
                                 const std::vector<CVec>& approach);
// lim delta'(f(z)) / delta(z)
LadderLimit delta_ratio_limit(const MapUnderTest& m, const std::vector<CVec>& approach);

// alpha Omega'_eta(f(z)) = Omega_xi(z) at samples, plus isometry of f o phi
// for the given geodesics (residuals combined in one report).
VerificationReport omega_preserving_check(const MapUnderTest& m, const BoundaryPoint& xi, const BoundaryPoint& eta,
                                          double alpha, const std::vector<CVec>& samples,
                                          const std::vector<GeodesicDisc>& geodesics, double tol);

// gamma_lambda(t) = (t, lambda sqrt(1 - t^2)) on B^2
std::vector<CVec> gamma_lambda_approach(cplx lambda, const std::vector<double>& one_minus_t);

}  // namespace pluripot
