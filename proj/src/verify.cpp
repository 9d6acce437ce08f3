#include "pluripot/verify.hpp"

#include <cmath>
#include <limits>

#include "pluripot/fd.hpp"
#include "pluripot/kernels.hpp"
#include "pluripot/ladder.hpp"

namespace pluripot {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

void VerificationReport::add(double residual, bool ok, std::string info) {
  SampleDetail s;
  s.index = samples++;
  s.residual = residual;
  s.ok = ok;
  s.info = std::move(info);
  if (!std::isfinite(residual) || residual > max_residual) max_residual = residual;
  details.push_back(std::move(s));
}

void VerificationReport::finalize(bool any_inconclusive) {
  bool all_ok = std::isfinite(max_residual) && max_residual <= tolerance;
  for (const auto& s : details) all_ok = all_ok && s.ok;
  if (all_ok) verdict = Verdict::pass;
  else verdict = any_inconclusive ? Verdict::inconclusive : Verdict::fail;
}

nlohmann::json to_json(const VerificationReport& r, bool with_details) {
  nlohmann::json j;
  j["check"] = r.check;
  j["samples"] = r.samples;
  j["max_residual"] = std::isfinite(r.max_residual) ? nlohmann::json(r.max_residual) : nlohmann::json("inf");
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  if (with_details) {
    auto arr = nlohmann::json::array();
    for (const auto& s : r.details) {
      nlohmann::json d;
      d["index"] = s.index;
      d["residual"] = std::isfinite(s.residual) ? nlohmann::json(s.residual) : nlohmann::json("inf");
      d["ok"] = s.ok;
      if (!s.info.empty()) d["info"] = s.info;
      arr.push_back(d);
    }
    j["details"] = arr;
  }
  return j;
}

HessianSample complex_hessian(const Field& u, const CVec& z, double h, const Domain* d) {
  if (!(h > 0)) throw ConfigError("complex_hessian: step must be positive");
  if (d && !(delta(*d, z) > 2.0 * std::sqrt(2.0) * h)) throw NumericalError("complex_hessian: stencil exits the domain");
  const auto e = fd::complex_hessian(u, z, h);
  HessianSample s;
  s.z = z;
  s.h = h;
  s.H = e.H;
  s.richardson_gap = e.gap;
  return s;
}

MongeAmpere monge_ampere_of(const HessianSample& s) {
  const int n = static_cast<int>(s.H.rows());
  Eigen::SelfAdjointEigenSolver<CMat> es(s.H);
  MongeAmpere m;
  m.eigenvalues = es.eigenvalues();
  m.eigenvectors = es.eigenvectors();
  m.det = m.eigenvalues.prod();
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  m.scaled = std::pow(4.0, n) * fact * m.det;
  m.lambda_min = m.eigenvalues.minCoeff();
  m.lambda_max = m.eigenvalues.cwiseAbs().maxCoeff();
  const double noise = 100.0 * s.richardson_gap + 1e-300;
  m.relative = m.lambda_max > noise ? std::abs(m.det) / std::pow(m.lambda_max, n) : 0.0;
  return m;
}

MongeAmpere monge_ampere_residual(const Field& u, const CVec& z, double h, const Domain* d) {
  return monge_ampere_of(complex_hessian(u, z, h, d));
}

VerificationReport psh_check(const Field& u, const std::vector<CVec>& samples, double h_rel, double tol,
                             const Domain* d) {
  VerificationReport r;
  r.check = "psh";
  r.tolerance = tol;
  for (const CVec& z : samples) {
    const double h = d ? h_rel * delta(*d, z) : h_rel;
    const auto m = monge_ampere_residual(u, z, h, d);
    // eigenvalue floor measured relative to the largest eigenvalue
    const double scale = std::max(1.0, m.lambda_max);
    const double res = std::max(0.0, -m.lambda_min / scale);
    r.add(res, res <= tol);
  }
  r.finalize();
  return r;
}

Laplacian1D laplacian_1d(const PlaneField& u, cplx z, double h) {
  const cplx I(0.0, 1.0);
  auto L = [&](double s) {
    return (u(z + s) + u(z - s) + u(z + I * s) + u(z - I * s) - 4.0 * u(z)) / (s * s);
  };
  const double a = L(h), b = L(h / 2.0);
  return {(4.0 * b - a) / 3.0, std::abs(b - a)};
}

StencilNoise laplacian_noise_scan(const PlaneField& u, const std::vector<cplx>& points,
                                  const std::vector<double>& steps) {
  if (points.size() != steps.size()) throw ConfigError("laplacian_noise_scan: one step per point");
  const double eps = std::numeric_limits<double>::epsilon();
  StencilNoise out;
  std::vector<double> hs, mu;
  std::vector<double> lu;
  auto stencil_max = [](const PlaneField& f, cplx z, double h) {
    double m = 0.0;
    for (cplx s : {cplx(0), cplx(h), cplx(-h), cplx(0, h), cplx(0, -h)}) m = std::max(m, std::abs(f(z + s)));
    return m;
  };
  const PlaneField control = [](cplx w) { return std::exp(w.real()) * std::cos(w.imag()); };
  double fl = eps;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double h = std::exp2(std::floor(std::log2(steps[i])));
    const cplx z(std::round(points[i].real() / h) * h, std::round(points[i].imag() / h) * h);
    out.points.push_back(z);
    hs.push_back(h);
    fl = std::max(fl, std::abs(laplacian_1d(control, z, h).value) * h * h / stencil_max(control, z, h));
    mu.push_back(stencil_max(u, z, h));
    lu.push_back(std::abs(laplacian_1d(u, z, h).value));
  }
  out.floor = fl;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const double r = lu[i] * hs[i] * hs[i] / (std::max(mu[i], 1e-300) * fl);
    out.ratio.push_back(r);
    if (r > out.peak) {
      out.peak = r;
      out.peak_at = out.points[i];
    }
  }
  return out;
}

VerificationReport harmonic_along_geodesic(const Field& u, const GeodesicDisc& phi, const std::vector<cplx>& samples,
                                           double tol, double h_rel) {
  VerificationReport r;
  r.check = "harmonic_along_geodesic";
  r.tolerance = tol;
  auto f = [&](cplx z) { return u(phi(z)); };
  for (cplx z : samples) {
    const double dist = 1.0 - std::abs(z);
    if (!(dist > 0)) throw ConfigError("harmonic_along_geodesic: sample outside the disc");
    const double h = h_rel * dist;
    const auto lap = laplacian_1d(f, z, h);
    const double scale = std::abs(f(z)) / (dist * dist) + 1e-300;
    const double res = std::abs(lap.value) / scale;
    r.add(res, res <= tol);
  }
  r.finalize();
  return r;
}

PhragmenLindelof phragmen_lindelof_compare(const Field& u, const Domain& d, const BoundaryPoint& xi,
                                           const std::vector<GeodesicDisc>& curves, const std::vector<CVec>& samples,
                                           double tol) {
  PhragmenLindelof out;
  out.membership.check = "phragmen_lindelof_membership";
  out.membership.tolerance = tol;
  for (const auto& g : curves) {
    if ((g.endpoint - xi.xi).norm() > 1e-12) throw ConfigError("phragmen_lindelof: curve does not end at xi");
    std::vector<double> est;
    for (int k = 2; k <= 7; ++k) {
      const double s = std::pow(10.0, -k);
      est.push_back(u(g(1.0 - s)) * s);
    }
    const auto lr = aitken(est);
    const double bound = -2.0 / g.normal_derivative;
    const double excess = lr.value - bound;  // must be <= 0
    out.membership.add(std::max(0.0, excess), excess <= tol, g.label);
  }
  out.membership.finalize();
  out.domination.check = "phragmen_lindelof_domination";
  out.domination.tolerance = tol;
  for (const CVec& z : samples) {
    const double om = poisson_kernel(d, xi, z).value;
    const double excess = u(z) - om;
    out.domination.add(std::max(0.0, excess), excess <= tol);
  }
  out.domination.finalize();
  out.consistent = !(out.membership.passed() && !out.domination.passed());
  return out;
}

}  // namespace pluripot
