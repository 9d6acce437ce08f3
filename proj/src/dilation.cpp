#include "pluripot/dilation.hpp"

#include <cmath>

#include "pluripot/hyperbolic.hpp"
#include "pluripot/kernels.hpp"
#include "pluripot/ladder.hpp"

namespace pluripot {

CVec MapUnderTest::differential(const CVec& z, const CVec& v, double h) const {
  if (df) return df(z, v);
  return (f(z + h * v) - f(z - h * v)) / (2.0 * h);
}

MapUnderTest identity_map(const Domain& d) {
  MapUnderTest m{"identity", d, d, [](const CVec& z) { return z; }, [](const CVec&, const CVec& v) { return v; }, {}};
  if (d.dim() >= 1 && d.kind() != Kind::half_plane && d.kind() != Kind::annulus)
    m.contacts.push_back({unit(d.dim(), 0), unit(d.dim(), 0)});
  return m;
}

MapUnderTest coordinate_projection(int n) {
  if (n < 2) throw ConfigError("coordinate_projection needs n >= 2");
  MapUnderTest m;
  m.name = "coordinate_projection";
  m.source = make_domain(DomainSpec{"ball", n, {}, 0.0});
  m.target = make_domain(DomainSpec{"disc", 1, {}, 0.0});
  m.f = [](const CVec& z) { return vec({z(0)}); };
  m.df = [](const CVec&, const CVec& v) { return vec({v(0)}); };
  m.contacts.push_back({unit(n, 0), vec({1.0})});
  return m;
}

MapUnderTest egg_to_ball(const std::vector<int>& ms) {
  MapUnderTest m;
  m.name = "egg_to_ball";
  m.source = make_domain(DomainSpec{"ellipsoid", 0, ms, 0.0});
  const int n = m.source.dim();
  m.target = make_domain(DomainSpec{"ball", n, {}, 0.0});
  const auto e = m.source.exponents();
  m.f = [e, n](const CVec& z) {
    CVec w(n);
    w(0) = z(0);
    for (int j = 1; j < n; ++j) w(j) = std::pow(z(j), e[j] / 2);
    return w;
  };
  m.df = [e, n](const CVec& z, const CVec& v) {
    CVec w(n);
    w(0) = v(0);
    for (int j = 1; j < n; ++j) {
      const int k = e[j] / 2;
      w(j) = double(k) * std::pow(z(j), k - 1) * v(j);
    }
    return w;
  };
  m.contacts.push_back({unit(n, 0), unit(n, 0)});
  return m;
}

MapUnderTest map_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("map descriptor must be a JSON object");
  std::string name;
  int n = 2;
  std::vector<int> ms{4};
  std::optional<DomainSpec> dom;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    if (k == "map") {
      if (!it->is_string()) throw ConfigError("map must be a string");
      name = it->get<std::string>();
    } else if (k == "n") {
      if (!it->is_number_integer()) throw ConfigError("map.n must be an integer");
      n = it->get<int>();
    } else if (k == "m") {
      if (!it->is_array()) throw ConfigError("map.m must be an array");
      ms.clear();
      for (const auto& x : *it) {
        if (!x.is_number_integer()) throw ConfigError("map.m must contain integers");
        ms.push_back(x.get<int>());
      }
    } else if (k == "domain") {
      dom = domain_spec_from_json(*it);
    } else {
      throw ConfigError("unknown map field '" + k + "'");
    }
  }
  if (name == "identity") return identity_map(make_domain(dom ? *dom : DomainSpec{"ball", n, {}, 0.0}));
  if (name == "coordinate_projection") return coordinate_projection(n);
  if (name == "egg_to_ball") return egg_to_ball(ms);
  throw ConfigError("unknown map '" + name + "'");
}

DilationEstimate dilation(const MapUnderTest& m, const CVec& p, const CVec& pp, const std::vector<CVec>& approach) {
  DilationEstimate out;
  double width = 0.0;
  for (const CVec& z : approach) {
    const auto a = kobayashi_distance(m.source, z, p);
    const auto b = kobayashi_distance(m.target, m(z), pp);
    out.raw.push_back(a.value() - b.value());
    width = std::max(width, 0.5 * (a.width() + b.width()));
  }
  if (out.raw.size() < 3) throw NumericalError("dilation: approach too short");
  const auto& r = out.raw;
  const std::size_t n = r.size();
  if (r[n - 1] - r[n - 2] > 1.0 && r[n - 1] - r[n - 2] > r[n - 2] - r[n - 3])
    throw NumericalError("dilation diverges: not a regular contact point along this approach");
  for (std::size_t i = 2; i < n; ++i)
    if ((r[i] - r[i - 1]) * (r[i - 1] - r[i - 2]) < -1e-12) out.monotone = false;
  const auto lr = aitken(r);
  out.log_lambda = lr.value;
  out.lambda = std::exp(lr.value);
  out.ladder_min = *std::min_element(r.begin(), r.end());
  out.uncertainty = lr.uncertainty + width;
  return out;
}

double normalized_dilation(const MapUnderTest& m, const BoundaryPoint& xi, const BoundaryPoint& eta, const CVec& p,
                           const CVec& pp, const std::vector<CVec>& approach) {
  const auto d = dilation(m, p, pp, approach);
  return d.lambda * poisson_kernel(m.source, xi, p).value / poisson_kernel(m.target, eta, pp).value;
}

JuliaReport julia_checks(const MapUnderTest& m, const BoundaryPoint& xi, const BoundaryPoint& eta, const CVec& p,
                         const CVec& pp, double lambda, const std::vector<CVec>& samples, double tol) {
  JuliaReport r;
  r.mj.check = "julia_mj";
  r.pj.check = "julia_pj";
  r.consistency.check = "julia_mj_pj_consistency";
  r.mj.tolerance = r.pj.tolerance = r.consistency.tolerance = tol;
  const double op = poisson_kernel(m.source, xi, p).value;
  const double opp = poisson_kernel(m.target, eta, pp).value;
  const double alpha = lambda * op / opp;
  for (const CVec& z : samples) {
    const CVec fz = m(z);
    const auto h = horofunction(m.source, xi, p, z);
    const auto hp = horofunction(m.target, eta, pp, fz);
    const double gap = hp.value - h.value;
    const double unc = h.uncertainty + hp.uncertainty;
    const double ratio = poisson_kernel(m.source, xi, z).value / poisson_kernel(m.target, eta, fz).value;
    r.sup_mj = std::max(r.sup_mj, gap);
    r.sup_pj = std::max(r.sup_pj, ratio);
    const double e1 = gap - std::log(lambda);
    r.mj.add(std::max(0.0, e1 - unc), e1 <= tol + unc);
    const double e2 = ratio - alpha;
    r.pj.add(std::max(0.0, e2), e2 <= tol);
    const double lhs = std::exp(gap), rhs = ratio * opp / op;
    const double c = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    r.consistency.add(c, c <= tol + unc);
  }
  r.mj.finalize();
  r.pj.finalize();
  r.consistency.finalize();
  return r;
}

LadderLimit jwc_derivative_limit(const MapUnderTest& m, const BoundaryPoint& xi, const BoundaryPoint& eta,
                                 const std::vector<CVec>& approach) {
  LadderLimit out;
  for (const CVec& z : approach) {
    const double h = 1e-5 * delta(m.source, z);
    const CVec dfz = m.differential(z, xi.normal, h);
    out.raw.push_back(herm(dfz, eta.normal).real());
  }
  const auto lr = aitken(out.raw);
  out.value = lr.value;
  out.uncertainty = lr.uncertainty;
  return out;
}

LadderLimit delta_ratio_limit(const MapUnderTest& m, const std::vector<CVec>& approach) {
  LadderLimit out;
  for (const CVec& z : approach) out.raw.push_back(delta(m.target, m(z)) / delta(m.source, z));
  const auto lr = aitken(out.raw);
  out.value = lr.value;
  out.uncertainty = lr.uncertainty;
  return out;
}

VerificationReport omega_preserving_check(const MapUnderTest& m, const BoundaryPoint& xi, const BoundaryPoint& eta,
                                          double alpha, const std::vector<CVec>& samples,
                                          const std::vector<GeodesicDisc>& geodesics, double tol) {
  VerificationReport r;
  r.check = "omega_preserving";
  r.tolerance = tol;
  for (const CVec& z : samples) {
    const double o = poisson_kernel(m.source, xi, z).value;
    const double o2 = poisson_kernel(m.target, eta, m(z)).value;
    const double res = std::abs(alpha * o2 - o) / std::abs(o);
    r.add(res, res <= tol, "pointwise");
  }
  const std::vector<std::pair<cplx, cplx>> pairs{{0.0, 0.5}, {cplx(0.2, 0.3), cplx(-0.4, 0.1)}, {0.7, cplx(0.1, -0.6)}};
  for (const auto& g : geodesics) {
    for (const auto& [a, b] : pairs) {
      const auto k = kobayashi_distance(m.target, m(g(a)), m(g(b)));
      const double res = std::abs(k.value() - disc_distance(a, b)) / std::max(1.0, disc_distance(a, b));
      r.add(res, res <= tol + k.width(), "isometry " + g.label);
    }
  }
  r.finalize();
  return r;
}

std::vector<CVec> gamma_lambda_approach(cplx lambda, const std::vector<double>& one_minus_t) {
  std::vector<CVec> out;
  for (double s : one_minus_t) {
    const double t = 1.0 - s;
    out.push_back(vec({t, lambda * std::sqrt(s * (1.0 + t))}));
  }
  return out;
}

}  // namespace pluripot
