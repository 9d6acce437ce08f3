#include "pluripot/domain.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "pluripot/fd.hpp"

namespace pluripot {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::disc: return "disc";
    case Kind::half_plane: return "half_plane";
    case Kind::ball: return "ball";
    case Kind::ellipsoid: return "ellipsoid";
    case Kind::annulus: return "annulus";
    case Kind::general_convex: return "general_convex";
  }
  return "?";
}

std::string Domain::name() const {
  switch (kind_) {
    case Kind::disc: return "disc";
    case Kind::half_plane: return "half_plane";
    case Kind::ball: return "ball" + std::to_string(n_);
    case Kind::ellipsoid: {
      if (n_ == 2) return "egg" + std::to_string(exps_[1]);
      std::string s = "ellipsoid(";
      for (std::size_t j = 1; j < exps_.size(); ++j) s += (j > 1 ? "," : "") + std::to_string(exps_[j]);
      return s + ")";
    }
    case Kind::annulus: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "annulus(%g)", r_);
      return buf;
    }
    case Kind::general_convex: return "general_convex" + std::to_string(n_);
  }
  return "?";
}

bool Domain::contains(const CVec& z) const {
  if (z.size() != n_) return false;
  for (Eigen::Index j = 0; j < z.size(); ++j)
    if (!std::isfinite(z(j).real()) || !std::isfinite(z(j).imag())) return false;
  return rho_(z) < 0.0;
}

namespace {

double ellipsoid_rho(const std::vector<int>& e, const CVec& z) {
  double s = std::norm(z(0)) - 1.0;
  for (std::size_t j = 1; j < e.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    s += e[j] == 2 ? std::norm(z(jj)) : std::pow(std::abs(z(jj)), e[j]);
  }
  return s;
}

CVec ellipsoid_grad(const std::vector<int>& e, const CVec& z) {
  CVec g(z.size());
  g(0) = 2.0 * z(0);
  for (std::size_t j = 1; j < e.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const double a = std::abs(z(jj));
    g(jj) = e[j] == 2 ? 2.0 * z(jj) : double(e[j]) * std::pow(a, e[j] - 2) * z(jj);
  }
  return g;
}

std::string normalize_kind(const std::string& k) {
  if (k == "disc") return "disc";
  if (k == "half_plane" || k == "halfplane") return "half_plane";
  if (k == "ball" || k == "ball_n") return "ball";
  if (k == "ellipsoid" || k == "ellipsoid_m" || k == "egg") return "ellipsoid";
  if (k == "annulus" || k == "annulus_r") return "annulus";
  if (k == "general_convex") return "general_convex";
  throw ConfigError("unknown domain kind '" + k + "'");
}

}  // namespace

Domain make_domain(const DomainSpec& spec) {
  const std::string kind = normalize_kind(spec.kind);
  Domain d;
  if (spec.n < 0) throw ConfigError("dimension must be >= 1");
  if (kind == "ball" && spec.n == 1) return make_domain(DomainSpec{"disc", 1, {}, 0.0});

  if (kind == "disc" || kind == "half_plane") {
    if (spec.n > 1) throw ConfigError(kind + " is one-dimensional");
    d.n_ = 1;
    d.caps_ = {true, true, true};
    if (kind == "disc") {
      d.kind_ = Kind::disc;
      d.exps_ = {2};
      d.rho_ = [](const CVec& z) { return std::norm(z(0)) - 1.0; };
      d.grad_ = [](const CVec& z) { return CVec(2.0 * z); };
    } else {
      d.kind_ = Kind::half_plane;
      d.rho_ = [](const CVec& z) { return z(0).real(); };
      d.grad_ = [](const CVec&) { return vec({1.0}); };
    }
    return d;
  }
  if (kind == "ball") {
    if (spec.n < 1) throw ConfigError("ball needs n >= 1");
    d.kind_ = Kind::ball;
    d.n_ = spec.n;
    d.exps_.assign(spec.n, 2);
    d.caps_ = {true, true, true};
    d.rho_ = [](const CVec& z) { return z.squaredNorm() - 1.0; };
    d.grad_ = [](const CVec& z) { return CVec(2.0 * z); };
    return d;
  }
  if (kind == "ellipsoid") {
    if (spec.m.empty()) throw ConfigError("ellipsoid needs a non-empty exponent list m");
    for (int m : spec.m)
      if (m < 2 || m % 2 != 0)
        throw ConfigError("ellipsoid exponents must be even integers >= 2 (got " + std::to_string(m) + ")");
    const int n = static_cast<int>(spec.m.size()) + 1;
    if (spec.n != 0 && spec.n != n) throw ConfigError("ellipsoid: n must equal len(m)+1");
    d.kind_ = Kind::ellipsoid;
    d.n_ = n;
    d.exps_.push_back(2);
    d.exps_.insert(d.exps_.end(), spec.m.begin(), spec.m.end());
    d.caps_ = {true, true, false};
    auto e = d.exps_;
    d.rho_ = [e](const CVec& z) { return ellipsoid_rho(e, z); };
    d.grad_ = [e](const CVec& z) { return ellipsoid_grad(e, z); };
    return d;
  }
  if (kind == "annulus") {
    if (spec.n > 1) throw ConfigError("annulus is one-dimensional");
    if (!(spec.r > 0.0 && spec.r < 1.0)) throw ConfigError("annulus radius must lie in (0,1)");
    d.kind_ = Kind::annulus;
    d.n_ = 1;
    d.r_ = spec.r;
    d.caps_ = {true, false, false};
    const double r = spec.r;
    d.rho_ = [r](const CVec& z) {
      const double a = std::abs(z(0));
      return std::max(r - a, a - 1.0);
    };
    d.grad_ = [r](const CVec& z) {
      const double a = std::abs(z(0));
      const cplx u = a > 0 ? z(0) / a : cplx(1.0);
      return (a - 1.0 >= r - a) ? vec({u}) : vec({-u});
    };
    return d;
  }
  throw ConfigError("general_convex domains need a defining-function callback; use make_general_convex");
}

Domain make_general_convex(int n, RealField rho, GradField grad, std::vector<CVec> refs) {
  if (n < 1) throw ConfigError("dimension must be >= 1");
  if (!rho) throw ConfigError("general_convex needs a defining function");
  if (refs.empty()) throw ConfigError("general_convex needs at least one interior reference point");
  for (const auto& p : refs)
    if (p.size() != n || !(rho(p) < 0.0)) throw ConfigError("general_convex reference point is not interior");
  Domain d;
  d.kind_ = Kind::general_convex;
  d.n_ = n;
  d.caps_ = {false, false, false};
  d.rho_ = rho;
  if (grad) {
    d.grad_ = std::move(grad);
  } else {
    d.grad_ = [rho](const CVec& z) { return fd::real_gradient(rho, z, 1e-6); };
  }
  d.refs_ = std::move(refs);
  // midpoint convexity spot-check over the reference points
  for (std::size_t a = 0; a < d.refs_.size(); ++a)
    for (std::size_t b = a + 1; b < d.refs_.size(); ++b)
      if (!(rho((d.refs_[a] + d.refs_[b]) / 2.0) < 0.0))
        throw ConfigError("general_convex: midpoint of reference points is not interior");
  return d;
}

DomainSpec domain_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("domain descriptor must be a JSON object");
  DomainSpec s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const auto& v = it.value();
    if (k == "kind") {
      if (!v.is_string()) throw ConfigError("domain.kind must be a string");
      s.kind = v.get<std::string>();
    } else if (k == "n") {
      if (!v.is_number_integer()) throw ConfigError("domain.n must be an integer");
      s.n = v.get<int>();
      if (s.n < 1) throw ConfigError("dimension must be >= 1");
    } else if (k == "m") {
      if (!v.is_array()) throw ConfigError("domain.m must be an array of integers");
      for (const auto& x : v) {
        if (!x.is_number_integer()) throw ConfigError("domain.m must be an array of integers");
        s.m.push_back(x.get<int>());
      }
    } else if (k == "r") {
      if (!v.is_number()) throw ConfigError("domain.r must be a number");
      s.r = v.get<double>();
    } else {
      throw ConfigError("unknown domain field '" + k + "'");
    }
  }
  if (s.kind.empty()) throw ConfigError("domain.kind is required");
  return s;
}

nlohmann::json domain_spec_to_json(const DomainSpec& s) {
  nlohmann::json j;
  j["kind"] = s.kind;
  if (s.n) j["n"] = s.n;
  if (!s.m.empty()) j["m"] = s.m;
  if (s.r > 0) j["r"] = s.r;
  return j;
}

DomainSpec parse_domain_shorthand(const std::string& s) {
  auto num_suffix = [&](const std::string& prefix) -> int {
    const std::string rest = s.substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      throw ConfigError("bad domain shorthand '" + s + "'");
    return std::stoi(rest);
  };
  if (s == "disc") return {"disc", 1, {}, 0.0};
  if (s == "halfplane" || s == "half_plane") return {"half_plane", 1, {}, 0.0};
  if (s == "annulus") return {"annulus", 1, {}, 0.0};
  if (s == "ellipsoid") return {"ellipsoid", 0, {}, 0.0};
  if (s.rfind("ball", 0) == 0) return {"ball", num_suffix("ball"), {}, 0.0};
  if (s.rfind("egg", 0) == 0) return {"ellipsoid", 2, {num_suffix("egg")}, 0.0};
  throw ConfigError("unknown domain '" + s + "'");
}

BoundaryPoint make_boundary_point(const Domain& d, const CVec& xi) {
  if (xi.size() != d.dim()) throw ConfigError("boundary point has wrong dimension");
  const double r = d.defining_function(xi);
  if (std::abs(r) > 1e-9) throw ConfigError("point is not on the boundary (rho = " + std::to_string(r) + ")");
  BoundaryPoint b;
  b.xi = xi;
  const CVec g = d.gradient(xi);
  const double gn = g.norm();
  if (!(gn > 0)) throw NumericalError("vanishing gradient at boundary point");
  b.normal = g / gn;
  const int n = d.dim();
  // Gram-Schmidt over coordinate vectors, least aligned with the normal first.
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int c) { return std::abs(b.normal(a)) < std::abs(b.normal(c)); });
  std::vector<CVec> basis{b.normal};
  for (int j : order) {
    if (static_cast<int>(basis.size()) == n) break;
    CVec v = unit(n, j);
    for (const auto& q : basis) v -= herm(v, q) * q;
    const double vn = v.norm();
    if (vn < 1e-8) continue;
    v /= vn;
    for (const auto& q : basis) v -= herm(v, q) * q;  // second pass
    v /= v.norm();
    basis.push_back(v);
    b.tangent.push_back(v);
  }
  return b;
}

CVec ray_to_boundary(const Domain& d, const CVec& from, const CVec& dir) {
  const double dn = dir.norm();
  if (!(dn > 0)) throw NumericalError("ray direction is zero");
  const CVec u = dir / dn;
  auto f = [&](double t) { return d.defining_function(from + t * u); };
  if (!(f(0.0) < 0.0)) throw NumericalError("ray origin is not interior");
  double lo = 0.0, hi = 1e-3;
  while (f(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e8) throw NumericalError("ray does not leave the domain");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-17 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return from + (0.5 * (lo + hi)) * u;
}

namespace {

// Polish a modulus-space candidate by Newton on the KKT system
//   s_j - r_j = lam p_j s_j^{p_j-1},  sum s_j^{p_j} = 1.
std::optional<std::vector<double>> kkt_polish(const std::vector<double>& r, const std::vector<int>& e,
                                              std::vector<double> s) {
  const int n = static_cast<int>(r.size());
  double num = 0.0, den = 0.0;
  for (int j = 0; j < n; ++j) {
    const double g = e[j] * std::pow(s[j], e[j] - 1);
    num += (s[j] - r[j]) * g;
    den += g * g;
  }
  double lam = den > 0 ? num / den : 0.0;
  Eigen::MatrixXd J(n + 1, n + 1);
  Eigen::VectorXd F(n + 1);
  for (int it = 0; it < 60; ++it) {
    J.setZero();
    F(n) = -1.0;
    for (int j = 0; j < n; ++j) {
      const int p = e[j];
      const double sp1 = std::pow(s[j], p - 1);
      F(j) = s[j] - r[j] - lam * p * sp1;
      F(n) += sp1 * s[j];
      J(j, j) = 1.0 - lam * p * (p - 1) * std::pow(s[j], p - 2);
      J(j, n) = -p * sp1;
      J(n, j) = p * sp1;
    }
    const Eigen::VectorXd dx = J.fullPivLu().solve(-F);
    if (!dx.allFinite()) return std::nullopt;
    double step = 0.0;
    for (int j = 0; j < n; ++j) {
      s[j] = std::abs(s[j] + dx(j));
      step = std::max(step, std::abs(dx(j)));
    }
    lam += dx(n);
    if (step < 1e-16) break;
  }
  double c = -1.0;
  for (int j = 0; j < n; ++j) c += std::pow(s[j], e[j]);
  if (!(std::abs(c) < 1e-12) || !(lam >= -1e-12)) return std::nullopt;
  return s;
}

// Nearest boundary point through the moduli (|z_j|): coarse scan of the
// surface s_j = w_j^{2/p_j}, w on the positive unit sphere, then Newton.
std::optional<Projection> project_ellipsoid(const Domain& d, const CVec& z) {
  const auto& e = d.exponents();
  const int n = d.dim();
  if (n > 5) return std::nullopt;
  std::vector<double> r(n);
  for (int j = 0; j < n; ++j) r[j] = std::abs(z(j));
  const int per = n == 2 ? 4096 : n == 3 ? 96 : n == 4 ? 24 : 12;
  long total = 1;
  for (int k = 0; k < n - 1; ++k) total *= per;
  auto surface = [&](const std::vector<double>& ang) {
    std::vector<double> s(n);
    double sinprod = 1.0;
    for (int j = 0; j < n; ++j) {
      const double w = j < n - 1 ? sinprod * std::cos(ang[j]) : sinprod;
      if (j < n - 1) sinprod *= std::sin(ang[j]);
      s[j] = std::pow(std::max(0.0, w), 2.0 / e[j]);
    }
    return s;
  };
  auto dist2 = [&](const std::vector<double>& s) {
    double f = 0.0;
    for (int j = 0; j < n; ++j) f += (s[j] - r[j]) * (s[j] - r[j]);
    return f;
  };
  std::vector<std::pair<double, std::vector<double>>> best;
  std::vector<double> ang(n - 1);
  for (long idx = 0; idx < total; ++idx) {
    long q = idx;
    for (int k = 0; k < n - 1; ++k) {
      ang[k] = 0.5 * kPi * (q % per) / (per - 1);
      q /= per;
    }
    auto s = surface(ang);
    const double f = dist2(s);
    if (best.size() < 5 || f < best.back().first) {
      best.emplace_back(f, std::move(s));
      std::sort(best.begin(), best.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (best.size() > 5) best.pop_back();
    }
  }
  std::optional<std::vector<double>> sol;
  double fsol = best.front().first * (1.0 + 1e-9) + 1e-300;
  for (const auto& [f0, s0] : best) {
    if (auto s = kkt_polish(r, e, s0)) {
      const double f = dist2(*s);
      if (f <= fsol) {
        fsol = f;
        sol = s;
      }
    }
  }
  if (!sol) return std::nullopt;
  CVec xi(n);
  for (int j = 0; j < n; ++j) {
    const cplx ph = r[j] > 0 ? z(j) / r[j] : cplx(1.0);
    xi(j) = (*sol)[j] * ph;
  }
  // one Newton step along the gradient to land on rho = 0
  const CVec g = d.gradient(xi);
  xi -= (d.defining_function(xi) / g.squaredNorm()) * g;
  Projection p;
  p.point = make_boundary_point(d, xi);
  p.delta = (z - xi).norm();
  return p;
}

Projection project_general(const Domain& d, const CVec& z) {
  CVec u = d.gradient(z);
  if (u.norm() < 1e-14) u = unit(d.dim(), 0);
  u /= u.norm();
  CVec xi = ray_to_boundary(d, z, u);
  double t = (xi - z).norm();
  for (int it = 0; it < 2000; ++it) {
    CVec nrm = d.gradient(xi);
    nrm /= nrm.norm();
    CVec cand_dir = 0.5 * (u + nrm);
    if (cand_dir.norm() < 1e-12) cand_dir = nrm;
    cand_dir /= cand_dir.norm();
    const CVec cand = ray_to_boundary(d, z, cand_dir);
    const double tc = (cand - z).norm();
    const double change = (cand_dir - u).norm();
    u = cand_dir;
    xi = cand;
    t = tc;
    if (change < 1e-13) {
      Projection p;
      p.point = make_boundary_point(d, xi);
      p.delta = t;
      return p;
    }
  }
  throw NumericalError("boundary projection did not converge");
}

}  // namespace

Projection boundary_project(const Domain& d, const CVec& z) {
  if (!d.contains(z)) throw ConfigError("boundary_project: point is not interior");
  Projection p;
  switch (d.kind()) {
    case Kind::disc:
    case Kind::ball: {
      const double a = z.norm();
      const CVec xi = a > 0 ? CVec(z / a) : unit(d.dim(), 0);
      p.point = make_boundary_point(d, xi);
      p.delta = 1.0 - a;
      return p;
    }
    case Kind::half_plane:
      p.point = make_boundary_point(d, vec({cplx(0.0, z(0).imag())}));
      p.delta = -z(0).real();
      return p;
    case Kind::annulus: {
      const double a = std::abs(z(0)), r = d.inner_radius();
      const cplx u = z(0) / a;
      if (1.0 - a <= a - r) {
        p.point = make_boundary_point(d, vec({u}));
        p.delta = 1.0 - a;
      } else {
        p.point = make_boundary_point(d, vec({r * u}));
        p.delta = a - r;
      }
      return p;
    }
    case Kind::ellipsoid: {
      if (z.norm() == 0.0) {
        p.point = make_boundary_point(d, unit(d.dim(), 0));
        p.delta = 1.0;
        return p;
      }
      if (auto q = project_ellipsoid(d, z)) return *q;
      return project_general(d, z);
    }
    case Kind::general_convex: return project_general(d, z);
  }
  throw NumericalError("unsupported domain");
}

double delta(const Domain& d, const CVec& z) { return boundary_project(d, z).delta; }

namespace {

std::vector<CVec> tangent_directions(const BoundaryPoint& b, int count) {
  const int k = static_cast<int>(b.tangent.size());
  std::vector<CVec> dirs(b.tangent.begin(), b.tangent.end());
  if (k == 1) return dirs;  // phases are covered by the theta grid
  std::mt19937_64 rng(0x5eed1234ULL);
  std::normal_distribution<double> g;
  while (static_cast<int>(dirs.size()) < count) {
    CVec v = CVec::Zero(b.xi.size());
    for (int a = 0; a < k; ++a) v += cplx(g(rng), g(rng)) * b.tangent[a];
    dirs.push_back(v / v.norm());
  }
  return dirs;
}

}  // namespace

LineTypeResult line_type(const Domain& d, const BoundaryPoint& b, int max_degree) {
  if (max_degree < 2 || max_degree % 2 != 0) throw ConfigError("max_degree must be even and >= 2");
  if (b.tangent.empty()) throw ConfigError("line type needs a complex tangent direction (n >= 2)");
  const int ntheta = 64;
  std::vector<double> eps;
  for (int k = 0; k <= 6; ++k) eps.push_back(std::pow(10.0, -1.0 - 0.5 * k));
  const double r0 = d.defining_function(b.xi);
  const double noise = 1e3 * std::numeric_limits<double>::epsilon();

  LineTypeResult best;
  best.type = 0;
  bool first = true;
  for (const CVec& v : tangent_directions(b, 128)) {
    std::vector<double> lx, ly;
    for (double e : eps) {
      double amp = 0.0;
      for (int t = 0; t < ntheta; ++t) {
        const cplx ph = std::polar(e, 2.0 * kPi * t / ntheta);
        amp = std::max(amp, std::abs(d.defining_function(b.xi + ph * v) - r0));
      }
      if (amp > noise) {
        lx.push_back(std::log(e));
        ly.push_back(std::log(amp));
      }
    }
    LineTypeResult cur;
    if (lx.size() < 2) {
      cur.type = max_degree;
      cur.saturated = true;
      cur.slope = std::numeric_limits<double>::infinity();
    } else {
      const double nn = static_cast<double>(lx.size());
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i] / nn, my += ly[i] / nn;
      double sxy = 0, sxx = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
      }
      cur.slope = sxy / sxx;
      double smin = 1e300, smax = -1e300;
      for (std::size_t i = 0; i + 1 < lx.size(); ++i) {
        const double s = (ly[i + 1] - ly[i]) / (lx[i + 1] - lx[i]);
        smin = std::min(smin, s);
        smax = std::max(smax, s);
      }
      cur.unstable = smax - smin > 0.25;
      const int even = 2 * static_cast<int>(std::floor(cur.slope / 2.0 + 0.5));
      cur.type = std::max(2, even);
      if (cur.type >= max_degree) {
        cur.type = max_degree;
        cur.saturated = true;
      }
    }
    if (first || cur.type > best.type || (cur.type == best.type && cur.slope > best.slope)) {
      const bool unstable_any = best.unstable || cur.unstable;
      best = cur;
      best.unstable = unstable_any;
      first = false;
    } else {
      best.unstable = best.unstable || cur.unstable;
    }
  }
  return best;
}

LeviData levi_data(const Domain& d, const BoundaryPoint& b, double h, double rho_scale) {
  LeviData out;
  const int n = d.dim();
  out.grad_norm = rho_scale * d.gradient(b.xi).norm();
  const int k = static_cast<int>(b.tangent.size());
  out.L = CMat::Zero(k, k);
  if (k == 0) return out;
  auto rho = [&](const CVec& z) { return rho_scale * d.defining_function(z); };
  const auto est = fd::complex_hessian(rho, b.xi, h);
  const auto coarse = fd::complex_hessian(rho, b.xi, 2.0 * h);
  CMat T(n, k);
  for (int a = 0; a < k; ++a) T.col(a) = b.tangent[a];
  out.L = T.transpose() * est.H * T.conjugate();
  const CMat Lc = T.transpose() * coarse.H * T.conjugate();
  const double scale = std::max(1.0, out.L.cwiseAbs().maxCoeff());
  out.richardson_gap = (out.L - Lc).cwiseAbs().maxCoeff() / scale;
  if (out.richardson_gap > 1e-4) throw NumericalError("levi_data: step too small or too large (Richardson disagreement)");
  return out;
}

}  // namespace pluripot
