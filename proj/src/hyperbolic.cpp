#include "pluripot/hyperbolic.hpp"

#include <cmath>

namespace pluripot {

double hyperbolic_from_t(double t, double one_minus_t2) {
  if (t < 0.5) return 2.0 * std::atanh(t);
  return std::log((1.0 + t) * (1.0 + t) / one_minus_t2);
}

double disc_distance(cplx a, cplx b) {
  const double na = std::norm(a), nb = std::norm(b);
  if (!(na < 1.0) || !(nb < 1.0)) throw ConfigError("disc_distance: points must lie in the unit disc");
  const cplx den = 1.0 - std::conj(a) * b;
  const double t = std::abs(a - b) / std::abs(den);
  const double omt2 = (1.0 - na) * (1.0 - nb) / std::norm(den);
  return hyperbolic_from_t(t, omt2);
}

double halfplane_distance(cplx a, cplx b) {
  if (!(a.real() < 0.0) || !(b.real() < 0.0)) throw ConfigError("halfplane_distance: points must have Re < 0");
  const cplx den = a + std::conj(b);
  const double t = std::abs(a - b) / std::abs(den);
  const double omt2 = 4.0 * a.real() * b.real() / std::norm(den);
  return hyperbolic_from_t(t, omt2);
}

cplx cayley(cplx z) {
  if (z == cplx(-1.0)) throw ConfigError("cayley: -1 is excluded");
  return (z - 1.0) / (z + 1.0);
}

cplx cayley_inverse(cplx w) {
  if (w == cplx(1.0)) throw ConfigError("cayley_inverse: 1 is excluded");
  return (1.0 + w) / (1.0 - w);
}

cplx cayley_inverse_derivative(cplx w) { return 2.0 / ((1.0 - w) * (1.0 - w)); }

double poisson_disc(cplx z, cplx xi) {
  if (!(std::norm(z) < 1.0)) throw ConfigError("poisson_disc: point must be interior");
  return -(1.0 - std::norm(z)) / std::norm(xi - z);
}

double poisson_halfplane(cplx z) {
  if (!(z.real() < 0.0)) throw ConfigError("poisson_halfplane: point must have Re < 0");
  return 2.0 * (1.0 / z).real();
}

Strip::Strip(double r) : width(-std::log(r)) {
  if (!(r > 0.0 && r < 1.0)) throw ConfigError("strip: r must lie in (0,1)");
}

cplx Strip::to_halfplane(cplx w) const {
  const cplx I(0.0, 1.0);
  return I * std::exp(-I * kPi * w / width);
}

double Strip::distance(cplx a, cplx b) const {
  return halfplane_distance(to_halfplane(a), to_halfplane(b));
}

double Strip::horofunction0(cplx q, cplx w) const {
  // Poisson kernel of H at the boundary point i is proportional to
  // Re(v) / |v - i|^2.
  const cplx I(0.0, 1.0);
  auto omega = [&](cplx x) {
    const cplx v = to_halfplane(x);
    return std::abs(v.real()) / std::norm(v - I);
  };
  return std::log(omega(q)) - std::log(omega(w));
}

double annulus_distance(double r, cplx z, cplx w) {
  const double az = std::abs(z), aw = std::abs(w);
  if (!(az > r && az < 1.0 && aw > r && aw < 1.0)) throw ConfigError("annulus_distance: points must lie in the annulus");
  const Strip s(r);
  const cplx lz = std::log(z), lw = std::log(w);
  const double dy = lz.imag() - lw.imag();
  const long k0 = std::lround(dy / (2.0 * kPi));
  const cplx I(0.0, 1.0);
  auto lift = [&](long k) { return s.distance(lz, lw + 2.0 * kPi * double(k) * I); };
  // k_S(a, b) >= (pi/width) |Im a - Im b| bounds every omitted translate.
  auto lower = [&](long k) { return kPi / s.width * std::abs(dy - 2.0 * kPi * double(k)); };
  double best = lift(k0);
  for (long step = 1;; ++step) {
    const bool up = lower(k0 + step) < best, dn = lower(k0 - step) < best;
    if (!up && !dn) break;
    if (up) best = std::min(best, lift(k0 + step));
    if (dn) best = std::min(best, lift(k0 - step));
  }
  return best;
}

double annulus_horofunction_covering(double r, cplx xi, cplx p, cplx z) {
  if (std::abs(std::abs(xi) - 1.0) > 1e-12) throw ConfigError("annulus horofunction: xi must lie on the outer circle");
  const Strip s(r);
  const cplx rot = std::conj(xi) / std::abs(xi);
  const cplx I(0.0, 1.0);
  const cplx lz = std::log(z * rot), lp = std::log(p * rot);
  // The base point enters only through its own best lift.
  auto minlift = [&](cplx base, cplx x) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = -4; k <= 4; ++k) best = std::min(best, s.horofunction0(base, x + 2.0 * kPi * double(k) * I));
    return best;
  };
  // h(z) = min_k h^S(z_k) - min_k h^S(p_k) with a common base.
  const cplx q(-s.width / 2.0, 0.0);
  return minlift(q, lz) - minlift(q, lp);
}

AnnulusHorofunction annulus_horofunction(double r, cplx xi, cplx p, cplx z, int cutoff) {
  if (std::abs(std::abs(xi) - 1.0) > 1e-12) throw ConfigError("annulus horofunction: xi must lie on the outer circle");
  AnnulusHorofunction out;
  for (int j = 2; j <= cutoff; ++j) {
    const cplx w = (1.0 - std::pow(10.0, -j)) * xi;
    out.raw.push_back(annulus_distance(r, z, w) - annulus_distance(r, w, p));
  }
  const auto lr = aitken(out.raw);
  out.value = lr.value;
  out.uncertainty = lr.uncertainty;
  out.covering = annulus_horofunction_covering(r, xi, p, z);
  if (out.raw.size() >= 2 && std::abs(out.raw.back() - out.raw[out.raw.size() - 2]) > 1e-6)
    throw NumericalError("annulus horofunction ladder did not converge");
  return out;
}

std::vector<cplx> AngularApproach::points() const {
  std::vector<cplx> out;
  const cplx dir = std::polar(1.0, angle);
  for (double tk : t) out.push_back(xi * (1.0 - (1.0 - tk) * dir));
  return out;
}

AngularApproach make_angular_approach(cplx xi, double M, int kmax, double angle) {
  if (!(M > 1.0)) throw ConfigError("angular approach: M must exceed 1");
  if (std::abs(std::abs(xi) - 1.0) > 1e-12) throw ConfigError("angular approach: xi must be unimodular");
  if (!(std::abs(angle) < kPi / 2) || 1.0 / std::cos(angle) >= M)
    throw ConfigError("angular approach: direction leaves the Stolz region");
  AngularApproach a;
  a.xi = xi;
  a.M = M;
  a.angle = angle;
  for (int k = 1; k <= kmax; ++k) a.t.push_back(1.0 - std::ldexp(1.0, -k));
  // Stolz condition, checked rather than assumed
  for (const cplx z : a.points())
    if (!(std::abs(z) < 1.0) || std::abs(xi - z) / (1.0 - std::abs(z)) > M)
      throw ConfigError("angular approach: ladder leaves the Stolz region");
  return a;
}

namespace {

cplx aitken_c(const std::vector<cplx>& xs, double& unc) {
  std::vector<double> re, im;
  for (auto x : xs) re.push_back(x.real()), im.push_back(x.imag());
  const auto a = aitken(re), b = aitken(im);
  unc = std::hypot(a.uncertainty, b.uncertainty);
  return {a.value, b.value};
}

}  // namespace

AngularDerivative angular_derivative(const std::function<cplx(cplx)>& f, const AngularApproach& ap) {
  const auto pts = ap.points();
  std::vector<cplx> fv;
  for (auto z : pts) fv.push_back(f(z));
  double unc_eta = 0.0;
  cplx eta = aitken_c(fv, unc_eta);
  if (std::abs(eta) > 0) eta /= std::abs(eta);  // regular contact: |f(xi)| = 1
  std::vector<cplx> q;
  std::vector<double> jq;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    q.push_back((eta - fv[k]) / (ap.xi - pts[k]));
    jq.push_back((1.0 - std::abs(fv[k])) / (1.0 - std::abs(pts[k])));
  }
  AngularDerivative out;
  out.value = aitken_c(q, out.uncertainty);
  out.modulus_from_julia = aitken(jq).value;
  // the ladder must be Cauchy
  const std::size_t n = q.size();
  if (n >= 3 && std::abs(q[n - 1] - q[n - 2]) > std::abs(q[n - 2] - q[n - 3]) + 1e-6)
    throw NumericalError("angular derivative ladder diverges");
  // for a radial approach (1-|f|)/(1-|z|) tends to |f'(xi)|
  out.disagreement = std::abs(std::abs(out.value) - out.modulus_from_julia) > 1e-4;
  return out;
}

}  // namespace pluripot
