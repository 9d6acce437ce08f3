#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "pluripot/common.hpp"
#include "pluripot/domain.hpp"

namespace testsupport {

using pluripot::cplx;
using pluripot::CVec;

// Fixed-seed generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

  // Uniform in the disc of radius rmax.
  cplx in_disc(double rmax = 1.0) {
    const double r = rmax * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * M_PI));
  }

  CVec on_sphere(int n) {
    CVec v(n);
    for (int j = 0; j < n; ++j) v(j) = cplx(normal(), normal());
    return v / v.norm();
  }

  // Rejection sampling inside d with rho(z) < -margin.
  CVec in_domain(const pluripot::Domain& d, double margin = 1e-2) {
    const int n = d.dim();
    for (;;) {
      CVec z(n);
      for (int j = 0; j < n; ++j) z(j) = cplx(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      if (d.defining_function(z) < -margin) return z;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline pluripot::Domain ball(int n) { return pluripot::make_domain(pluripot::DomainSpec{"ball", n, {}, 0.0}); }
inline pluripot::Domain egg(int m) { return pluripot::make_domain(pluripot::DomainSpec{"ellipsoid", 0, {m}, 0.0}); }
inline pluripot::Domain disc() { return pluripot::make_domain(pluripot::DomainSpec{"disc", 1, {}, 0.0}); }

// Independent oracles.
inline double ball_poisson_oracle(const CVec& z, const CVec& xi) {
  const cplx ip = (z.array() * xi.conjugate().array()).sum();
  return -(1.0 - z.squaredNorm()) / std::norm(1.0 - ip);
}

inline double egg_poisson_oracle(int m, const CVec& z) {
  const double rho = std::norm(z(0)) + std::pow(std::abs(z(1)), m) - 1.0;
  return rho / std::norm(1.0 - z(0));
}

inline double disc_distance_oracle(cplx a, cplx b) {
  const double t = std::abs((a - b) / (1.0 - std::conj(a) * b));
  return std::log((1.0 + t) / (1.0 - t));
}

}  // namespace testsupport
