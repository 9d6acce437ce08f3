#pragma once

#include <functional>

#include "pluripot/common.hpp"

namespace pluripot::fd {

using Field = std::function<double(const CVec&)>;

// Q(v) = (D^2_v u + D^2_{iv} u) / 4, the Levi form of u at z on v.
inline double levi_quadratic(const Field& u, const CVec& z, const CVec& v, double h, double u0) {
  const cplx I(0.0, 1.0);
  const CVec a = h * v, b = (h * I) * v;
  const double dv = u(z + a) - 2.0 * u0 + u(z - a);
  const double div = u(z + b) - 2.0 * u0 + u(z - b);
  return (dv + div) / (4.0 * h * h);
}

// d^2u / dz_j dzbar_k by polarization of the quadratic form.
inline CMat complex_hessian_raw(const Field& u, const CVec& z, double h) {
  const int n = static_cast<int>(z.size());
  const double u0 = u(z);
  const cplx I(0.0, 1.0);
  const cplx powers[4] = {1.0, I, -1.0, -I};
  CMat H = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j) H(j, j) = levi_quadratic(u, z, unit(n, j), h, u0);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      cplx s = 0.0;
      for (int l = 0; l < 4; ++l) {
        const CVec v = unit(n, j) + powers[l] * unit(n, k);
        s += powers[l] * levi_quadratic(u, z, v, h, u0);
      }
      H(j, k) = s / 4.0;
      H(k, j) = std::conj(H(j, k));
    }
  }
  return H;
}

struct HessianEstimate {
  CMat H;
  double gap = 0.0;  // max entry difference between steps h and h/2
};

inline HessianEstimate complex_hessian(const Field& u, const CVec& z, double h) {
  const CMat H1 = complex_hessian_raw(u, z, h);
  const CMat H2 = complex_hessian_raw(u, z, h / 2.0);
  HessianEstimate e;
  e.H = (4.0 * H2 - H1) / 3.0;
  e.H = (e.H + e.H.adjoint()) / 2.0;
  e.gap = (H2 - H1).cwiseAbs().maxCoeff();
  return e;
}

inline CVec real_gradient(const Field& u, const CVec& z, double h) {
  const int n = static_cast<int>(z.size());
  const cplx I(0.0, 1.0);
  CVec g(n);
  for (int j = 0; j < n; ++j) {
    const CVec ex = h * unit(n, j), ey = (h * I) * unit(n, j);
    const double gx = (u(z + ex) - u(z - ex)) / (2.0 * h);
    const double gy = (u(z + ey) - u(z - ey)) / (2.0 * h);
    g(j) = cplx(gx, gy);
  }
  return g;
}

}  // namespace pluripot::fd
