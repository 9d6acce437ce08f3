#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pluripot {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Bad input or descriptor (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver or ladder did not produce a trustworthy value (CLI exit code 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// <z,w> = sum z_j conj(w_j)
inline cplx herm(const CVec& z, const CVec& w) { return w.dot(z); }

inline CVec vec(std::initializer_list<cplx> xs) {
  CVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

inline CVec unit(int n, int j) {
  CVec v = CVec::Zero(n);
  v(j) = 1.0;
  return v;
}

// Logarithm with an explicit pole marker instead of -inf.
struct LogValue {
  double value = 0.0;
  bool neg_infinity = false;

  static LogValue pole() { return {0.0, true}; }
  bool operator<(const LogValue& o) const {
    if (neg_infinity) return !o.neg_infinity;
    if (o.neg_infinity) return false;
    return value < o.value;
  }
};

}  // namespace pluripot
