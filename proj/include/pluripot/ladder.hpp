#pragma once

#include <cmath>
#include <vector>

namespace pluripot {

struct LadderResult {
  double value = 0.0;        // extrapolated limit
  double last = 0.0;         // last raw estimate
  double uncertainty = 0.0;  // |last - extrapolated|
  std::vector<double> raw;
};

// Aitken delta-squared on the final three estimates. Falls back to the last
// estimate when the sequence is (numerically) already constant or not
// geometric enough for the acceleration to make sense.
inline LadderResult aitken(const std::vector<double>& xs) {
  LadderResult r;
  r.raw = xs;
  if (xs.empty()) return r;
  r.last = xs.back();
  r.value = r.last;
  if (xs.size() < 3) {
    if (xs.size() == 2) r.uncertainty = std::abs(xs[1] - xs[0]);
    return r;
  }
  const double x0 = xs[xs.size() - 3], x1 = xs[xs.size() - 2], x2 = xs.back();
  const double d1 = x1 - x0, d2 = x2 - x1;
  const double den = d2 - d1;
  const double scale = std::abs(x0) + std::abs(x1) + std::abs(x2) + 1e-300;
  if (std::abs(den) > 1e-14 * scale && std::abs(d2) < std::abs(d1)) {
    r.value = x2 - d2 * d2 / den;
  }
  r.uncertainty = std::abs(r.last - r.value);
  if (r.uncertainty == 0.0) r.uncertainty = std::abs(d2);
  return r;
}

}  // namespace pluripot
