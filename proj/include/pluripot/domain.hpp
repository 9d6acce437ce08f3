#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pluripot/common.hpp"

namespace pluripot {

enum class Kind { disc, half_plane, ball, ellipsoid, annulus, general_convex };

std::string to_string(Kind k);

struct Capabilities {
  bool exact_distance_pairs = false;
  bool closed_form_poisson = false;
  bool closed_form_green = false;
};

using RealField = std::function<double(const CVec&)>;
using GradField = std::function<CVec(const CVec&)>;

// Descriptor as read from JSON: {"kind", "n", "m", "r"}.
struct DomainSpec {
  std::string kind;
  int n = 0;  // 0: derive from kind / m
  std::vector<int> m;
  double r = 0.0;
};

class Domain {
 public:
  Kind kind() const { return kind_; }
  int dim() const { return n_; }
  // Exponents of the ellipsoid family, z_0 first (always 2). Ball and disc
  // report all 2s; other kinds return an empty vector.
  const std::vector<int>& exponents() const { return exps_; }
  double inner_radius() const { return r_; }
  const Capabilities& caps() const { return caps_; }
  std::string name() const;

  double defining_function(const CVec& z) const { return rho_(z); }
  // Real gradient packed as g_j = d/dx_j + i d/dy_j.
  CVec gradient(const CVec& z) const { return grad_(z); }
  bool contains(const CVec& z) const;
  bool ellipsoid_family() const { return !exps_.empty(); }

  friend Domain make_domain(const DomainSpec&);
  friend Domain make_general_convex(int, RealField, GradField, std::vector<CVec>);

  // Interior sample points supplied with a general convex domain.
  const std::vector<CVec>& reference_points() const { return refs_; }

 private:
  Kind kind_ = Kind::disc;
  int n_ = 1;
  std::vector<int> exps_;
  double r_ = 0.0;
  Capabilities caps_;
  RealField rho_;
  GradField grad_;
  std::vector<CVec> refs_;
};

Domain make_domain(const DomainSpec& spec);
// Convex domain known only through a defining function. The gradient may be
// empty (finite differences are used). reference_points must contain at
// least one interior point; the first is used as the centre for ray shooting.
Domain make_general_convex(int n, RealField rho, GradField grad,
                           std::vector<CVec> reference_points);

DomainSpec domain_spec_from_json(const nlohmann::json& j);
nlohmann::json domain_spec_to_json(const DomainSpec& s);
// Shorthands used by the CLI: disc, halfplane, ballN, eggM, annulus.
DomainSpec parse_domain_shorthand(const std::string& s);

struct BoundaryPoint {
  CVec xi;
  CVec normal;
  std::vector<CVec> tangent;  // orthonormal frame of the complex tangent space
  std::optional<int> line_type;
};

BoundaryPoint make_boundary_point(const Domain& d, const CVec& xi);

struct Projection {
  BoundaryPoint point;
  double delta = 0.0;
};

Projection boundary_project(const Domain& d, const CVec& z);

// Hit the boundary from `from` (interior) along direction dir.
CVec ray_to_boundary(const Domain& d, const CVec& from, const CVec& dir);

struct LineTypeResult {
  int type = 2;
  bool saturated = false;  // "at least max_degree"
  bool unstable = false;   // slopes disagree by more than 0.25 along the ladder
  double slope = 0.0;      // raw fitted slope for the maximizing direction
};

LineTypeResult line_type(const Domain& d, const BoundaryPoint& xi, int max_degree = 8);

struct LeviData {
  CMat L;              // (n-1)x(n-1) Hermitian
  double grad_norm = 0.0;
  double richardson_gap = 0.0;
};

LeviData levi_data(const Domain& d, const BoundaryPoint& xi, double h = 1e-3,
                   double rho_scale = 1.0);

// Euclidean distance to the boundary; shorthand for boundary_project().delta.
double delta(const Domain& d, const CVec& z);

}  // namespace pluripot
