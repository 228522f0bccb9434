#pragma once

#include <vector>

#include "errors.hpp"
#include "tolerances.hpp"
#include "vec.hpp"

namespace spherex {

// Subsphere of the unit sphere cut out by the plane {x . psi = rho}.
// psi is a unit vector in the ambient space, rho in [0, 1).
struct Subsphere {
  Vec psi;
  double rho = 0.0;

  // Validates the unit-norm and offset invariants.
  static Subsphere make(const Vec& psi, double rho);
};

// Sphere in R^n by center and radius; also read as a point of R^n x R+.
struct Sphere {
  Vec center;
  double radius = 0.0;

  Vec as_point() const { return center.lifted(radius); }
};

// Axis-symmetric spherical region {x : x_last < height} (or >).
struct CapRegion {
  enum class Side { below, above };
  double axis_height = 0.0;
  Side side = Side::below;

  bool contains(const Vec& x) const {
    return side == Side::below ? x.last() < axis_height : x.last() > axis_height;
  }
};

struct WeightedPoint {
  Vec point;
  double weight = 0.0;
};

// North pole e_{dim} of the unit sphere in R^dim.
Vec north_pole(int ambient_dim);

// Stereographic projection from the north pole; defined away from it.
Vec stereo_forward(const Vec& x);
// Its inverse; lands on the unit sphere.
Vec stereo_inverse(const Vec& y);

// Projected image of a subsphere that avoids the north pole:
// center psi*/(rho - psi_last), radius sqrt(1-rho^2)/|rho - psi_last|.
Sphere subsphere_image(const Subsphere& s);

// Density of the spherical measure pulled to the plane:
// 2^{n-1}/(1+|y|^2)^{n-1} with n = dim(y).
double measure_weight(const Vec& y);

// Deterministic orthonormal frame of the plane orthogonal to unit psi.
// Gram-Schmidt against the coordinate axis of smallest |psi . e_i|, ties
// broken by lowest index; for dim 3 the second vector is psi x u.
std::vector<Vec> orthonormal_frame(const Vec& psi);

// Quadrature nodes on the subsphere. Ambient dim 3: N uniformly spaced
// points, each with trapezoid weight 2*pi*sqrt(1-rho^2)/N. Ambient dim 2:
// the two intersection points with weight 1.
std::vector<WeightedPoint> subsphere_nodes(const Subsphere& s, int count);

// Quadrature nodes on a sphere in the plane. dim(center) == 2: uniform
// angular nodes with weights 2*pi*t/N; dim 1: the two points x -+ t.
std::vector<WeightedPoint> sphere_nodes(const Sphere& s, int count);

}  // namespace spherex
