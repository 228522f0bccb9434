#pragma once

#include <vector>

#include "geometry.hpp"
#include "surfaces.hpp"

namespace spherex {

// Tangent-plane foot point: the closest point to the origin on the tangent
// plane at parameter t (for ambient dim 3, revolved by phi). Undefined when
// the tangent plane passes through the origin or the north pole.
Vec tangent_foot(const RevolutionSurface& surface, double t, double phi = 0.0);
Vec tangent_foot(const Curve& curve, double t);

// Sphere assigned to a foot point y with 0 < |y| < 1:
// center y*/(|y|^2 - y_last), radius |y| sqrt(1-|y|^2)/||y|^2 - y_last|.
// Points nearer the origin than the critical sphere {|y|^2 = y_last} map
// above the hyperboloid t^2 - |c|^2 = 1, outer points below.
Sphere sphere_from_foot(const Vec& y);

// Closed-form absolute Jacobian determinant of the foot-to-sphere map:
// |y| / (||y|^2 - y_last|^{n+1} sqrt(1 - |y|^2)). Strictly positive.
double sphere_from_foot_jacobian(const Vec& y);

// Signed classification helper: t^2 - |c|^2 - 1 for the image of y equals
// -2|y|^2/(|y|^2 - y_last); positive iff y is inside the critical sphere.
double foot_partition_value(const Vec& y);

// Surface map: the projected sphere of the tangent plane at a surface point.
// Undefined on the singular set (tangent plane through the north pole).
Sphere surface_image(const RevolutionSurface& surface, double t, double phi = 0.0);
Sphere surface_image(const Curve& curve, double t);

// 2D closed form of the image of a profile curve: with W = gamma x gamma' +
// gamma1', the image point is
//   ( gamma2'/W , sqrt(|gamma'|^2 - (gamma x gamma')^2) / |W| ).
Vec2 profile_image(const Curve& curve, double t);

struct ImageTangent {
  Vec2 direction;           // derivative of profile_image at t
  double curvature_factor;  // (gamma1' gamma2'' - gamma1'' gamma2') / W^2
};

// Tangent direction of the profile image, in closed form. Requires the
// regularity expression and W to be bounded away from zero.
ImageTangent profile_image_tangent(const Curve& curve, double t);

struct SpacelikeReport {
  std::vector<double> sampled_params;
  std::vector<double> normal_defect;  // unit-normal n: n_last^2 - sum n_i^2
  double min_defect = 0.0;
  bool passed = false;
};

// Defect of the space-likeness inequality per sample; passes when the
// minimum stays above -REG_TOL. Normals need not be unit length.
SpacelikeReport spacelike_verify(const std::vector<double>& params,
                                 const std::vector<Vec>& normals);

// Quadric model for the image of a sphere of radius r centered at
// lambda*omega (Example constants Q, P, L, A, B, C, D). The model is exact
// for lambda == 0; for lambda != 0 the true image is a quartic and the
// quadric only osculates it, which residual() makes measurable.
class HyperboloidModel {
 public:
  enum class Branch { plus, minus };
  struct Residual {
    double value = 0.0;
    Branch branch = Branch::plus;
  };

  // omega is a unit vector in the ambient space; requires 0 <= r < 1-lambda.
  HyperboloidModel(double lambda, const Vec& omega, double r);

  double q() const { return q_; }
  double p() const { return p_; }
  double l() const { return l_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  // Signed quadric residual at an image point, branch chosen to minimize the
  // magnitude.
  Residual residual(const Vec& image_point) const;

  // Analytic gradient of the chosen branch at the point (for space-likeness
  // checks on the model surface).
  Vec gradient(const Vec& image_point, Branch branch) const;

 private:
  double eval_branch(const Vec& y, double sign) const;

  int ambient_dim_ = 3;
  Vec omega_;
  double lambda_ = 0.0, r_ = 0.0;
  double q_ = 0.0, p_ = 0.0, l_ = 0.0, a_ = 0.0, b_ = 0.0, c_ = 0.0, d_ = 0.0;
  Vec omega_hat_;  // unit horizontal direction (first n coords)
};

// Image of a surface point of the sphere |x - lambda*omega| = r under the
// tangent-plane map, via the implicit-gradient closed form. Throws
// OnSingularSet when the denominator vanishes (within margin).
Sphere offset_sphere_image(double lambda, const Vec& omega, double r, const Vec& x,
                           double denominator_margin = tol::UNIT_TOL);

}  // namespace spherex
