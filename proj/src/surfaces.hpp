#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "vec.hpp"

namespace spherex {

// Position and first two derivatives of a plane curve at one parameter.
struct CurvePoint {
  Vec2 p;
  Vec2 d1;
  Vec2 d2;
};

// Twice continuously differentiable closed plane curve on [-pi, pi).
struct Curve {
  std::function<CurvePoint(double)> eval;
};

// Built-in analytic profile families.
//
// polar_trig:  gamma(t) = (a r(t) cos t, a r(t) sin t + d),
//              r(t) = b + c sin(k t + phase)
// offset_circle: gamma(t) = lambda*omega + radius (cos t, sin t)
class ProfileCurve {
 public:
  enum class Family { polar_trig, offset_circle };

  // Default: unit-speed circle of radius 1/2; factories validate inputs.
  ProfileCurve() = default;

  static ProfileCurve polar_trig(double scale, double base, double amp, int freq,
                                 double phase, double vertical_shift);
  static ProfileCurve offset_circle(double lambda, Vec2 omega, double radius);

  Family family() const { return family_; }
  CurvePoint eval(double t) const;
  Curve curve() const;

  // offset_circle accessors (used by the offset-sphere quadric model).
  double offset_lambda() const { return lambda_; }
  Vec2 offset_omega() const { return omega_; }
  double circle_radius() const { return radius_; }

 private:
  // Profiles must stay strictly inside the unit circle; sampled check.
  void validate_containment() const;

  Family family_ = Family::polar_trig;
  // polar_trig parameters
  double scale_ = 1.0, base_ = 0.5, amp_ = 0.0, phase_ = 0.0, shift_ = 0.0;
  int freq_ = 1;
  // offset_circle parameters
  double lambda_ = 0.0, radius_ = 0.5;
  Vec2 omega_{0.0, 1.0};
};

// Profile revolved about the last coordinate axis when ambient_dim == 3;
// for ambient_dim == 2 the profile itself is the hypersurface.
struct RevolutionSurface {
  ProfileCurve profile;
  int ambient_dim = 3;

  // Surface point at profile parameter t (and revolution angle phi in 3D).
  Vec point(double t, double phi = 0.0) const;
};

struct SingularSet {
  std::vector<double> sigma_prime;   // tangent plane through the north pole
  std::vector<double> sigma0_extra;  // tangent plane through the origin
};

struct Component {
  double lo = 0.0;
  double hi = 0.0;  // hi may exceed pi for the wrap-around interval
  bool regular = false;
  double length() const { return hi - lo; }
};

struct ComponentDecomposition {
  std::vector<Component> components;
  std::vector<double> singular_params;
  std::vector<double> sigma0_extra_params;
  int upper_index = 0;

  bool contains(int index, double t) const;
};

struct RegularityResult {
  bool regular = false;
  double witness_param = 0.0;  // parameter of smallest |expression|
  double min_abs = 0.0;
};

// Residual of the condition that the tangent line at t passes through the
// north pole: W(t) = gamma x gamma' + gamma_1'. Zero exactly on Sigma'.
double north_pole_tangency(const Curve& curve, double t);

// Tangent-plane data (unit normal, offset with rho >= 0) at parameter t.
// For ambient_dim 3 the in-plane normal is revolved by phi.
Subsphere tangent_plane_at(const RevolutionSurface& surface, double t, double phi = 0.0);
Subsphere tangent_line_at(const Curve& curve, double t);

// Roots of the Sigma' and extra Sigma_0 conditions by a uniform scan with
// sign-change bisection.
SingularSet singular_params(const Curve& curve, int scan_points = 4096);

// Open intervals of the parameter circle between consecutive Sigma' roots,
// with the component containing the top axis crossing marked as upper.
ComponentDecomposition split_components(const Curve& curve, const SingularSet& roots);

// Regularity of gamma1' gamma2'' - gamma1'' gamma2' on an open interval:
// fails on any sign change or any sampled magnitude at or below REG_TOL.
RegularityResult regularity_check(const Curve& curve, double lo, double hi,
                                  int scan_points = 2048);

// Spherical region cut off below the tangent cone through the north pole
// and the boundary of the upper component.
CapRegion projection_set(const Curve& curve, const ComponentDecomposition& decomposition);

// Convenience: decomposition with regular flags filled in.
ComponentDecomposition decompose(const Curve& curve);

}  // namespace spherex
