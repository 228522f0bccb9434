#pragma once

#include <memory>
#include <vector>

#include "geometry.hpp"
#include "surfaces.hpp"

namespace spherex {

// Evaluable scalar field on the unit sphere. cap_bump is the compactly
// supported mollifier A exp(-1/(s^2 - |x-c|^2)) on the chordal ball |x-c|<s.
class SphereField {
 public:
  struct Cap {
    Vec center;
    double radius = 0.0;
    double amplitude = 0.0;
  };

  static SphereField constant(double value);
  static SphereField coordinate(int index);
  static SphereField cap_bump(const Vec& center, double radius, double amplitude);
  static SphereField sum(std::vector<SphereField> terms);

  double eval(const Vec& x) const;

  // True when the support provably avoids a neighborhood of the north pole
  // (chordal clearance of at least C0_MARGIN).
  bool c0_compatible(int ambient_dim) const;

  // Support caps when the field is a (sum of) cap bump(s); empty for fields
  // with full support.
  std::vector<Cap> support_caps() const;

 private:
  enum class Kind { constant, coordinate, cap_bump, sum };
  Kind kind_ = Kind::constant;
  double value_ = 0.0;
  int index_ = 0;
  Cap cap_;
  std::vector<SphereField> terms_;
};

// Evaluable scalar field on the plane: direct families or the pullback of a
// sphere field through the inverse stereographic projection.
class PlaneField {
 public:
  static PlaneField constant(double value);
  // phi(|y|) = sum_i coeffs[i] |y|^{2i}
  static PlaneField radial(std::vector<double> even_coeffs);
  static PlaneField bump(const Vec& center, double radius, double amplitude);
  // g(y) = measure_weight(y) * f(stereo_inverse(y))
  static PlaneField pullback(SphereField f);

  double eval(const Vec& y) const;

 private:
  enum class Kind { constant, radial, bump, pullback };
  Kind kind_ = Kind::constant;
  double value_ = 0.0;
  std::vector<double> coeffs_;
  Vec center_;
  double radius_ = 0.0, amplitude_ = 0.0;
  std::shared_ptr<SphereField> source_;
};

// Integral of f over the subsphere (trapezoid rule on the circle; exact
// two-point sum in ambient dimension 2).
double spherical_transform(const SphereField& f, const Subsphere& s,
                           int count = tol::DEFAULT_NODES);

// Same transform indexed by the plane's closest point to the origin.
double modified_spherical_transform(const SphereField& f, const Vec& y,
                                    int count = tol::DEFAULT_NODES);

// Central-difference gradient of the modified transform in ambient
// coordinates. The step ball must stay inside the punctured unit ball.
Vec modified_transform_gradient(const SphereField& f, const Vec& y,
                                double step = tol::DEFAULT_FD_STEP,
                                int count = tol::DEFAULT_NODES);

// Integral of g over the sphere {|y' - center| = radius}.
double spherical_mean(const PlaneField& g, const Sphere& s,
                      int count = tol::DEFAULT_NODES);

struct RelationCheck {
  double lhs = 0.0;  // spherical transform on the subsphere
  double rhs = 0.0;  // spherical mean of the pullback on the image sphere
  double residual = 0.0;
};

// Cross-check of the transform relation: compares the subsphere integral
// against the plane-side mean of the pullback. The plane-side node count is
// scaled with the image radius so large circles stay resolved.
RelationCheck transform_relation_check(const SphereField& f, const Subsphere& s,
                                       int count = tol::DEFAULT_NODES);

// Values of the normalized spherical mean t^{1-n} Rg on a uniform grid of
// centers and radii (spacing h in every direction).
struct MeanGrid {
  int plane_dim = 2;  // 1 or 2
  Vec corner;         // first center
  double t0 = 0.0;    // first radius
  double h = 0.0;
  int nx = 0, ny = 0, nt = 0;  // ny == 1 when plane_dim == 1
  std::vector<double> values;

  double at(int i, int j, int k) const {
    return values[static_cast<std::size_t>((i * ny + j) * nt + k)];
  }
  static MeanGrid build(const PlaneField& g, int plane_dim, const Vec& center,
                        double t_center, double h, int half_cells,
                        int count = tol::DEFAULT_NODES);
};

struct DarbouxResidual {
  double max_abs = 0.0;
  int interior_points = 0;
};

// Second-order central residual of the Darboux operator
// (d^2_t + (n-1)/t d_t - Lap_x) on grid interior points.
DarbouxResidual darboux_residual(const MeanGrid& grid);

struct DarbouxConvergence {
  double coarse_max = 0.0;
  double fine_max = 0.0;
  double observed_order = 0.0;
};

// Refinement study: residual maxima on grids of spacing h and h/2 over the
// same window, with the observed order log2(coarse/fine).
DarbouxConvergence darboux_convergence(const PlaneField& g, int plane_dim,
                                       const Vec& center, double t_center, double h,
                                       int half_cells, int count = tol::DEFAULT_NODES);

struct VanishingReport {
  double max_value = 0.0;      // largest |modified transform| over samples
  double max_gradient = 0.0;   // largest gradient norm over samples
  int checked = 0;
  int skipped = 0;             // samples excluded as Sigma_0 points
  bool passed = false;
};

// Vanishing-with-perturbations check: at every sample the modified transform
// of f at the tangent foot and its FD gradient must stay below tol.
VanishingReport vanishing_data_check(const SphereField& f, const RevolutionSurface& surface,
                                     const std::vector<double>& params,
                                     const std::vector<double>& phis, double tolerance,
                                     int count = tol::DEFAULT_NODES,
                                     double step = tol::DEFAULT_FD_STEP);

}  // namespace spherex
