#include "surface_maps.hpp"

#include <cmath>

namespace spherex {

namespace {
// Shared guard for foot points: inside the punctured unit ball, away from
// the critical sphere {|y|^2 = y_last}.
void check_foot_domain(const Vec& y) {
  const double norm = y.norm();
  if (norm < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ORIGIN_UNDEFINED,
         "foot map undefined at the origin: no unique tangent plane");
  if (norm >= 1.0)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "foot point must lie inside the unit ball");
  if (std::abs(y.squared_norm() - y.last()) < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ON_S0, "foot point lies on the critical sphere");
}
}  // namespace

Vec tangent_foot(const Curve& curve, double t) {
  const Subsphere plane = tangent_line_at(curve, t);
  if (plane.rho < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ON_SIGMA0, "tangent plane passes through the origin");
  if (std::abs(plane.rho - plane.psi.last()) < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ON_SIGMA0, "tangent plane passes through the north pole");
  return plane.psi * plane.rho;
}

Vec tangent_foot(const RevolutionSurface& surface, double t, double phi) {
  const Subsphere plane = tangent_plane_at(surface, t, phi);
  if (plane.rho < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ON_SIGMA0, "tangent plane passes through the origin");
  if (std::abs(plane.rho - plane.psi.last()) < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ON_SIGMA0, "tangent plane passes through the north pole");
  return plane.psi * plane.rho;
}

Sphere sphere_from_foot(const Vec& y) {
  check_foot_domain(y);
  const double s = y.squared_norm();
  const double den = s - y.last();
  Sphere out;
  out.center = y.projected() * (1.0 / den);
  out.radius = std::sqrt(s) * std::sqrt(1.0 - s) / std::abs(den);
  return out;
}

double sphere_from_foot_jacobian(const Vec& y) {
  check_foot_domain(y);
  const double s = y.squared_norm();
  const double den = std::abs(s - y.last());
  double den_pow = den;
  for (int i = 1; i < y.dim(); ++i) den_pow *= den;  // den^{n+1}
  return std::sqrt(s) / (den_pow * std::sqrt(1.0 - s));
}

double foot_partition_value(const Vec& y) {
  check_foot_domain(y);
  return -2.0 * y.squared_norm() / (y.squared_norm() - y.last());
}

Sphere surface_image(const Curve& curve, double t) {
  const Subsphere plane = tangent_line_at(curve, t);
  if (std::abs(plane.rho - plane.psi.last()) < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ON_SINGULAR_SET,
         "surface map undefined: tangent plane passes through the north pole");
  return subsphere_image(plane);
}

Sphere surface_image(const RevolutionSurface& surface, double t, double phi) {
  const Subsphere plane = tangent_plane_at(surface, t, phi);
  if (std::abs(plane.rho - plane.psi.last()) < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ON_SINGULAR_SET,
         "surface map undefined: tangent plane passes through the north pole");
  return subsphere_image(plane);
}

Vec2 profile_image(const Curve& curve, double t) {
  const CurvePoint cp = curve.eval(t);
  const double w = cp.p.cross(cp.d1) + cp.d1.x;
  if (std::abs(w) < tol::UNIT_TOL)
    fail(SPHEREX_ERR_DENOMINATOR_VANISHES, "profile image diverges at this parameter");
  const double crossed = cp.p.cross(cp.d1);
  const double radicand = cp.d1.squared_norm() - crossed * crossed;
  if (radicand < 0.0)
    fail(SPHEREX_ERR_INVALID_ARGUMENT,
         "profile image radicand negative: curve not inside the unit circle");
  return {cp.d1.y / w, std::sqrt(radicand) / std::abs(w)};
}

ImageTangent profile_image_tangent(const Curve& curve, double t) {
  const CurvePoint cp = curve.eval(t);
  const double reg = cp.d1.cross(cp.d2);
  if (std::abs(reg) < tol::REG_TOL)
    fail(SPHEREX_ERR_NOT_REGULAR, "image tangent undefined: regularity expression vanishes");
  const double crossed = cp.p.cross(cp.d1);
  const double w = crossed + cp.d1.x;
  if (std::abs(w) < tol::UNIT_TOL)
    fail(SPHEREX_ERR_DENOMINATOR_VANISHES, "profile image diverges at this parameter");

  const double radicand = cp.d1.squared_norm() - crossed * crossed;
  const double crossed_dt = cp.p.cross(cp.d2);  // d/dt (gamma x gamma')
  const double radicand_dt = 2.0 * cp.d1.dot(cp.d2) - 2.0 * crossed * crossed_dt;
  const double w_dt = crossed_dt + cp.d2.x;
  const double sign = w < 0.0 ? -1.0 : 1.0;

  ImageTangent out;
  out.curvature_factor = reg / (w * w);
  out.direction = {out.curvature_factor * (1.0 - cp.p.y),
                   sign * (0.5 * radicand_dt * w - radicand * w_dt) /
                       (std::sqrt(radicand) * w * w)};
  return out;
}

SpacelikeReport spacelike_verify(const std::vector<double>& params,
                                 const std::vector<Vec>& normals) {
  SpacelikeReport report;
  report.sampled_params = params;
  report.normal_defect.reserve(normals.size());
  bool first = true;
  for (const Vec& raw : normals) {
    const Vec n = raw.normalized();
    double horizontal = 0.0;
    for (int i = 0; i + 1 < n.dim(); ++i) horizontal += n[i] * n[i];
    const double defect = n.last() * n.last() - horizontal;
    report.normal_defect.push_back(defect);
    if (first || defect < report.min_defect) report.min_defect = defect;
    first = false;
  }
  report.passed = !first && report.min_defect >= -tol::REG_TOL;
  return report;
}

HyperboloidModel::HyperboloidModel(double lambda, const Vec& omega, double r)
    : ambient_dim_(omega.dim()), omega_(omega), lambda_(lambda), r_(r) {
  if (std::abs(omega.norm() - 1.0) > 1e-9)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "hyperboloid model: omega must be a unit vector");
  if (lambda < 0.0 || r < 0.0 || r >= 1.0 - lambda)
    fail(SPHEREX_ERR_NOT_CONTAINED,
         "hyperboloid model requires 0 <= r < 1 - lambda (sphere inside the unit ball)");
  const double wl = omega.last();
  q_ = std::sqrt((1.0 - r + lambda * wl) / (1.0 + r - lambda * wl));
  p_ = std::sqrt((1.0 + r + lambda * wl) / (1.0 - r - lambda * wl));
  const double horizontal = std::sqrt(std::max(0.0, 1.0 - wl * wl));
  l_ = r + lambda * horizontal;
  a_ = 4.0 / ((q_ + p_) * (q_ + p_));
  b_ = (q_ - p_) / 2.0;
  c_ = (std::sqrt(1.0 - l_ * l_) - b_ * l_) * (std::sqrt(1.0 - l_ * l_) - b_ * l_) * a_ -
       l_ * l_;
  d_ = (std::sqrt(1.0 - r * r) - b_ * r) * (std::sqrt(1.0 - r * r) - b_ * r) * a_ -
       r * r;
  // Horizontal unit direction; arbitrary when omega is axial (then c == d and
  // the cross term collapses).
  omega_hat_ = Vec::zero(ambient_dim_ - 1);
  if (horizontal > 1e-9) {
    for (int i = 0; i + 1 < ambient_dim_; ++i) omega_hat_[i] = omega[i] / horizontal;
  } else {
    omega_hat_[0] = 1.0;
  }
}

double HyperboloidModel::eval_branch(const Vec& y, double sign) const {
  const Vec bar = y.projected();
  const double proj = omega_hat_.dot(bar);
  const double vertical = y.last() + sign * b_;
  return a_ * vertical * vertical - c_ * proj * proj -
         d_ * (bar.squared_norm() - proj * proj) - 1.0;
}

HyperboloidModel::Residual HyperboloidModel::residual(const Vec& image_point) const {
  const double plus = eval_branch(image_point, +1.0);
  const double minus = eval_branch(image_point, -1.0);
  if (std::abs(plus) <= std::abs(minus)) return {plus, Branch::plus};
  return {minus, Branch::minus};
}

Vec HyperboloidModel::gradient(const Vec& image_point, Branch branch) const {
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  const Vec bar = image_point.projected();
  const double proj = omega_hat_.dot(bar);
  Vec grad = Vec::zero(image_point.dim());
  for (int i = 0; i + 1 < image_point.dim(); ++i)
    grad[i] = -2.0 * c_ * proj * omega_hat_[i] -
              2.0 * d_ * (bar[i] - proj * omega_hat_[i]);
  grad.last() = 2.0 * a_ * (image_point.last() + sign * b_);
  return grad;
}

Sphere offset_sphere_image(double lambda, const Vec& omega, double r, const Vec& x,
                           double denominator_margin) {
  const double dot_wx = omega.dot(x);
  const double den =
      r * r - lambda * lambda + lambda * dot_wx - x.last() + lambda * omega.last();
  if (std::abs(den) < denominator_margin)
    fail(SPHEREX_ERR_ON_SINGULAR_SET,
         "offset sphere image: point is (numerically) on the singular set");
  const double inner = r * r - lambda * lambda + lambda * dot_wx;
  const double radicand = std::max(0.0, r * r - inner * inner);
  Sphere out;
  out.center = (x.projected() - omega.projected() * lambda) * (1.0 / den);
  out.radius = std::sqrt(radicand) / std::abs(den);
  return out;
}

}  // namespace spherex
