#include "geometry.hpp"

#include <cmath>

namespace spherex {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_dim(const Vec& v, const char* what) {
  if (v.dim() != 2 && v.dim() != 3)
    fail(SPHEREX_ERR_INVALID_ARGUMENT,
         std::string(what) + ": ambient dimension must be 2 or 3");
  if (!v.all_finite())
    fail(SPHEREX_ERR_INVALID_ARGUMENT, std::string(what) + ": non-finite coordinates");
}
}  // namespace

Subsphere Subsphere::make(const Vec& psi, double rho) {
  require_dim(psi, "subsphere");
  if (std::abs(psi.norm() - 1.0) > tol::UNIT_TOL)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "subsphere: psi must be a unit vector");
  if (!(rho >= 0.0 && rho < 1.0))
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "subsphere: rho must lie in [0, 1)");
  return Subsphere{psi, rho};
}

Vec north_pole(int ambient_dim) { return Vec::axis(ambient_dim, ambient_dim - 1); }

Vec stereo_forward(const Vec& x) {
  require_dim(x, "stereo_forward");
  if (std::abs(x.norm() - 1.0) > tol::GEOM_TOL)
    fail(SPHEREX_ERR_NOT_ON_SPHERE, "stereo_forward: point is not on the unit sphere");
  if (x.last() >= 1.0 - tol::UNIT_TOL)
    fail(SPHEREX_ERR_NORTH_POLE_SINGULAR,
         "stereo_forward: projection undefined at the north pole");
  return x.projected() * (1.0 / (1.0 - x.last()));
}

Vec stereo_inverse(const Vec& y) {
  if (y.dim() != 1 && y.dim() != 2)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "stereo_inverse: dimension must be 1 or 2");
  if (!y.all_finite())
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "stereo_inverse: non-finite coordinates");
  const double s = y.squared_norm();
  const double scale = 2.0 / (1.0 + s);
  Vec x = (y * scale).lifted((s - 1.0) / (1.0 + s));
  return x;
}

Sphere subsphere_image(const Subsphere& s) {
  const double den = s.rho - s.psi.last();
  if (std::abs(den) < tol::UNIT_TOL)
    fail(SPHEREX_ERR_PASSES_THROUGH_NORTH_POLE,
         "subsphere_image: subsphere passes through the north pole");
  Sphere out;
  out.center = s.psi.projected() * (1.0 / den);
  out.radius = std::sqrt(1.0 - s.rho * s.rho) / std::abs(den);
  return out;
}

double measure_weight(const Vec& y) {
  const int n = y.dim();
  if (n == 1) return 1.0;
  return 2.0 / (1.0 + y.squared_norm());  // n == 2
}

std::vector<Vec> orthonormal_frame(const Vec& psi) {
  const int dim = psi.dim();
  if (dim == 2) {
    return {Vec(-psi[1], psi[0])};
  }
  int smallest = 0;
  for (int i = 1; i < dim; ++i)
    if (std::abs(psi[i]) < std::abs(psi[smallest])) smallest = i;
  const Vec axis = Vec::axis(dim, smallest);
  const Vec u = (axis - psi * psi.dot(axis)).normalized();
  return {u, cross(psi, u)};
}

std::vector<WeightedPoint> subsphere_nodes(const Subsphere& s, int count) {
  const int dim = s.psi.dim();
  const double ring = std::sqrt(1.0 - s.rho * s.rho);
  const auto frame = orthonormal_frame(s.psi);
  std::vector<WeightedPoint> nodes;
  if (dim == 2) {
    nodes.push_back({s.psi * s.rho + frame[0] * ring, 1.0});
    nodes.push_back({s.psi * s.rho - frame[0] * ring, 1.0});
    return nodes;
  }
  if (count < 8)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "subsphere_nodes: need at least 8 nodes");
  nodes.reserve(static_cast<std::size_t>(count));
  const double weight = 2.0 * kPi * ring / count;
  for (int i = 0; i < count; ++i) {
    const double th = 2.0 * kPi * i / count;
    const Vec p = s.psi * s.rho + (frame[0] * std::cos(th) + frame[1] * std::sin(th)) * ring;
    nodes.push_back({p, weight});
  }
  return nodes;
}

std::vector<WeightedPoint> sphere_nodes(const Sphere& s, int count) {
  const int n = s.center.dim();
  std::vector<WeightedPoint> nodes;
  if (n == 1) {
    Vec lo = s.center, hi = s.center;
    lo[0] -= s.radius;
    hi[0] += s.radius;
    nodes.push_back({lo, 1.0});
    nodes.push_back({hi, 1.0});
    return nodes;
  }
  if (n != 2) fail(SPHEREX_ERR_INVALID_ARGUMENT, "sphere_nodes: center must be 1D or 2D");
  if (count < 8)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "sphere_nodes: need at least 8 nodes");
  if (!(s.radius > 0.0))
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "sphere_nodes: radius must be positive");
  nodes.reserve(static_cast<std::size_t>(count));
  const double weight = 2.0 * kPi * s.radius / count;
  for (int i = 0; i < count; ++i) {
    const double th = 2.0 * kPi * i / count;
    Vec p = s.center;
    p[0] += s.radius * std::cos(th);
    p[1] += s.radius * std::sin(th);
    nodes.push_back({p, weight});
  }
  return nodes;
}

}  // namespace spherex
