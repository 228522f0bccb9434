#include "transforms.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "surface_maps.hpp"

namespace spherex {

SphereField SphereField::constant(double value) {
  SphereField f;
  f.kind_ = Kind::constant;
  f.value_ = value;
  return f;
}

SphereField SphereField::coordinate(int index) {
  SphereField f;
  f.kind_ = Kind::coordinate;
  if (index < 0 || index > 2)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "coordinate field: index out of range");
  f.index_ = index;
  return f;
}

SphereField SphereField::cap_bump(const Vec& center, double radius, double amplitude) {
  SphereField f;
  f.kind_ = Kind::cap_bump;
  if (std::abs(center.norm() - 1.0) > 1e-9)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "cap_bump: center must lie on the unit sphere");
  if (!(radius > 0.0 && radius < 2.0))
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "cap_bump: chordal radius must lie in (0, 2)");
  f.cap_ = {center, radius, amplitude};
  return f;
}

SphereField SphereField::sum(std::vector<SphereField> terms) {
  SphereField f;
  f.kind_ = Kind::sum;
  f.terms_ = std::move(terms);
  return f;
}

double SphereField::eval(const Vec& x) const {
  switch (kind_) {
    case Kind::constant:
      return value_;
    case Kind::coordinate:
      return index_ < x.dim() ? x[index_] : 0.0;
    case Kind::cap_bump: {
      const double d2 = (x - cap_.center).squared_norm();
      const double s2 = cap_.radius * cap_.radius;
      if (d2 >= s2) return 0.0;
      return cap_.amplitude * std::exp(-1.0 / (s2 - d2));
    }
    case Kind::sum: {
      double v = 0.0;
      for (const auto& term : terms_) v += term.eval(x);
      return v;
    }
  }
  return 0.0;
}

bool SphereField::c0_compatible(int ambient_dim) const {
  switch (kind_) {
    case Kind::constant:
      return value_ == 0.0;
    case Kind::coordinate:
      return false;
    case Kind::cap_bump: {
      const double gap =
          (cap_.center - north_pole(ambient_dim)).norm() - cap_.radius;
      return gap > tol::C0_MARGIN;
    }
    case Kind::sum:
      return std::all_of(terms_.begin(), terms_.end(), [ambient_dim](const SphereField& t) {
        return t.c0_compatible(ambient_dim);
      });
  }
  return false;
}

std::vector<SphereField::Cap> SphereField::support_caps() const {
  switch (kind_) {
    case Kind::constant:
    case Kind::coordinate:
      return {};
    case Kind::cap_bump:
      return {cap_};
    case Kind::sum: {
      std::vector<Cap> caps;
      for (const auto& term : terms_) {
        auto sub = term.support_caps();
        caps.insert(caps.end(), sub.begin(), sub.end());
      }
      return caps;
    }
  }
  return {};
}

PlaneField PlaneField::constant(double value) {
  PlaneField g;
  g.kind_ = Kind::constant;
  g.value_ = value;
  return g;
}

PlaneField PlaneField::radial(std::vector<double> even_coeffs) {
  PlaneField g;
  g.kind_ = Kind::radial;
  g.coeffs_ = std::move(even_coeffs);
  return g;
}

PlaneField PlaneField::bump(const Vec& center, double radius, double amplitude) {
  PlaneField g;
  g.kind_ = Kind::bump;
  g.center_ = center;
  g.radius_ = radius;
  g.amplitude_ = amplitude;
  return g;
}

PlaneField PlaneField::pullback(SphereField f) {
  PlaneField g;
  g.kind_ = Kind::pullback;
  g.source_ = std::make_shared<SphereField>(std::move(f));
  return g;
}

double PlaneField::eval(const Vec& y) const {
  switch (kind_) {
    case Kind::constant:
      return value_;
    case Kind::radial: {
      const double s = y.squared_norm();
      double acc = 0.0;
      double power = 1.0;
      for (double c : coeffs_) {
        acc += c * power;
        power *= s;
      }
      return acc;
    }
    case Kind::bump: {
      const double d2 = (y - center_).squared_norm();
      const double s2 = radius_ * radius_;
      if (d2 >= s2) return 0.0;
      return amplitude_ * std::exp(-1.0 / (s2 - d2));
    }
    case Kind::pullback:
      return measure_weight(y) * source_->eval(stereo_inverse(y));
  }
  return 0.0;
}

namespace {
// Kahan compensated accumulation; keeps exact integrand families exact at
// the level the Darboux stencils can see.
struct CompensatedSum {
  double total = 0.0;
  double carry = 0.0;
  void add(double term) {
    const double y = term - carry;
    const double t = total + y;
    carry = (t - total) - y;
    total = t;
  }
};
}  // namespace

double spherical_transform(const SphereField& f, const Subsphere& s, int count) {
  if (s.psi.dim() == 3 && count < 64)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "spherical transform: need at least 64 nodes");
  CompensatedSum acc;
  for (const auto& node : subsphere_nodes(s, count)) acc.add(f.eval(node.point) * node.weight);
  return acc.total;
}

double modified_spherical_transform(const SphereField& f, const Vec& y, int count) {
  const double norm = y.norm();
  if (norm < tol::UNIT_TOL)
    fail(SPHEREX_ERR_ORIGIN_UNDEFINED,
         "modified transform undefined at the origin: no unique hyperplane");
  if (norm >= 1.0)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "modified transform: point must be inside the unit ball");
  Subsphere s;
  s.psi = y * (1.0 / norm);
  s.rho = norm;
  return spherical_transform(f, s, count);
}

Vec modified_transform_gradient(const SphereField& f, const Vec& y, double step,
                                int count) {
  const double norm = y.norm();
  if (norm - step <= tol::UNIT_TOL || norm + step >= 1.0)
    fail(SPHEREX_ERR_DOMAIN_CLIP,
         "gradient step ball leaves the domain of the modified transform");
  Vec grad = Vec::zero(y.dim());
  for (int i = 0; i < y.dim(); ++i) {
    Vec hi = y, lo = y;
    hi[i] += step;
    lo[i] -= step;
    grad[i] = (modified_spherical_transform(f, hi, count) -
               modified_spherical_transform(f, lo, count)) /
              (2.0 * step);
  }
  return grad;
}

double spherical_mean(const PlaneField& g, const Sphere& s, int count) {
  CompensatedSum acc;
  for (const auto& node : sphere_nodes(s, count)) acc.add(g.eval(node.point) * node.weight);
  return acc.total;
}

RelationCheck transform_relation_check(const SphereField& f, const Subsphere& s,
                                       int count) {
  RelationCheck out;
  out.lhs = spherical_transform(f, s, count);
  const Sphere image = subsphere_image(s);
  int mean_count = count;
  if (s.psi.dim() == 3) {
    // Uniform angular nodes on a radius-t circle space arc length by t; scale
    // the node count so the pullback stays resolved on large images.
    const double factor = std::min(4096.0, std::ceil(std::max(1.0, image.radius)));
    mean_count = static_cast<int>(count * factor);
  }
  out.rhs = spherical_mean(PlaneField::pullback(f), image, mean_count);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

MeanGrid MeanGrid::build(const PlaneField& g, int plane_dim, const Vec& center,
                         double t_center, double h, int half_cells, int count) {
  if (plane_dim != 1 && plane_dim != 2)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "mean grid: plane dimension must be 1 or 2");
  MeanGrid grid;
  grid.plane_dim = plane_dim;
  grid.h = h;
  grid.nx = 2 * half_cells + 1;
  grid.ny = plane_dim == 2 ? 2 * half_cells + 1 : 1;
  grid.nt = 2 * half_cells + 1;
  grid.corner = center;
  for (int i = 0; i < plane_dim; ++i) grid.corner[i] -= half_cells * h;
  grid.t0 = t_center - half_cells * h;
  // keep radii positive; the 1/t term rules out t == 0
  const double t_floor = std::max(h, 1e-3);
  if (grid.t0 < t_floor)
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "mean grid: radius window reaches below t floor");

  grid.values.assign(static_cast<std::size_t>(grid.nx) * grid.ny * grid.nt, 0.0);
  const int ny = grid.ny, nt = grid.nt;
  parallel_for(grid.values.size(), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) % nt;
    const int j = (static_cast<int>(idx) / nt) % ny;
    const int i = static_cast<int>(idx) / (nt * ny);
    Sphere s;
    s.center = grid.corner;
    s.center[0] += i * h;
    if (plane_dim == 2) s.center[1] += j * h;
    s.radius = grid.t0 + k * h;
    const double mean = spherical_mean(g, s, count);
    const double normalizer = plane_dim == 2 ? 1.0 / s.radius : 1.0;  // t^{1-n}
    grid.values[idx] = mean * normalizer;
  });
  return grid;
}

namespace {
// Residual of the Darboux stencil at one interior grid point.
double stencil_residual(const MeanGrid& grid, int i, int j, int k) {
  const double h2 = grid.h * grid.h;
  const int n = grid.plane_dim;
  const double t = grid.t0 + k * grid.h;
  const double q = grid.at(i, j, k);
  const double qtt = (grid.at(i, j, k + 1) - 2.0 * q + grid.at(i, j, k - 1)) / h2;
  const double qt = (grid.at(i, j, k + 1) - grid.at(i, j, k - 1)) / (2.0 * grid.h);
  double lap = (grid.at(i + 1, j, k) - 2.0 * q + grid.at(i - 1, j, k)) / h2;
  if (n == 2) lap += (grid.at(i, j + 1, k) - 2.0 * q + grid.at(i, j - 1, k)) / h2;
  return qtt + (n - 1) / t * qt - lap;
}
}  // namespace

DarbouxResidual darboux_residual(const MeanGrid& grid) {
  DarbouxResidual out;
  for (int i = 1; i + 1 < grid.nx; ++i) {
    const int j_lo = grid.plane_dim == 2 ? 1 : 0;
    const int j_hi = grid.plane_dim == 2 ? grid.ny - 1 : 1;
    for (int j = j_lo; j < j_hi; ++j) {
      for (int k = 1; k + 1 < grid.nt; ++k) {
        out.max_abs = std::max(out.max_abs, std::abs(stencil_residual(grid, i, j, k)));
        ++out.interior_points;
      }
    }
  }
  return out;
}

DarbouxConvergence darboux_convergence(const PlaneField& g, int plane_dim,
                                       const Vec& center, double t_center, double h,
                                       int half_cells, int count) {
  const MeanGrid coarse = MeanGrid::build(g, plane_dim, center, t_center, h, half_cells, count);
  const MeanGrid fine =
      MeanGrid::build(g, plane_dim, center, t_center, h / 2.0, 2 * half_cells, count);
  // Compare at the shared physical points (the coarse interior) so the ratio
  // isolates the h^2 truncation term.
  DarbouxConvergence out;
  for (int i = 1; i + 1 < coarse.nx; ++i) {
    const int j_lo = plane_dim == 2 ? 1 : 0;
    const int j_hi = plane_dim == 2 ? coarse.ny - 1 : 1;
    for (int j = j_lo; j < j_hi; ++j) {
      for (int k = 1; k + 1 < coarse.nt; ++k) {
        out.coarse_max =
            std::max(out.coarse_max, std::abs(stencil_residual(coarse, i, j, k)));
        out.fine_max = std::max(
            out.fine_max,
            std::abs(stencil_residual(fine, 2 * i, plane_dim == 2 ? 2 * j : 0, 2 * k)));
      }
    }
  }
  out.observed_order = std::log2(out.coarse_max / out.fine_max);
  return out;
}

VanishingReport vanishing_data_check(const SphereField& f, const RevolutionSurface& surface,
                                     const std::vector<double>& params,
                                     const std::vector<double>& phis, double tolerance,
                                     int count, double step) {
  VanishingReport report;
  struct Sample {
    double value = 0.0;
    double gradient = 0.0;
    bool skipped = false;
  };
  std::vector<Sample> samples(params.size());
  parallel_for(params.size(), [&](std::size_t i) {
    const double phi = phis.empty() ? 0.0 : phis[i % phis.size()];
    try {
      const Vec foot = tangent_foot(surface, params[i], phi);
      samples[i].value = std::abs(modified_spherical_transform(f, foot, count));
      samples[i].gradient = modified_transform_gradient(f, foot, step, count).norm();
    } catch (const Error& e) {
      if (e.code() == SPHEREX_ERR_ON_SIGMA0) {
        samples[i].skipped = true;
        return;
      }
      throw;
    }
  });
  for (const Sample& s : samples) {
    if (s.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    report.max_value = std::max(report.max_value, s.value);
    report.max_gradient = std::max(report.max_gradient, s.gradient);
  }
  report.passed = report.checked > 0 && report.max_value < tolerance &&
                  report.max_gradient < tolerance;
  return report;
}

}  // namespace spherex
