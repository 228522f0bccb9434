#include "surfaces.hpp"

#include <algorithm>
#include <cmath>

namespace spherex {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_param(double t) {
  // into [-pi, pi)
  t = std::fmod(t + kPi, 2.0 * kPi);
  if (t < 0) t += 2.0 * kPi;
  return t - kPi;
}

// Bisection on a sign change of f over [lo, hi] down to ROOT_TOL width.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > tol::ROOT_TOL; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((flo <= 0.0) == (fmid <= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// All roots of f on the parameter circle [-pi, pi) via a uniform scan.
std::vector<double> periodic_roots(const std::function<double(double)>& f,
                                   int scan_points) {
  std::vector<double> roots;
  const double step = 2.0 * kPi / scan_points;
  double prev_t = -kPi;
  double prev_v = f(prev_t);
  for (int i = 1; i <= scan_points; ++i) {
    const double t = -kPi + step * i;
    const double v = f(t);
    if (prev_v == 0.0) {
      roots.push_back(wrap_param(prev_t));
    } else if ((prev_v < 0.0) != (v < 0.0)) {
      roots.push_back(wrap_param(bisect(f, prev_t, t)));
    }
    prev_t = t;
    prev_v = v;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}
}  // namespace

ProfileCurve ProfileCurve::polar_trig(double scale, double base, double amp, int freq,
                                      double phase, double vertical_shift) {
  ProfileCurve c;
  c.family_ = Family::polar_trig;
  c.scale_ = scale;
  c.base_ = base;
  c.amp_ = amp;
  c.freq_ = freq;
  c.phase_ = phase;
  c.shift_ = vertical_shift;
  if (!(scale > 0.0) || !(base > 0.0))
    fail(SPHEREX_ERR_CONFIG_INVALID, "polar_trig profile: scale and base must be positive");
  if (std::abs(amp) >= base)
    fail(SPHEREX_ERR_CONFIG_INVALID, "polar_trig profile: |amp| must stay below base");
  c.validate_containment();
  return c;
}

ProfileCurve ProfileCurve::offset_circle(double lambda, Vec2 omega, double radius) {
  ProfileCurve c;
  c.family_ = Family::offset_circle;
  c.lambda_ = lambda;
  c.omega_ = omega;
  c.radius_ = radius;
  if (lambda < 0.0)
    fail(SPHEREX_ERR_CONFIG_INVALID, "offset_circle profile: lambda must be >= 0");
  if (!(radius > 0.0))
    fail(SPHEREX_ERR_CONFIG_INVALID, "offset_circle profile: radius must be positive");
  if (std::abs(omega.norm() - 1.0) > 1e-9)
    fail(SPHEREX_ERR_CONFIG_INVALID, "offset_circle profile: omega must be a unit vector");
  c.validate_containment();
  return c;
}

CurvePoint ProfileCurve::eval(double t) const {
  CurvePoint out;
  if (family_ == Family::polar_trig) {
    const double arg = freq_ * t + phase_;
    const double r = base_ + amp_ * std::sin(arg);
    const double rp = amp_ * freq_ * std::cos(arg);
    const double rpp = -amp_ * freq_ * freq_ * std::sin(arg);
    const double ct = std::cos(t), st = std::sin(t);
    out.p = {scale_ * r * ct, scale_ * r * st + shift_};
    out.d1 = {scale_ * (rp * ct - r * st), scale_ * (rp * st + r * ct)};
    out.d2 = {scale_ * (rpp * ct - 2.0 * rp * st - r * ct),
              scale_ * (rpp * st + 2.0 * rp * ct - r * st)};
  } else {
    const double ct = std::cos(t), st = std::sin(t);
    out.p = {lambda_ * omega_.x + radius_ * ct, lambda_ * omega_.y + radius_ * st};
    out.d1 = {-radius_ * st, radius_ * ct};
    out.d2 = {-radius_ * ct, -radius_ * st};
  }
  return out;
}

Curve ProfileCurve::curve() const {
  ProfileCurve copy = *this;
  return Curve{[copy](double t) { return copy.eval(t); }};
}

void ProfileCurve::validate_containment() const {
  constexpr int kSamples = 4096;
  double max_norm = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double t = -kPi + 2.0 * kPi * i / kSamples;
    max_norm = std::max(max_norm, eval(t).p.norm());
  }
  if (max_norm >= 1.0 - tol::CONTAIN_MARGIN)
    fail(SPHEREX_ERR_NOT_CONTAINED,
         "profile must stay strictly inside the unit circle (max |gamma| = " +
             std::to_string(max_norm) + ")");
}

Vec RevolutionSurface::point(double t, double phi) const {
  const Vec2 p = profile.eval(t).p;
  if (ambient_dim == 2) return Vec(p.x, p.y);
  return Vec(p.x * std::cos(phi), p.x * std::sin(phi), p.y);
}

bool ComponentDecomposition::contains(int index, double t) const {
  const Component& c = components[static_cast<std::size_t>(index)];
  double u = wrap_param(t);
  if (u < c.lo) u += 2.0 * kPi;
  return u > c.lo && u < c.hi;
}

double north_pole_tangency(const Curve& curve, double t) {
  const CurvePoint cp = curve.eval(t);
  return cp.p.cross(cp.d1) + cp.d1.x;
}

Subsphere tangent_line_at(const Curve& curve, double t) {
  const CurvePoint cp = curve.eval(t);
  const double speed = cp.d1.norm();
  if (speed < tol::UNIT_TOL)
    fail(SPHEREX_ERR_DEGENERATE_TANGENT, "tangent undefined: |gamma'| vanishes");
  // in-plane normal of the tangent line
  Vec2 n{-cp.d1.y / speed, cp.d1.x / speed};
  double rho = cp.p.dot(n);
  if (rho < 0.0) {
    n = n * -1.0;
    rho = -rho;
  }
  Subsphere s;
  s.psi = Vec(n.x, n.y);
  s.rho = rho;
  return s;
}

Subsphere tangent_plane_at(const RevolutionSurface& surface, double t, double phi) {
  Subsphere flat = tangent_line_at(surface.profile.curve(), t);
  if (surface.ambient_dim == 2) return flat;
  // revolve the in-plane normal with the point; rho is rotation invariant
  Subsphere s;
  s.psi = Vec(flat.psi[0] * std::cos(phi), flat.psi[0] * std::sin(phi), flat.psi[1]);
  s.rho = flat.rho;
  return s;
}

SingularSet singular_params(const Curve& curve, int scan_points) {
  SingularSet out;
  out.sigma_prime = periodic_roots(
      [&curve](double t) { return north_pole_tangency(curve, t); }, scan_points);
  out.sigma0_extra = periodic_roots(
      [&curve](double t) {
        const CurvePoint cp = curve.eval(t);
        return cp.p.cross(cp.d1);
      },
      scan_points);
  return out;
}

ComponentDecomposition split_components(const Curve& curve, const SingularSet& roots) {
  ComponentDecomposition out;
  out.singular_params = roots.sigma_prime;
  out.sigma0_extra_params = roots.sigma0_extra;

  const auto& r = roots.sigma_prime;
  if (r.empty()) {
    out.components.push_back({-kPi, kPi, false});
  } else {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double lo = r[i];
      const double hi = (i + 1 < r.size()) ? r[i + 1] : r[0] + 2.0 * kPi;
      out.components.push_back({lo, hi, false});
    }
  }

  // top axis crossing: among roots of gamma_1, the one with largest gamma_2
  const auto axis_crossings =
      periodic_roots([&curve](double t) { return curve.eval(t).p.x; }, 4096);
  if (axis_crossings.empty())
    fail(SPHEREX_ERR_NO_AXIS_CROSSING, "profile never meets the symmetry axis");
  double top_param = axis_crossings.front();
  double top_height = curve.eval(top_param).p.y;
  for (double t : axis_crossings) {
    const double h = curve.eval(t).p.y;
    if (h > top_height) {
      top_height = h;
      top_param = t;
    }
  }
  out.upper_index = 0;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    if (out.contains(static_cast<int>(i), top_param)) {
      out.upper_index = static_cast<int>(i);
      break;
    }
  }
  return out;
}

RegularityResult regularity_check(const Curve& curve, double lo, double hi,
                                  int scan_points) {
  RegularityResult out;
  out.regular = true;
  double prev = 0.0;
  for (int i = 0; i < scan_points; ++i) {
    const double t = lo + (hi - lo) * (i + 0.5) / scan_points;
    const CurvePoint cp = curve.eval(t);
    const double e = cp.d1.cross(cp.d2);
    if (i == 0 || std::abs(e) < out.min_abs) {
      out.min_abs = std::abs(e);
      out.witness_param = t;
    }
    if (std::abs(e) <= tol::REG_TOL) out.regular = false;
    if (i > 0 && (prev < 0.0) != (e < 0.0)) {
      out.regular = false;
      // pin the witness to the crossing itself
      const double prev_t = lo + (hi - lo) * (i - 0.5) / scan_points;
      out.witness_param = bisect(
          [&curve](double u) {
            const CurvePoint q = curve.eval(u);
            return q.d1.cross(q.d2);
          },
          prev_t, t);
      out.min_abs = 0.0;
    }
    prev = e;
  }
  return out;
}

CapRegion projection_set(const Curve& curve, const ComponentDecomposition& decomposition) {
  if (decomposition.singular_params.empty())
    fail(SPHEREX_ERR_EMPTY_BOUNDARY,
         "projection set undefined: the singular set is empty");
  const Component& upper =
      decomposition.components[static_cast<std::size_t>(decomposition.upper_index)];
  // Tangent line at a boundary root passes through (0,1); the chord meets the
  // unit circle again at 2*rho*psi - e2. Take the lower of the two heights so
  // the cap sits below the whole cone.
  double height = 1.0;
  for (double boundary : {upper.lo, wrap_param(upper.hi)}) {
    const Subsphere line = tangent_line_at(curve, boundary);
    height = std::min(height, 2.0 * line.rho * line.psi.last() - 1.0);
  }
  if (!(height > -1.0 && height < 1.0))
    fail(SPHEREX_ERR_INVALID_ARGUMENT, "projection set degenerate: cap height " +
                                           std::to_string(height));
  return CapRegion{height, CapRegion::Side::below};
}

ComponentDecomposition decompose(const Curve& curve) {
  ComponentDecomposition d = split_components(curve, singular_params(curve));
  for (auto& comp : d.components)
    comp.regular = regularity_check(curve, comp.lo, comp.hi).regular;
  return d;
}

}  // namespace spherex
