#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace spherex {

// Plane vector used by profile-curve machinery.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
  constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

  constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
  // z-component of the 2D cross product.
  constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
  double norm() const { return std::hypot(x, y); }
  constexpr double squared_norm() const { return x * x + y * y; }
};

// Small ambient vector with runtime dimension 2 or 3 (no allocation).
class Vec {
 public:
  Vec() = default;
  Vec(double x, double y) : v_{x, y, 0.0}, n_(2) {}
  Vec(double x, double y, double z) : v_{x, y, z}, n_(3) {}
  explicit Vec(const Vec2& p) : v_{p.x, p.y, 0.0}, n_(2) {}

  static Vec zero(int dim) {
    Vec v;
    v.n_ = dim;
    return v;
  }
  // Canonical basis vector e_i (0-based).
  static Vec axis(int dim, int i) {
    Vec v = zero(dim);
    v[i] = 1.0;
    return v;
  }

  int dim() const { return n_; }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
  double last() const { return v_[static_cast<std::size_t>(n_ - 1)]; }
  double& last() { return v_[static_cast<std::size_t>(n_ - 1)]; }

  Vec operator+(const Vec& r) const {
    Vec out = *this;
    for (int i = 0; i < n_; ++i) out[i] += r[i];
    return out;
  }
  Vec operator-(const Vec& r) const {
    Vec out = *this;
    for (int i = 0; i < n_; ++i) out[i] -= r[i];
    return out;
  }
  Vec operator*(double s) const {
    Vec out = *this;
    for (int i = 0; i < n_; ++i) out[i] *= s;
    return out;
  }
  friend Vec operator*(double s, const Vec& v) { return v * s; }
  Vec operator-() const { return *this * -1.0; }

  double dot(const Vec& r) const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += v_[static_cast<std::size_t>(i)] * r[i];
    return s;
  }
  double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }

  Vec normalized() const {
    double m = norm();
    return *this * (1.0 / m);
  }

  // Drops the last coordinate.
  Vec projected() const {
    Vec out = zero(n_ - 1);
    for (int i = 0; i + 1 < n_; ++i) out[i] = v_[static_cast<std::size_t>(i)];
    return out;
  }
  // Appends a coordinate.
  Vec lifted(double value) const {
    Vec out = zero(n_ + 1);
    for (int i = 0; i < n_; ++i) out[i] = v_[static_cast<std::size_t>(i)];
    out[n_] = value;
    return out;
  }

  bool all_finite() const {
    for (int i = 0; i < n_; ++i)
      if (!std::isfinite(v_[static_cast<std::size_t>(i)])) return false;
    return true;
  }

 private:
  std::array<double, 3> v_{};
  int n_ = 0;
};

inline Vec cross(const Vec& a, const Vec& b) {
  Vec out = Vec::zero(3);
  out[0] = a[1] * b[2] - a[2] * b[1];
  out[1] = a[2] * b[0] - a[0] * b[2];
  out[2] = a[0] * b[1] - a[1] * b[0];
  return out;
}

}  // namespace spherex
