#pragma once

// Central tolerance constants. Tests and library code share these so a
// tolerance change happens in exactly one place.
namespace spherex::tol {

inline constexpr double GEOM_TOL = 1e-10;     // on-sphere / on-plane residuals
inline constexpr double QUAD_RELTOL = 1e-6;   // quadrature cross-check, family-relative
inline constexpr double UNIT_TOL = 1e-12;     // unit-norm and denominator guards
inline constexpr double REG_TOL = 1e-9;       // regularity expression threshold
inline constexpr double ROOT_TOL = 1e-12;     // bisection interval width
inline constexpr double CONTAIN_MARGIN = 1e-6;  // profile strictly inside the unit ball
inline constexpr double C0_MARGIN = 0.05;     // support clearance from the north pole

inline constexpr int DEFAULT_NODES = 512;
inline constexpr double DEFAULT_FD_STEP = 1e-4;   // transform gradient step
inline constexpr double JACOBIAN_FD_STEP = 1e-5;  // map Jacobian step
inline constexpr double TANGENT_FD_STEP = 1e-6;   // image tangent step

}  // namespace spherex::tol
