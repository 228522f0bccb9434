#include "spherex/spherex.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "harness.hpp"
#include "surface_maps.hpp"

namespace {

thread_local std::string g_last_error;

spherex_status capture(const std::exception& e, spherex_status code) {
  g_last_error = e.what();
  return code;
}

template <typename Fn>
spherex_status guarded(Fn&& fn) {
  try {
    fn();
    return SPHEREX_OK;
  } catch (const spherex::Error& e) {
    return capture(e, e.code());
  } catch (const std::exception& e) {
    return capture(e, SPHEREX_ERR_UNKNOWN);
  } catch (...) {
    g_last_error = "unknown error";
    return SPHEREX_ERR_UNKNOWN;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

spherex::Vec make_vec(int dim, const double* data) {
  if (dim == 2) return spherex::Vec(data[0], data[1]);
  if (dim == 3) return spherex::Vec(data[0], data[1], data[2]);
  spherex::fail(SPHEREX_ERR_INVALID_ARGUMENT, "ambient_dim must be 2 or 3");
}

void require(bool ok, const char* what) {
  if (!ok) spherex::fail(SPHEREX_ERR_INVALID_ARGUMENT, what);
}

}  // namespace

struct spherex_surface {
  spherex::RevolutionSurface surface;
};

struct spherex_field {
  spherex::SphereField field;
};

extern "C" {

const char* spherex_status_name(spherex_status status) {
  switch (status) {
    case SPHEREX_OK: return "ok";
    case SPHEREX_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SPHEREX_ERR_CONFIG_INVALID: return "config_invalid";
    case SPHEREX_ERR_NOT_ON_SPHERE: return "not_on_sphere";
    case SPHEREX_ERR_NORTH_POLE_SINGULAR: return "north_pole_singular";
    case SPHEREX_ERR_PASSES_THROUGH_NORTH_POLE: return "passes_through_north_pole";
    case SPHEREX_ERR_DEGENERATE_TANGENT: return "degenerate_tangent";
    case SPHEREX_ERR_NO_AXIS_CROSSING: return "no_axis_crossing";
    case SPHEREX_ERR_EMPTY_BOUNDARY: return "empty_boundary";
    case SPHEREX_ERR_ON_SIGMA0: return "on_sigma0";
    case SPHEREX_ERR_ON_SINGULAR_SET: return "on_singular_set";
    case SPHEREX_ERR_ORIGIN_UNDEFINED: return "origin_undefined";
    case SPHEREX_ERR_ON_S0: return "on_critical_sphere";
    case SPHEREX_ERR_DENOMINATOR_VANISHES: return "denominator_vanishes";
    case SPHEREX_ERR_NOT_REGULAR: return "not_regular";
    case SPHEREX_ERR_DOMAIN_CLIP: return "domain_clip";
    case SPHEREX_ERR_NOT_CONTAINED: return "not_contained";
    case SPHEREX_ERR_PRECONDITION_UNMET: return "precondition_unmet";
    case SPHEREX_ERR_UNKNOWN: return "unknown";
  }
  return "unknown";
}

const char* spherex_last_error(void) { return g_last_error.c_str(); }

void spherex_buffer_free(char* buffer) { std::free(buffer); }

spherex_status spherex_surface_parse(const char* json_text, spherex_surface** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    auto parsed = spherex::parse_surface_config(json_text);
    *out = new spherex_surface{std::move(parsed)};
  });
}

void spherex_surface_free(spherex_surface* surface) { delete surface; }

spherex_status spherex_field_parse(const char* json_text, spherex_field** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    auto parsed = spherex::parse_field_config(json_text);
    *out = new spherex_field{std::move(parsed)};
  });
}

void spherex_field_free(spherex_field* field) { delete field; }

spherex_status spherex_stereo_forward(int ambient_dim, const double* x, double* y_out) {
  return guarded([&] {
    require(x != nullptr && y_out != nullptr, "null argument");
    const spherex::Vec y = spherex::stereo_forward(make_vec(ambient_dim, x));
    for (int i = 0; i < y.dim(); ++i) y_out[i] = y[i];
  });
}

spherex_status spherex_stereo_inverse(int ambient_dim, const double* y, double* x_out) {
  return guarded([&] {
    require(y != nullptr && x_out != nullptr, "null argument");
    require(ambient_dim == 2 || ambient_dim == 3, "ambient_dim must be 2 or 3");
    spherex::Vec plane = spherex::Vec::zero(ambient_dim - 1);
    for (int i = 0; i + 1 < ambient_dim; ++i) plane[i] = y[i];
    const spherex::Vec x = spherex::stereo_inverse(plane);
    for (int i = 0; i < x.dim(); ++i) x_out[i] = x[i];
  });
}

spherex_status spherex_subsphere_image(int ambient_dim, const double* psi, double rho,
                                       double* center_out, double* radius_out) {
  return guarded([&] {
    require(psi != nullptr && center_out != nullptr && radius_out != nullptr,
            "null argument");
    const auto sub = spherex::Subsphere::make(make_vec(ambient_dim, psi), rho);
    const spherex::Sphere image = spherex::subsphere_image(sub);
    for (int i = 0; i < image.center.dim(); ++i) center_out[i] = image.center[i];
    *radius_out = image.radius;
  });
}

spherex_status spherex_sphere_from_foot(int ambient_dim, const double* y,
                                        double* center_out, double* radius_out) {
  return guarded([&] {
    require(y != nullptr && center_out != nullptr && radius_out != nullptr,
            "null argument");
    const spherex::Sphere image = spherex::sphere_from_foot(make_vec(ambient_dim, y));
    for (int i = 0; i < image.center.dim(); ++i) center_out[i] = image.center[i];
    *radius_out = image.radius;
  });
}

spherex_status spherex_sphere_from_foot_jacobian(int ambient_dim, const double* y,
                                                 double* det_out) {
  return guarded([&] {
    require(y != nullptr && det_out != nullptr, "null argument");
    *det_out = spherex::sphere_from_foot_jacobian(make_vec(ambient_dim, y));
  });
}

spherex_status spherex_verify(const char* suite, const spherex_surface* surface,
                              const spherex_field* field, uint64_t seed,
                              double tol_override, char** report_json,
                              char** summary_text, int* overall_pass) {
  return guarded([&] {
    require(suite != nullptr, "null suite name");
    spherex::SuiteOptions options;
    if (surface) options.surface = surface->surface;
    if (field) options.field = field->field;
    options.seed = seed;
    options.tol_override = tol_override;
    const auto results = spherex::run_suites(suite, options);
    if (report_json) *report_json = copy_string(spherex::report_to_json(results, seed));
    if (summary_text) *summary_text = copy_string(spherex::report_summary(results));
    if (overall_pass) *overall_pass = spherex::report_overall(results) ? 1 : 0;
  });
}

spherex_status spherex_theorem31(const spherex_surface* surface,
                                 const spherex_field* field, uint64_t seed,
                                 char** report_json, int* consistent) {
  return guarded([&] {
    require(surface != nullptr && field != nullptr, "null argument");
    const auto report =
        spherex::theorem31_experiment(surface->surface, field->field, seed);
    if (report_json) *report_json = copy_string(spherex::theorem31_to_json(report));
    if (consistent) *consistent = report.consistent ? 1 : 0;
  });
}

spherex_status spherex_figure(int which, const spherex_surface* surface, int resolution,
                              uint64_t seed, char** csv_out) {
  return guarded([&] {
    require(csv_out != nullptr, "null argument");
    std::optional<spherex::RevolutionSurface> surf;
    if (surface) surf = surface->surface;
    const auto dataset = spherex::emit_figure(which, surf, resolution, seed);
    *csv_out = copy_string(spherex::figure_to_csv(dataset));
  });
}

spherex_status spherex_singularities(const spherex_surface* surface, char** json_out) {
  return guarded([&] {
    require(surface != nullptr && json_out != nullptr, "null argument");
    *json_out = copy_string(spherex::singularities_to_json(surface->surface));
  });
}

spherex_status spherex_spacelike(const spherex_surface* surface, int component,
                                 int samples, char** json_out, int* passed) {
  return guarded([&] {
    require(surface != nullptr, "null argument");
    const auto result =
        spherex::component_spacelike(surface->surface, component, samples);
    if (json_out) *json_out = copy_string(spherex::spacelike_to_json(result));
    if (passed) *passed = result.passed ? 1 : 0;
  });
}

spherex_status spherex_map_samples(const spherex_surface* surface, int samples,
                                   char** csv_out) {
  return guarded([&] {
    require(surface != nullptr && csv_out != nullptr, "null argument");
    *csv_out = copy_string(spherex::map_samples_to_csv(surface->surface, samples));
  });
}

}  // extern "C"
