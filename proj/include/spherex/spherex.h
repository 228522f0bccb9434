#ifndef SPHEREX_SPHEREX_H
#define SPHEREX_SPHEREX_H

/* spherex C API.
 *
 * Geometry of subspheres of the unit sphere under stereographic projection,
 * tangent-plane maps of contained surfaces of revolution, spherical and
 * spherical-mean transforms, plus the bundled verification suites.
 *
 * All functions return a spherex_status. On failure the thread-local message
 * from spherex_last_error() describes the problem. Out-strings are allocated
 * by the library and must be released with spherex_buffer_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SPHEREX_API __declspec(dllexport)
#else
#define SPHEREX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spherex_status {
  SPHEREX_OK = 0,
  SPHEREX_ERR_INVALID_ARGUMENT,
  SPHEREX_ERR_CONFIG_INVALID,
  SPHEREX_ERR_NOT_ON_SPHERE,
  SPHEREX_ERR_NORTH_POLE_SINGULAR,
  SPHEREX_ERR_PASSES_THROUGH_NORTH_POLE,
  SPHEREX_ERR_DEGENERATE_TANGENT,
  SPHEREX_ERR_NO_AXIS_CROSSING,
  SPHEREX_ERR_EMPTY_BOUNDARY,
  SPHEREX_ERR_ON_SIGMA0,
  SPHEREX_ERR_ON_SINGULAR_SET,
  SPHEREX_ERR_ORIGIN_UNDEFINED,
  SPHEREX_ERR_ON_S0,
  SPHEREX_ERR_DENOMINATOR_VANISHES,
  SPHEREX_ERR_NOT_REGULAR,
  SPHEREX_ERR_DOMAIN_CLIP,
  SPHEREX_ERR_NOT_CONTAINED,
  SPHEREX_ERR_PRECONDITION_UNMET,
  SPHEREX_ERR_UNKNOWN
} spherex_status;

/* Opaque handles. */
typedef struct spherex_surface spherex_surface;
typedef struct spherex_field spherex_field;

SPHEREX_API const char* spherex_status_name(spherex_status status);

/* Thread-local message for the most recent failure on this thread. The
 * pointer stays valid until the next failing call on the same thread. */
SPHEREX_API const char* spherex_last_error(void);

SPHEREX_API void spherex_buffer_free(char* buffer);

/* ---- configuration objects ------------------------------------------- */

/* Parse a surface description:
 *   {"ambient_dim": 2|3, "surface": {"kind": "polar_trig_profile", ...}
 *                                 | {"kind": "offset_sphere", ...}}
 */
SPHEREX_API spherex_status spherex_surface_parse(const char* json_text,
                                                 spherex_surface** out);
SPHEREX_API void spherex_surface_free(spherex_surface* surface);

/* Parse a scalar field on the unit sphere:
 *   {"kind":"constant","value":v} | {"kind":"coordinate","index":i}
 * | {"kind":"cap_bump","center":[...],"radius":s,"amplitude":A}
 * | {"kind":"sum","terms":[...]}
 */
SPHEREX_API spherex_status spherex_field_parse(const char* json_text,
                                               spherex_field** out);
SPHEREX_API void spherex_field_free(spherex_field* field);

/* ---- direct maps ------------------------------------------------------ */
/* ambient_dim is the dimension of the ambient space (2 or 3); points on the
 * unit sphere have ambient_dim coordinates, projected points one fewer. */

SPHEREX_API spherex_status spherex_stereo_forward(int ambient_dim,
                                                  const double* x,
                                                  double* y_out);
SPHEREX_API spherex_status spherex_stereo_inverse(int ambient_dim,
                                                  const double* y,
                                                  double* x_out);

/* Projected image of the subsphere cut out by the plane {x . psi = rho}. */
SPHEREX_API spherex_status spherex_subsphere_image(int ambient_dim,
                                                   const double* psi,
                                                   double rho,
                                                   double* center_out,
                                                   double* radius_out);

/* Sphere assigned to a tangent-plane foot point strictly inside the unit
 * ball, and the Jacobian determinant of that map. */
SPHEREX_API spherex_status spherex_sphere_from_foot(int ambient_dim,
                                                    const double* y,
                                                    double* center_out,
                                                    double* radius_out);
SPHEREX_API spherex_status spherex_sphere_from_foot_jacobian(int ambient_dim,
                                                             const double* y,
                                                             double* det_out);

/* ---- operational surface ---------------------------------------------- */

/* Run a verification suite: one of
 *   lemma21 | relation22 | example38 | theorem36 | darboux | jacobian
 * | theorem31 | all
 * surface/field may be NULL; suites then use their built-in canonical
 * configurations. tol_override <= 0 leaves the pinned tolerances in place.
 * report_json/summary_text are optional (pass NULL to skip). */
SPHEREX_API spherex_status spherex_verify(const char* suite,
                                          const spherex_surface* surface,
                                          const spherex_field* field,
                                          uint64_t seed,
                                          double tol_override,
                                          char** report_json,
                                          char** summary_text,
                                          int* overall_pass);

/* Vanishing-data consistency experiment (pass and fail arms). */
SPHEREX_API spherex_status spherex_theorem31(const spherex_surface* surface,
                                             const spherex_field* field,
                                             uint64_t seed,
                                             char** report_json,
                                             int* consistent);

/* Figure datasets (which in {1,3,4,5}) as CSV. surface may be NULL to use
 * the figure's default profile. */
SPHEREX_API spherex_status spherex_figure(int which,
                                          const spherex_surface* surface,
                                          int resolution,
                                          uint64_t seed,
                                          char** csv_out);

/* Singular parameter sets and component decomposition as JSON. */
SPHEREX_API spherex_status spherex_singularities(const spherex_surface* surface,
                                                 char** json_out);

/* Space-likeness report for the image of one decomposition component. */
SPHEREX_API spherex_status spherex_spacelike(const spherex_surface* surface,
                                             int component,
                                             int samples,
                                             char** json_out,
                                             int* passed);

/* Tangent-plane image samples over all components as CSV. */
SPHEREX_API spherex_status spherex_map_samples(const spherex_surface* surface,
                                               int samples,
                                               char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* SPHEREX_SPHEREX_H */
