// spherex command-line front end. Talks to the shared library exclusively
// through the C API in spherex/spherex.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spherex/spherex.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigInvalid = 2;

int exit_code_for(spherex_status status) {
  return status == SPHEREX_ERR_CONFIG_INVALID ? kExitConfigInvalid : kExitCheckFailure;
}

int report_error(const char* where, spherex_status status) {
  std::cerr << "spherex " << where << ": " << spherex_status_name(status) << ": "
            << spherex_last_error() << "\n";
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const char* data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << data;
  return out.good();
}

struct SurfaceHandle {
  spherex_surface* ptr = nullptr;
  ~SurfaceHandle() { spherex_surface_free(ptr); }
};

struct FieldHandle {
  spherex_field* ptr = nullptr;
  ~FieldHandle() { spherex_field_free(ptr); }
};

struct Buffer {
  char* ptr = nullptr;
  ~Buffer() { spherex_buffer_free(ptr); }
};

// Loads an optional config; returns an exit code on failure, 0 otherwise.
int load_surface(const std::string& path, SurfaceHandle& handle) {
  if (path.empty()) return 0;
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "spherex: cannot read surface config '" << path << "'\n";
    return kExitConfigInvalid;
  }
  const spherex_status status = spherex_surface_parse(text.c_str(), &handle.ptr);
  if (status != SPHEREX_OK) return report_error("surface config", status);
  return 0;
}

int load_field(const std::string& path, FieldHandle& handle) {
  if (path.empty()) return 0;
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "spherex: cannot read field config '" << path << "'\n";
    return kExitConfigInvalid;
  }
  const spherex_status status = spherex_field_parse(text.c_str(), &handle.ptr);
  if (status != SPHEREX_OK) return report_error("field config", status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherex: subsphere geometry, tangent-plane maps, and transform checks"};
  app.require_subcommand(1);

  // verify
  std::string verify_suite, verify_surface, verify_field, verify_out;
  std::uint64_t verify_seed = 0;
  double verify_tol = 0.0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_suite, "suite name or 'all'")->required();
  verify->add_option("--surface", verify_surface, "surface config JSON path");
  verify->add_option("--field", verify_field, "field config JSON path");
  verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--tol", verify_tol, "override tolerance for residual checks");
  verify->add_option("--out", verify_out, "write the JSON report here");

  // map
  std::string map_surface, map_out;
  int map_samples = 256;
  auto* map_cmd = app.add_subcommand("map", "sample the tangent-plane image");
  map_cmd->add_option("--surface", map_surface, "surface config JSON path")->required();
  map_cmd->add_option("--samples", map_samples, "samples per component");
  map_cmd->add_option("--out", map_out, "output CSV path")->required();

  // singularities
  std::string sing_surface;
  auto* sing = app.add_subcommand("singularities", "singular parameters and components");
  sing->add_option("--surface", sing_surface, "surface config JSON path")->required();

  // spacelike
  std::string space_surface;
  int space_component = 0, space_samples = 256;
  auto* space = app.add_subcommand("spacelike", "space-likeness of one component image");
  space->add_option("--surface", space_surface, "surface config JSON path")->required();
  space->add_option("--component", space_component, "component index")->required();
  space->add_option("--samples", space_samples, "sample count");

  // figure
  std::string fig_surface, fig_out;
  int fig_which = 0, fig_resolution = 256;
  std::uint64_t fig_seed = 0;
  auto* figure = app.add_subcommand("figure", "emit figure dataset CSV");
  figure->add_option("--which", fig_which, "figure id (1, 3, 4 or 5)")->required();
  figure->add_option("--surface", fig_surface, "surface config JSON path");
  figure->add_option("--resolution", fig_resolution, "points per series");
  figure->add_option("--seed", fig_seed, "sampling seed (figure 5)");
  figure->add_option("--out", fig_out, "output CSV path")->required();

  // theorem31
  std::string t31_surface, t31_field, t31_out;
  std::uint64_t t31_seed = 0;
  auto* t31 = app.add_subcommand("theorem31", "vanishing-data consistency experiment");
  t31->add_option("--surface", t31_surface, "surface config JSON path")->required();
  t31->add_option("--field", t31_field, "field config JSON path")->required();
  t31->add_option("--seed", t31_seed, "sampling seed");
  t31->add_option("--out", t31_out, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) {
    SurfaceHandle surface;
    FieldHandle field;
    if (int rc = load_surface(verify_surface, surface)) return rc;
    if (int rc = load_field(verify_field, field)) return rc;
    Buffer report, summary;
    int overall = 0;
    const spherex_status status =
        spherex_verify(verify_suite.c_str(), surface.ptr, field.ptr, verify_seed,
                       verify_tol, &report.ptr, &summary.ptr, &overall);
    if (status != SPHEREX_OK) return report_error("verify", status);
    std::cout << summary.ptr;
    if (!verify_out.empty() && !write_file(verify_out, report.ptr)) {
      std::cerr << "spherex: cannot write report to '" << verify_out << "'\n";
      return kExitCheckFailure;
    }
    return overall ? kExitPass : kExitCheckFailure;
  }

  if (map_cmd->parsed()) {
    SurfaceHandle surface;
    if (int rc = load_surface(map_surface, surface)) return rc;
    Buffer csv;
    const spherex_status status = spherex_map_samples(surface.ptr, map_samples, &csv.ptr);
    if (status != SPHEREX_OK) return report_error("map", status);
    if (!write_file(map_out, csv.ptr)) {
      std::cerr << "spherex: cannot write '" << map_out << "'\n";
      return kExitCheckFailure;
    }
    return kExitPass;
  }

  if (sing->parsed()) {
    SurfaceHandle surface;
    if (int rc = load_surface(sing_surface, surface)) return rc;
    Buffer json;
    const spherex_status status = spherex_singularities(surface.ptr, &json.ptr);
    if (status != SPHEREX_OK) return report_error("singularities", status);
    std::cout << json.ptr;
    return kExitPass;
  }

  if (space->parsed()) {
    SurfaceHandle surface;
    if (int rc = load_surface(space_surface, surface)) return rc;
    Buffer json;
    int passed = 0;
    const spherex_status status = spherex_spacelike(surface.ptr, space_component,
                                                    space_samples, &json.ptr, &passed);
    if (status != SPHEREX_OK) return report_error("spacelike", status);
    std::cout << json.ptr;
    return passed ? kExitPass : kExitCheckFailure;
  }

  if (figure->parsed()) {
    SurfaceHandle surface;
    if (int rc = load_surface(fig_surface, surface)) return rc;
    Buffer csv;
    const spherex_status status =
        spherex_figure(fig_which, surface.ptr, fig_resolution, fig_seed, &csv.ptr);
    if (status != SPHEREX_OK) return report_error("figure", status);
    if (!write_file(fig_out, csv.ptr)) {
      std::cerr << "spherex: cannot write '" << fig_out << "'\n";
      return kExitCheckFailure;
    }
    return kExitPass;
  }

  if (t31->parsed()) {
    SurfaceHandle surface;
    FieldHandle field;
    if (int rc = load_surface(t31_surface, surface)) return rc;
    if (int rc = load_field(t31_field, field)) return rc;
    Buffer report;
    int consistent = 0;
    const spherex_status status =
        spherex_theorem31(surface.ptr, field.ptr, t31_seed, &report.ptr, &consistent);
    if (status != SPHEREX_OK) return report_error("theorem31", status);
    std::cout << report.ptr;
    if (!t31_out.empty() && !write_file(t31_out, report.ptr)) {
      std::cerr << "spherex: cannot write report to '" << t31_out << "'\n";
      return kExitCheckFailure;
    }
    return consistent ? kExitPass : kExitCheckFailure;
  }

  return kExitPass;
}
