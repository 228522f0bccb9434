#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surface_maps.hpp"
#include "surfaces.hpp"
#include "transforms.hpp"

namespace spherex {

// One quantitative check: pass when value <= threshold, or value >= threshold
// for checks where larger is better (convergence orders, violation floors).
struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool greater_is_pass = false;
  bool passed = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool overall = false;
  double runtime_ms = 0.0;  // reported on stderr/stdout only, never serialized
};

struct SuiteOptions {
  std::optional<RevolutionSurface> surface;
  std::optional<SphereField> field;
  std::uint64_t seed = 0;
  double tol_override = 0.0;  // > 0 replaces thresholds of "<=" checks
};

// Known suite names: lemma21, relation22, example38, theorem36, darboux,
// jacobian, theorem31. "all" expands to the full list.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);
std::vector<SuiteResult> run_suites(const std::string& name_or_all,
                                    const SuiteOptions& options);

struct Theorem31Report {
  bool precondition_ok = false;
  double disjointness_margin = 0.0;  // min node clearance from the support
  VanishingReport pass_arm;
  double pass_tolerance = 1e-7;
  VanishingReport fail_arm;
  double fail_floor = 1e-3;
  bool consistent = false;
};

// Two-arm consistency experiment: a field supported inside the projection
// set (disjoint from every sampled tangent subsphere) must produce vanishing
// data; moving the support onto a tangent subsphere must not.
Theorem31Report theorem31_experiment(const RevolutionSurface& surface,
                                     const SphereField& field, std::uint64_t seed);

struct FigureSeries {
  std::string name;
  int component = 0;
  std::string color;
  std::vector<double> params;
  std::vector<Vec> points;
};

struct FigureDataset {
  int figure_id = 0;
  std::vector<FigureSeries> series;
};

// Figure datasets 1, 3, 4, 5. surface may be empty to use the per-figure
// default profile; figure 5 ignores the surface.
FigureDataset emit_figure(int which, const std::optional<RevolutionSurface>& surface,
                          int resolution, std::uint64_t seed);

// Space-likeness report for one component's tangent-plane image.
struct ComponentSpacelike {
  int component = 0;
  bool regular = false;
  double regularity_witness = 0.0;
  SpacelikeReport report;
  bool passed = false;
};
ComponentSpacelike component_spacelike(const RevolutionSurface& surface, int component,
                                       int samples);

// ---- serialization ------------------------------------------------------
// All emitters are deterministic: fixed key order, 17 significant digits in
// CSV, no timestamps.

std::string report_to_json(const std::vector<SuiteResult>& results, std::uint64_t seed);
std::string report_summary(const std::vector<SuiteResult>& results);
std::string theorem31_to_json(const Theorem31Report& report);
std::string figure_to_csv(const FigureDataset& dataset);
std::string singularities_to_json(const RevolutionSurface& surface);
std::string spacelike_to_json(const ComponentSpacelike& result);
std::string map_samples_to_csv(const RevolutionSurface& surface, int samples);

bool report_overall(const std::vector<SuiteResult>& results);

}  // namespace spherex
