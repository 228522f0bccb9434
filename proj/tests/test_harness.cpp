#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "harness.hpp"

using namespace spherex;

namespace {
RevolutionSurface centered_sphere(double r) {
  RevolutionSurface s;
  s.profile = ProfileCurve::offset_circle(0.0, {0.0, 1.0}, r);
  s.ambient_dim = 3;
  return s;
}

std::set<std::string> series_names(const FigureDataset& d) {
  std::set<std::string> names;
  for (const auto& s : d.series) names.insert(s.name);
  return names;
}
}  // namespace

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 7);
  CHECK_THROWS_AS(run_suite("nonsense", SuiteOptions{}), Error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  SuiteOptions options;
  options.seed = 7;
  const auto a = run_suites("lemma21", options);
  const auto b = run_suites("lemma21", options);
  CHECK(report_to_json(a, options.seed) == report_to_json(b, options.seed));
  CHECK(report_summary(a) == report_summary(b));

  SuiteOptions other = options;
  other.seed = 8;
  const auto c = run_suites("lemma21", other);
  CHECK(report_to_json(a, 7) != report_to_json(c, 8));
}

TEST_CASE("tolerance override applies to residual checks only") {
  SuiteOptions options;
  options.seed = 1;
  options.tol_override = 1e-30;  // force residual checks red
  const SuiteResult result = run_suite("lemma21", options);
  CHECK_FALSE(result.overall);
  for (const auto& check : result.checks) {
    if (!check.greater_is_pass) CHECK(check.threshold == 1e-30);
  }
}

TEST_CASE("theorem31 experiment on the canonical configuration") {
  const Theorem31Report report = theorem31_experiment(
      centered_sphere(0.5), SphereField::cap_bump(Vec(0.0, 0.0, -1.0), 0.3, 1e4), 7);
  CHECK(report.precondition_ok);
  CHECK(report.disjointness_margin > 0.5);
  CHECK(report.pass_arm.max_value < 1e-7);
  CHECK(report.pass_arm.max_gradient < 1e-7);
  CHECK(report.fail_arm.max_value > 1e-3);
  CHECK(report.consistent);
  // the JSON report always carries the precondition block
  const std::string json = theorem31_to_json(report);
  CHECK(json.find("disjointness_margin") != std::string::npos);
  CHECK(json.find("precondition") < json.find("pass_arm"));
}

TEST_CASE("theorem31 rejects incompatible fields") {
  CHECK_THROWS_AS(
      theorem31_experiment(centered_sphere(0.5), SphereField::constant(1.0), 0),
      Error);
  // support too close to the north pole
  CHECK_THROWS_AS(
      theorem31_experiment(centered_sphere(0.5),
                           SphereField::cap_bump(Vec(0.0, 0.0, 1.0), 0.3, 1.0), 0),
      Error);
}

TEST_CASE("figure 4 dataset has component and image series per component") {
  const FigureDataset d = emit_figure(4, std::nullopt, 64, 0);
  int components = 0, images = 0;
  for (const auto& s : d.series) {
    if (s.name == "component") ++components;
    if (s.name == "image") ++images;
    for (const auto& p : s.points) CHECK(p.all_finite());
  }
  CHECK(components == 6);
  CHECK(images == 6);
  // the regular component is tagged red on both sides
  int red = 0;
  for (const auto& s : d.series)
    if (s.color == "red") ++red;
  CHECK(red == 2);
}

TEST_CASE("figure 3 dataset carries the projection cap of the default profile") {
  const FigureDataset d = emit_figure(3, std::nullopt, 64, 0);
  const auto names = series_names(d);
  CHECK(names.count("upper_component") == 1);
  CHECK(names.count("projection_set") == 1);
  CHECK(names.count("cone") == 1);
  CHECK(names.count("unit_circle") == 1);
}

TEST_CASE("figure 3 with a centered sphere puts the cap at height 2r^2-1") {
  const FigureDataset d = emit_figure(3, centered_sphere(0.5), 128, 0);
  for (const auto& s : d.series) {
    if (s.name != "projection_set") continue;
    double max_height = -2.0;
    for (const auto& p : s.points) max_height = std::max(max_height, p[1]);
    CHECK(max_height == doctest::Approx(-0.5).epsilon(1e-3));
  }
}

TEST_CASE("figure 5 classifies both partition sides correctly") {
  const FigureDataset d = emit_figure(5, std::nullopt, 256, 3);
  bool saw_interior = false, saw_exterior = false;
  for (const auto& s : d.series) {
    if (s.name == "image_interior") {
      saw_interior = true;
      for (const auto& p : s.points) CHECK(p[1] * p[1] - p[0] * p[0] > 1.0);
    }
    if (s.name == "image_exterior") {
      saw_exterior = true;
      for (const auto& p : s.points) CHECK(p[1] * p[1] - p[0] * p[0] < 1.0);
    }
  }
  CHECK(saw_interior);
  CHECK(saw_exterior);
}

TEST_CASE("figure CSV is deterministic with pinned columns") {
  const FigureDataset d = emit_figure(5, std::nullopt, 32, 9);
  const std::string a = figure_to_csv(d);
  const std::string b = figure_to_csv(emit_figure(5, std::nullopt, 32, 9));
  CHECK(a == b);
  CHECK(a.rfind("series,component,param,x1,x2\n", 0) == 0);
  CHECK(a.find("\r") == std::string::npos);
}

TEST_CASE("component spacelike endpoint") {
  const ComponentSpacelike upper = component_spacelike(centered_sphere(0.5), 0, 64);
  CHECK(upper.regular);
  CHECK(upper.passed);
  CHECK(upper.report.min_defect >= -1e-9);
  CHECK_THROWS_AS(component_spacelike(centered_sphere(0.5), 7, 64), Error);

  // non-regular component of the figure-4 profile reports its witness
  RevolutionSurface fig4;
  fig4.profile = ProfileCurve::polar_trig(0.9, 0.5, 0.2, 3, 3.1, 0.0);
  fig4.ambient_dim = 2;
  const ComponentDecomposition decomposition = decompose(fig4.profile.curve());
  int nonregular = -1;
  for (std::size_t i = 0; i < decomposition.components.size(); ++i)
    if (!decomposition.components[i].regular) nonregular = static_cast<int>(i);
  REQUIRE(nonregular >= 0);
  const ComponentSpacelike bad = component_spacelike(fig4, nonregular, 64);
  CHECK_FALSE(bad.regular);
  CHECK_FALSE(bad.passed);
}

TEST_CASE("singularities JSON names every component") {
  const std::string json = singularities_to_json(centered_sphere(0.5));
  CHECK(json.find("singular_params") != std::string::npos);
  CHECK(json.find("\"upper\": true") != std::string::npos);
}

TEST_CASE("map CSV emits one image series per component") {
  const std::string csv = map_samples_to_csv(centered_sphere(0.5), 16);
  CHECK(csv.rfind("series,component,param,x1,x2,x3\n", 0) == 0);
  CHECK(csv.find("image/") != std::string::npos);
}

TEST_CASE("runtime stays out of the serialized report") {
  SuiteOptions options;
  options.seed = 4;
  const auto results = run_suites("darboux", options);
  CHECK(results.front().runtime_ms > 0.0);
  const std::string json = report_to_json(results, options.seed);
  CHECK(json.find("runtime") == std::string::npos);
}
