#include "config.hpp"

#include <cmath>

#include "json.hpp"

namespace spherex {

namespace {
using nlohmann::json;

[[noreturn]] void config_fail(const std::string& where, const std::string& what) {
  fail(SPHEREX_ERR_CONFIG_INVALID, where + ": " + what);
}

double require_number(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) config_fail(where, std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) config_fail(where + "." + key, "expected a number");
  return v.get<double>();
}

int require_int(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) config_fail(where, std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) config_fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

std::vector<double> require_vector(const json& obj, const std::string& where,
                                   const char* key) {
  if (!obj.contains(key)) config_fail(where, std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_array() || v.empty()) config_fail(where + "." + key, "expected a numeric array");
  std::vector<double> out;
  for (const auto& item : v) {
    if (!item.is_number()) config_fail(where + "." + key, "expected a numeric array");
    out.push_back(item.get<double>());
  }
  return out;
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    config_fail(what, e.what());
  }
}

SphereField parse_field_object(const json& obj, const std::string& where);

SphereField parse_field_object(const json& obj, const std::string& where) {
  if (!obj.is_object()) config_fail(where, "expected an object");
  if (!obj.contains("kind")) config_fail(where, "missing field 'kind'");
  const std::string kind = obj.at("kind").get<std::string>();
  if (kind == "constant") {
    return SphereField::constant(require_number(obj, where, "value"));
  }
  if (kind == "coordinate") {
    return SphereField::coordinate(require_int(obj, where, "index"));
  }
  if (kind == "cap_bump") {
    const auto center = require_vector(obj, where, "center");
    if (center.size() != 2 && center.size() != 3)
      config_fail(where + ".center", "expected 2 or 3 coordinates");
    Vec c = center.size() == 2 ? Vec(center[0], center[1])
                               : Vec(center[0], center[1], center[2]);
    return SphereField::cap_bump(c, require_number(obj, where, "radius"),
                                 require_number(obj, where, "amplitude"));
  }
  if (kind == "sum") {
    if (!obj.contains("terms") || !obj.at("terms").is_array())
      config_fail(where, "missing array field 'terms'");
    std::vector<SphereField> terms;
    int i = 0;
    for (const auto& term : obj.at("terms"))
      terms.push_back(parse_field_object(term, where + ".terms[" + std::to_string(i++) + "]"));
    return SphereField::sum(std::move(terms));
  }
  config_fail(where + ".kind", "unknown field kind '" + kind + "'");
}
}  // namespace

RevolutionSurface parse_surface_config(const std::string& json_text) {
  const json root = parse_json(json_text, "surface config");
  if (!root.is_object()) config_fail("surface config", "expected a JSON object");
  const int ambient = require_int(root, "surface config", "ambient_dim");
  if (ambient != 2 && ambient != 3)
    config_fail("surface config.ambient_dim", "must be 2 or 3");
  if (!root.contains("surface") || !root.at("surface").is_object())
    config_fail("surface config", "missing object field 'surface'");
  const json& s = root.at("surface");
  if (!s.contains("kind")) config_fail("surface config.surface", "missing field 'kind'");
  const std::string kind = s.at("kind").get<std::string>();

  RevolutionSurface surface;
  surface.ambient_dim = ambient;
  if (kind == "polar_trig_profile") {
    surface.profile = ProfileCurve::polar_trig(
        require_number(s, "surface", "scale"), require_number(s, "surface", "base"),
        require_number(s, "surface", "amp"), require_int(s, "surface", "freq"),
        require_number(s, "surface", "phase"),
        require_number(s, "surface", "vertical_shift"));
    return surface;
  }
  if (kind == "offset_sphere") {
    const double lambda = require_number(s, "surface", "lambda");
    const double radius = require_number(s, "surface", "radius");
    const auto omega = require_vector(s, "surface", "omega");
    Vec2 omega2;
    if (omega.size() == 2) {
      omega2 = {omega[0], omega[1]};
    } else if (omega.size() == 3) {
      // Revolving requires the center on the axis: fold (0,0,w) to the
      // in-plane direction (0,w).
      if (lambda > 0.0 && (std::abs(omega[0]) > 1e-12 || std::abs(omega[1]) > 1e-12))
        config_fail("surface.omega",
                    "ambient_dim 3 offset_sphere must have omega on the axis "
                    "(or lambda = 0)");
      omega2 = {0.0, omega[2]};
      if (lambda == 0.0) omega2 = {0.0, 1.0};
    } else {
      config_fail("surface.omega", "expected 2 or 3 coordinates");
    }
    if (ambient == 2 && omega.size() == 3)
      config_fail("surface.omega", "ambient_dim 2 expects a 2D omega");
    surface.profile = ProfileCurve::offset_circle(lambda, omega2, radius);
    return surface;
  }
  config_fail("surface config.surface.kind", "unknown surface kind '" + kind + "'");
}

SphereField parse_field_config(const std::string& json_text) {
  const json root = parse_json(json_text, "field config");
  return parse_field_object(root, "field config");
}

}  // namespace spherex
