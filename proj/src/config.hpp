#pragma once

#include <string>

#include "surfaces.hpp"
#include "transforms.hpp"

namespace spherex {

// Parses {"ambient_dim": 2|3, "surface": {...}} where the surface object is
// {"kind":"polar_trig_profile","scale":a,"base":b,"amp":c,"freq":k,
//  "phase":p,"vertical_shift":d}
// or
// {"kind":"offset_sphere","lambda":l,"omega":[unit vector],"radius":r}.
// Throws ConfigInvalid with a field/position diagnostic.
RevolutionSurface parse_surface_config(const std::string& json_text);

// Parses a sphere-field description:
// {"kind":"constant","value":v} | {"kind":"coordinate","index":i}
// | {"kind":"cap_bump","center":[...],"radius":s,"amplitude":A}
// | {"kind":"sum","terms":[...]}.
SphereField parse_field_config(const std::string& json_text);

}  // namespace spherex
