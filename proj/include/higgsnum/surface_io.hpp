#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "higgsnum/surface_chow.hpp"

namespace higgsnum {

/// Built-in surfaces:
///   "p2"              P², H² = 1, K = −3H, e = 3
///   "hypersurface:d"  smooth degree-d surface in P³: H² = d, K = (d−4)H,
///                     e = d³ − 4d² + 6d
///   "p1xp1"           P¹×P¹ with L = O(1,1)
///   "bl1p2"           P² blown up in a point, basis (H, E), L = 2H − E
SurfaceGeometry preset_surface(std::string_view name);

/// Names of the built-in surfaces that the verification suites iterate over.
std::vector<std::string> verification_presets();

/// Parses the surface JSON schema
///   {"name", "ns_rank", "gram", "canonical", "polarization", "c2_top"}
/// and validates every invariant. Optional "basis_labels".
SurfaceGeometry parse_surface(std::string_view json_text);

/// Loads a preset name or a path to a surface JSON file.
SurfaceGeometry load_surface(const std::string& preset_or_path);

nlohmann::json surface_to_json(const SurfaceGeometry& X);

}  // namespace higgsnum
