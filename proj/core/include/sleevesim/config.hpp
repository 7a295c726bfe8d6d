#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sleevesim/fold_geometry.hpp"
#include "sleevesim/pid.hpp"
#include "sleevesim/plant.hpp"
#include "sleevesim/statics.hpp"
#include "sleevesim/stiffness.hpp"

namespace sleevesim {

/// Plant constants that live in the config file; the effective area comes
/// from the geometry instead (see make_plant_params).
struct PlantConfig {
  double mass_kg;
  double damping_n_s_per_mm;
  double pressure_max_mpa;
  std::optional<PressureLag> lag;
};

/// One actuator configuration: geometry plus optional stiffness calibration,
/// plant constants, and controller gains. Everything is stored in internal
/// units (mm, MPa, radians, N, s); the JSON boundary speaks mm, kPa, degrees.
struct GeometryConfig {
  ActuatorGeometry geometry;
  std::optional<int> fold_count;
  std::optional<double> fold_length_mm;
  std::optional<StiffnessCubic> stiffness;
  std::optional<PlantConfig> plant;
  std::optional<PidGains> pid;
  /// True when the file spelled out the wall radii; false when they were
  /// derived from sleeve radius, wall thickness, and radial gap.
  bool explicit_radii = false;
  double radial_gap_mm = 0.0;
  /// Policy notices collected while loading (out-of-tested-range fold angle,
  /// nonstandard shore hardness, unknown keys in lenient mode, ...).
  std::vector<std::string> warnings;

  /// FoldSpec honoring the optional fold_count / fold_length overrides.
  FoldSpec fold_spec() const {
    return geometry.fold_spec(fold_count, fold_length_mm);
  }
};

/// Parse and validate a JSON config. In strict mode unknown keys are errors;
/// in lenient mode they become warnings. Validation errors name the
/// offending field.
GeometryConfig load_geometry_config(const std::string& path,
                                    bool strict = true);
GeometryConfig parse_geometry_config(std::istream& in, bool strict = true);

/// Serialize back to the boundary units. Unit conversions invert exactly
/// (to rounding), so load -> save -> load is stable.
void save_geometry_config(const GeometryConfig& config, std::ostream& out);

/// Plant parameters assembled from the config: mass, damping, and limits
/// from the plant block, stiffness from the stiffness block, effective area
/// from the geometry's projected areas. Throws ValidationError when the
/// plant or stiffness block is missing.
PlantParams make_plant_params(const GeometryConfig& config);

}  // namespace sleevesim
