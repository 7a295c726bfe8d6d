#pragma once

#include <span>
#include <vector>

#include "sleevesim/fold_geometry.hpp"
#include "sleevesim/stiffness.hpp"

namespace sleevesim {

/// Projected annular areas over which internal pressure acts axially:
/// end cap (A1), external wall (A2), internal wall (A3). All mm^2.
struct ProjectedAreas {
  double cap_a1_mm2;
  double external_a2_mm2;
  double internal_a3_mm2;

  /// A1 + A2 - A3; with pressure in MPa this turns directly into N.
  double effective_mm2() const {
    return cap_a1_mm2 + external_a2_mm2 - internal_a3_mm2;
  }
};

/// Cap annulus: pi (R1o^2 - R1i^2). Requires R1o >= R1i >= 0.
double area_cap(double cap_outer_r_mm, double cap_inner_r_mm);

/// External wall projection: pi (R2i + S cos theta)^2 - pi R2i^2.
double area_external(double external_inner_r_mm, double fold_length_mm,
                     double fold_angle_rad);

/// Internal wall projection: pi (R3i + S cos theta)^2 - pi R3i^2.
double area_internal(double internal_outer_r_mm, double fold_length_mm,
                     double fold_angle_rad);

ProjectedAreas projected_areas(const ActuatorGeometry& geom,
                               const FoldSpec& spec);

/// Quasi-static force balance at one (pressure, displacement) point, with
/// the individual force contributions. Forces in N.
struct StaticState {
  double pressure_mpa;
  double displacement_mm;
  double net_force_n;        // F1 + F2 - F3 - FK
  double cap_force_n;        // F1 = P A1
  double external_force_n;   // F2 = P A2
  double internal_force_n;   // F3 = P A3
  double stiffness_force_n;  // FK(y)
  bool stiffness_extrapolated;
};

/// Net axial force P (A1 + A2 - A3) - FK(y). Pressure must be >= 0: the
/// force balance is derived for the extension regime, and vacuum operation
/// is rejected rather than extrapolated.
StaticState net_force(const ProjectedAreas& areas, const StiffnessCubic& poly,
                      double pressure_mpa, double displacement_mm);

StaticState net_force(const ActuatorGeometry& geom, const FoldSpec& spec,
                      const StiffnessCubic& poly, double pressure_mpa,
                      double displacement_mm);

/// Net force at zero displacement.
double blocked_force(const ProjectedAreas& areas, const StiffnessCubic& poly,
                     double pressure_mpa);

double blocked_force(const ActuatorGeometry& geom, const FoldSpec& spec,
                     const StiffnessCubic& poly, double pressure_mpa);

/// Displacement where the net force reaches zero, found by bisection on
/// [0, bracket_hi_mm] to 1e-9 mm. Requires pressure > 0. Throws
/// NumericalError when the force does not change sign over the bracket.
double max_extension(const ProjectedAreas& areas, const StiffnessCubic& poly,
                     double pressure_mpa, double bracket_hi_mm);

/// Same, with the bracket set to 1.5x the geometric extension stroke.
double max_extension(const ActuatorGeometry& geom, const FoldSpec& spec,
                     const StiffnessCubic& poly, double pressure_mpa);

/// Net force sampled over a displacement grid.
std::vector<StaticState> force_displacement_curve(const ProjectedAreas& areas,
                                                  const StiffnessCubic& poly,
                                                  double pressure_mpa,
                                                  std::span<const double>
                                                      y_grid);

/// Fold angle after the stack has extended by y: each fold opens so its
/// axial height grows by y/N while the fold side length stays S. Used only
/// by the optional area-update mode; the force balance itself holds areas
/// constant.
double fold_angle_at_displacement(const FoldSpec& spec, double y_mm);

/// Projected areas recomputed at displacement y with the opened fold angle.
/// This models the area loss during extension and goes beyond the constant-
/// area force balance; off by default everywhere.
ProjectedAreas projected_areas_at(const ActuatorGeometry& geom,
                                  const FoldSpec& spec, double y_mm);

/// Curve with optional per-point area update (update_areas = true switches
/// the extension mode on).
std::vector<StaticState> force_displacement_curve(
    const ActuatorGeometry& geom, const FoldSpec& spec,
    const StiffnessCubic& poly, double pressure_mpa,
    std::span<const double> y_grid, bool update_areas = false);

}  // namespace sleevesim
