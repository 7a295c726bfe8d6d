#include "sleevesim/fold_geometry.hpp"

#include <cmath>
#include <string>

#include "sleevesim/errors.hpp"

namespace sleevesim {

namespace {

void check_fold_angle(double angle_deg) {
  if (!(angle_deg > 0.0 && angle_deg < 90.0)) {
    throw ValidationError("fold angle must lie strictly between 0 and 90 "
                          "degrees, got " + std::to_string(angle_deg));
  }
}

}  // namespace

FoldSpec::FoldSpec(double fold_length_mm, double fold_angle_deg,
                   int fold_count)
    : length_mm_(fold_length_mm),
      angle_rad_(deg_to_rad(fold_angle_deg)),
      count_(fold_count) {
  if (!(fold_length_mm > 0.0)) {
    throw ValidationError("fold length must be positive, got " +
                          std::to_string(fold_length_mm));
  }
  check_fold_angle(fold_angle_deg);
  if (fold_count < 1) {
    throw ValidationError("fold count must be at least 1, got " +
                          std::to_string(fold_count));
  }
}

FoldSpec FoldSpec::from_fold_width(double fold_width_mm, double fold_angle_deg,
                                   int fold_count) {
  return FoldSpec(fold_length_from_width(fold_width_mm, fold_angle_deg),
                  fold_angle_deg, fold_count);
}

double fold_length_from_width(double fold_width_mm, double fold_angle_deg) {
  if (!(fold_width_mm > 0.0)) {
    throw ValidationError("fold width must be positive, got " +
                          std::to_string(fold_width_mm));
  }
  check_fold_angle(fold_angle_deg);
  return fold_width_mm / std::cos(deg_to_rad(fold_angle_deg));
}

double extension_single_fold(const FoldSpec& spec) {
  return 2.0 * spec.fold_length_mm() * (1.0 - std::sin(spec.fold_angle_rad()));
}

double extension_total(const FoldSpec& spec) {
  return spec.fold_count() * extension_single_fold(spec);
}

double contraction_total(const FoldSpec& spec) {
  return 2.0 * spec.fold_length_mm() * std::sin(spec.fold_angle_rad()) *
         spec.fold_count();
}

double rest_height(const FoldSpec& spec) { return contraction_total(spec); }

int estimate_fold_count(double actuator_length_mm, const FoldSpec& spec) {
  if (!(actuator_length_mm > 0.0)) {
    throw ValidationError("actuator length must be positive, got " +
                          std::to_string(actuator_length_mm));
  }
  const double pitch =
      2.0 * spec.fold_length_mm() * std::sin(spec.fold_angle_rad());
  if (pitch > actuator_length_mm) {
    throw ValidationError("fold pitch " + std::to_string(pitch) +
                          " mm exceeds actuator length " +
                          std::to_string(actuator_length_mm) + " mm");
  }
  const int count = static_cast<int>(std::floor(actuator_length_mm / pitch));
  return count < 1 ? 1 : count;
}

double curvature_radius(double constrained_length_mm, int fold_count,
                        double delta_single_mm, double sleeve_radius_mm,
                        double offset_mm) {
  if (fold_count < 1) {
    throw ValidationError("fold count must be at least 1");
  }
  if (delta_single_mm == 0.0) {
    throw ValidationError("zero single-fold extension: actuator is straight, "
                          "curvature radius undefined");
  }
  if (!(delta_single_mm > 0.0)) {
    throw ValidationError("single-fold extension must be nonnegative");
  }
  return constrained_length_mm * (sleeve_radius_mm + offset_mm) /
         (fold_count * delta_single_mm);
}

double bend_angle_outer(double delta_single_mm, double curvature_radius_mm,
                        double sleeve_radius_mm, double offset_mm,
                        int fold_count) {
  return rad_to_deg(fold_count * delta_single_mm /
                    (curvature_radius_mm + sleeve_radius_mm + offset_mm));
}

double bend_angle_consistent(double delta_single_mm, double sleeve_radius_mm,
                             double offset_mm, int fold_count) {
  return rad_to_deg(fold_count * delta_single_mm /
                    (sleeve_radius_mm + offset_mm));
}

BendGeometry::BendGeometry(double constrained_length_mm, double offset_mm,
                           double curvature_radius_mm, double bend_angle_deg)
    : length_mm_(constrained_length_mm),
      offset_mm_(offset_mm),
      rho_mm_(curvature_radius_mm),
      angle_deg_(bend_angle_deg) {
  if (!(curvature_radius_mm > 0.0)) {
    throw ValidationError("curvature radius must be positive");
  }
  if (bend_angle_deg < 0.0) {
    throw ValidationError("bend angle must be nonnegative");
  }
}

double BendGeometry::arc_residual_mm() const {
  return std::abs(rho_mm_ * deg_to_rad(angle_deg_) - length_mm_);
}

BendAnalysis analyze_bending(const FoldSpec& spec, double constrained_length_mm,
                             double sleeve_radius_mm, double offset_mm) {
  BendAnalysis out;
  out.single_fold_extension_mm = extension_single_fold(spec);
  if (out.single_fold_extension_mm == 0.0) {
    out.straight = true;
    return out;
  }
  const double rho =
      curvature_radius(constrained_length_mm, spec.fold_count(),
                       out.single_fold_extension_mm, sleeve_radius_mm,
                       offset_mm);
  out.curvature_radius_mm = rho;
  out.angle_outer_deg =
      bend_angle_outer(out.single_fold_extension_mm, rho, sleeve_radius_mm,
                       offset_mm, spec.fold_count());
  out.angle_consistent_deg = bend_angle_consistent(
      out.single_fold_extension_mm, sleeve_radius_mm, offset_mm,
      spec.fold_count());
  out.arc_residual_mm =
      std::abs(rho * deg_to_rad(out.angle_outer_deg) - constrained_length_mm);
  return out;
}

WallRadii derive_wall_radii(double sleeve_radius_mm, double wall_thickness_mm,
                            double radial_gap_mm) {
  if (!(sleeve_radius_mm > 0.0) || !(wall_thickness_mm > 0.0) ||
      radial_gap_mm < 0.0) {
    throw ValidationError("sleeve radius and wall thickness must be positive "
                          "and the radial gap nonnegative");
  }
  if (wall_thickness_mm >= sleeve_radius_mm) {
    throw ValidationError("wall thickness must be smaller than the sleeve "
                          "radius");
  }
  WallRadii radii;
  radii.cap_inner_r1i = sleeve_radius_mm;
  radii.external_inner_r2i = sleeve_radius_mm + radial_gap_mm;
  radii.cap_outer_r1o = radii.external_inner_r2i + wall_thickness_mm;
  radii.internal_outer_r3i = sleeve_radius_mm - wall_thickness_mm;
  return radii;
}

ActuatorGeometry::ActuatorGeometry(
    double sleeve_radius_mm, double actuator_length_mm, double fold_width_mm,
    double fold_angle_deg, double restraining_thickness_mm,
    int restraining_count, double wall_thickness_mm,
    double constraining_thickness_mm, double shore_hardness, WallRadii radii)
    : sleeve_radius_mm_(sleeve_radius_mm),
      actuator_length_mm_(actuator_length_mm),
      fold_width_mm_(fold_width_mm),
      fold_angle_rad_(deg_to_rad(fold_angle_deg)),
      restraining_thickness_mm_(restraining_thickness_mm),
      restraining_count_(restraining_count),
      wall_thickness_mm_(wall_thickness_mm),
      constraining_thickness_mm_(constraining_thickness_mm),
      shore_hardness_(shore_hardness),
      radii_(radii) {
  if (!(sleeve_radius_mm > 0.0) || !(actuator_length_mm > 0.0) ||
      !(fold_width_mm > 0.0) || !(restraining_thickness_mm > 0.0) ||
      !(wall_thickness_mm > 0.0) || !(constraining_thickness_mm > 0.0)) {
    throw ValidationError("all geometry lengths must be positive");
  }
  check_fold_angle(fold_angle_deg);
  if (restraining_count < 0) {
    throw ValidationError("restraining layer count must be nonnegative");
  }
  if (!(radii.cap_outer_r1o > radii.cap_inner_r1i)) {
    throw ValidationError("cap outer radius must exceed cap inner radius");
  }
  if (!(radii.internal_outer_r3i <= radii.cap_inner_r1i &&
        radii.cap_inner_r1i <= radii.external_inner_r2i &&
        radii.external_inner_r2i <= radii.cap_outer_r1o)) {
    throw ValidationError("wall radii must be ordered R3i <= R1i <= R2i <= "
                          "R1o");
  }
  if (!(radii.internal_outer_r3i > 0.0)) {
    throw ValidationError("internal wall outer radius must be positive");
  }
}

bool ActuatorGeometry::nonstandard_shore_hardness() const {
  return shore_hardness_ != 85.0 && shore_hardness_ != 95.0;
}

FoldSpec ActuatorGeometry::fold_spec(
    std::optional<int> fold_count_override,
    std::optional<double> fold_length_override_mm) const {
  const double angle_deg = fold_angle_deg();
  const double length =
      fold_length_override_mm.value_or(
          fold_length_from_width(fold_width_mm_, angle_deg));
  if (fold_count_override) {
    return FoldSpec(length, angle_deg, *fold_count_override);
  }
  const FoldSpec one_fold(length, angle_deg, 1);
  return one_fold.with_fold_count(
      estimate_fold_count(actuator_length_mm_, one_fold));
}

}  // namespace sleevesim
