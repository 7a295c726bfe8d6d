#pragma once

#include <optional>

namespace sleevesim {

inline constexpr double kPi = 3.14159265358979323846;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// One bellows fold: side length S, inclination angle theta, and the number
/// of folds N stacked along the actuator.
class FoldSpec {
 public:
  /// Direct construction from the fold side length S.
  /// Requires S > 0, 0 < angle < 90 degrees, N >= 1.
  FoldSpec(double fold_length_mm, double fold_angle_deg, int fold_count);

  /// Conversion from the horizontal peak-to-valley fold width:
  /// S = fw / cos(theta).
  static FoldSpec from_fold_width(double fold_width_mm, double fold_angle_deg,
                                  int fold_count);

  double fold_length_mm() const { return length_mm_; }
  double fold_angle_rad() const { return angle_rad_; }
  double fold_angle_deg() const { return rad_to_deg(angle_rad_); }
  int fold_count() const { return count_; }

  FoldSpec with_fold_count(int fold_count) const {
    return FoldSpec(length_mm_, fold_angle_deg(), fold_count);
  }

 private:
  double length_mm_;
  double angle_rad_;
  int count_;
};

/// S = fw / cos(angle). Throws ValidationError outside (0, 90) degrees.
double fold_length_from_width(double fold_width_mm, double fold_angle_deg);

/// Extension of one fold when fully flattened: delta = 2 S (1 - sin theta).
double extension_single_fold(const FoldSpec& spec);

/// Total extension stroke: N * extension_single_fold.
double extension_total(const FoldSpec& spec);

/// Total contraction stroke: 2 S sin(theta) N, the folded stack height.
double contraction_total(const FoldSpec& spec);

/// Folded stack height at rest, 2 S sin(theta) N. Equals contraction_total;
/// named separately where it is used as a length budget rather than a stroke.
double rest_height(const FoldSpec& spec);

/// Number of folds that fit in an actuator of length l at rest pitch
/// 2 S sin(theta): floor(l / pitch), at least 1.
/// Throws ValidationError if even one fold does not fit.
int estimate_fold_count(double actuator_length_mm, const FoldSpec& spec);

/// Neutral-axis curvature radius of the bent actuator:
/// rho = L (r + offset) / (N delta_single).
/// Throws ValidationError when delta_single == 0 (straight actuator).
double curvature_radius(double constrained_length_mm, int fold_count,
                        double delta_single_mm, double sleeve_radius_mm,
                        double offset_mm);

/// Bend angle measured about the bend center at the outer radius,
/// phi = N * delta / (rho + r + offset), in degrees.
double bend_angle_outer(double delta_single_mm, double curvature_radius_mm,
                        double sleeve_radius_mm, double offset_mm,
                        int fold_count);

/// Bend angle from the arc-length relation L = rho * phi, which reduces to
/// phi = N * delta / (r + offset) (radians), returned in degrees. Unlike the
/// outer-radius form this is exactly consistent with curvature_radius.
double bend_angle_consistent(double delta_single_mm, double sleeve_radius_mm,
                             double offset_mm, int fold_count);

/// Curved configuration of the constrained side of a bending actuator.
class BendGeometry {
 public:
  /// Requires rho > 0 and angle >= 0.
  BendGeometry(double constrained_length_mm, double offset_mm,
               double curvature_radius_mm, double bend_angle_deg);

  double constrained_length_mm() const { return length_mm_; }
  double offset_mm() const { return offset_mm_; }
  double curvature_radius_mm() const { return rho_mm_; }
  double bend_angle_deg() const { return angle_deg_; }

  /// |rho * angle_rad - L|. Zero (to rounding) for the arc-consistent angle,
  /// nonzero in general for the outer-radius one.
  double arc_residual_mm() const;

 private:
  double length_mm_;
  double offset_mm_;
  double rho_mm_;
  double angle_deg_;
};

/// Both bend-angle routes side by side, plus the arc-length residual of the
/// outer-radius route. `straight` is set (and the optionals empty) when the
/// single-fold extension is zero.
struct BendAnalysis {
  double single_fold_extension_mm{0.0};
  bool straight{false};
  std::optional<double> curvature_radius_mm;
  double angle_outer_deg{0.0};
  double angle_consistent_deg{0.0};
  double arc_residual_mm{0.0};
};

BendAnalysis analyze_bending(const FoldSpec& spec, double constrained_length_mm,
                             double sleeve_radius_mm, double offset_mm);

/// Wall radii of the annular pressure boundary. All in mm.
struct WallRadii {
  double cap_inner_r1i;
  double cap_outer_r1o;
  double external_inner_r2i;
  double internal_outer_r3i;
};

/// Default radii when a config gives only the sleeve radius and wall
/// thickness: R1i = r, R2i = r + gap, R1o = R2i + wt, R3i = r - wt.
/// This convention is not from any datasheet; configs may override every
/// radius explicitly.
WallRadii derive_wall_radii(double sleeve_radius_mm, double wall_thickness_mm,
                            double radial_gap_mm = 0.0);

/// Full sleeve-actuator geometry: sleeve and fold dimensions plus the wall
/// radii used by the static force model.
class ActuatorGeometry {
 public:
  ActuatorGeometry(double sleeve_radius_mm, double actuator_length_mm,
                   double fold_width_mm, double fold_angle_deg,
                   double restraining_thickness_mm, int restraining_count,
                   double wall_thickness_mm, double constraining_thickness_mm,
                   double shore_hardness, WallRadii radii);

  double sleeve_radius_mm() const { return sleeve_radius_mm_; }
  double actuator_length_mm() const { return actuator_length_mm_; }
  double fold_width_mm() const { return fold_width_mm_; }
  double fold_angle_deg() const { return rad_to_deg(fold_angle_rad_); }
  double fold_angle_rad() const { return fold_angle_rad_; }
  double restraining_thickness_mm() const { return restraining_thickness_mm_; }
  int restraining_count() const { return restraining_count_; }
  double wall_thickness_mm() const { return wall_thickness_mm_; }
  double constraining_thickness_mm() const {
    return constraining_thickness_mm_;
  }
  double shore_hardness() const { return shore_hardness_; }
  const WallRadii& radii() const { return radii_; }

  /// Shore hardness values other than 85 and 95 are accepted but flagged.
  bool nonstandard_shore_hardness() const;

  /// FoldSpec with S = fw / cos(beta) and N estimated from the actuator
  /// length, unless overridden.
  FoldSpec fold_spec(std::optional<int> fold_count_override = std::nullopt,
                     std::optional<double> fold_length_override_mm =
                         std::nullopt) const;

 private:
  double sleeve_radius_mm_;
  double actuator_length_mm_;
  double fold_width_mm_;
  double fold_angle_rad_;
  double restraining_thickness_mm_;
  int restraining_count_;
  double wall_thickness_mm_;
  double constraining_thickness_mm_;
  double shore_hardness_;
  WallRadii radii_;
};

}  // namespace sleevesim
