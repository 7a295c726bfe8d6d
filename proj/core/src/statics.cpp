#include "sleevesim/statics.hpp"

#include <algorithm>
#include <cmath>

#include "sleevesim/errors.hpp"

namespace sleevesim {

double area_cap(double cap_outer_r_mm, double cap_inner_r_mm) {
  if (!(cap_inner_r_mm >= 0.0) || !(cap_outer_r_mm >= cap_inner_r_mm)) {
    throw ValidationError("cap radii must satisfy R1o >= R1i >= 0");
  }
  return kPi * (cap_outer_r_mm * cap_outer_r_mm -
                cap_inner_r_mm * cap_inner_r_mm);
}

namespace {

double wall_annulus(double inner_r_mm, double fold_length_mm,
                    double fold_angle_rad) {
  if (!(inner_r_mm >= 0.0) || !(fold_length_mm >= 0.0)) {
    throw ValidationError("wall radius and fold length must be nonnegative");
  }
  const double outer = inner_r_mm + fold_length_mm * std::cos(fold_angle_rad);
  return kPi * (outer * outer - inner_r_mm * inner_r_mm);
}

}  // namespace

double area_external(double external_inner_r_mm, double fold_length_mm,
                     double fold_angle_rad) {
  return wall_annulus(external_inner_r_mm, fold_length_mm, fold_angle_rad);
}

double area_internal(double internal_outer_r_mm, double fold_length_mm,
                     double fold_angle_rad) {
  return wall_annulus(internal_outer_r_mm, fold_length_mm, fold_angle_rad);
}

ProjectedAreas projected_areas(const ActuatorGeometry& geom,
                               const FoldSpec& spec) {
  const auto& r = geom.radii();
  return ProjectedAreas{
      area_cap(r.cap_outer_r1o, r.cap_inner_r1i),
      area_external(r.external_inner_r2i, spec.fold_length_mm(),
                    spec.fold_angle_rad()),
      area_internal(r.internal_outer_r3i, spec.fold_length_mm(),
                    spec.fold_angle_rad())};
}

StaticState net_force(const ProjectedAreas& areas, const StiffnessCubic& poly,
                      double pressure_mpa, double displacement_mm) {
  if (!(pressure_mpa >= 0.0)) {
    throw ValidationError("the static force balance covers the extension "
                          "regime only; negative (vacuum) pressure is "
                          "rejected");
  }
  StaticState s;
  s.pressure_mpa = pressure_mpa;
  s.displacement_mm = displacement_mm;
  s.cap_force_n = pressure_mpa * areas.cap_a1_mm2;
  s.external_force_n = pressure_mpa * areas.external_a2_mm2;
  s.internal_force_n = pressure_mpa * areas.internal_a3_mm2;
  s.stiffness_force_n = stiffness_force(poly, displacement_mm);
  s.net_force_n = s.cap_force_n + s.external_force_n - s.internal_force_n -
                  s.stiffness_force_n;
  s.stiffness_extrapolated = extrapolates(poly, displacement_mm);
  return s;
}

StaticState net_force(const ActuatorGeometry& geom, const FoldSpec& spec,
                      const StiffnessCubic& poly, double pressure_mpa,
                      double displacement_mm) {
  return net_force(projected_areas(geom, spec), poly, pressure_mpa,
                   displacement_mm);
}

double blocked_force(const ProjectedAreas& areas, const StiffnessCubic& poly,
                     double pressure_mpa) {
  return net_force(areas, poly, pressure_mpa, 0.0).net_force_n;
}

double blocked_force(const ActuatorGeometry& geom, const FoldSpec& spec,
                     const StiffnessCubic& poly, double pressure_mpa) {
  return blocked_force(projected_areas(geom, spec), poly, pressure_mpa);
}

double max_extension(const ProjectedAreas& areas, const StiffnessCubic& poly,
                     double pressure_mpa, double bracket_hi_mm) {
  if (!(pressure_mpa > 0.0)) {
    throw ValidationError("max extension needs positive pressure");
  }
  if (!(bracket_hi_mm > 0.0)) {
    throw ValidationError("bisection bracket must be positive");
  }
  const auto force = [&](double y) {
    return net_force(areas, poly, pressure_mpa, y).net_force_n;
  };
  double lo = 0.0;
  double hi = bracket_hi_mm;
  double f_lo = force(lo);
  const double f_hi = force(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (f_lo < 0.0) {
    throw NumericalError("net force is already negative at zero "
                         "displacement; pressure cannot open the actuator");
  }
  if (f_hi > 0.0) {
    throw NumericalError("net force has no zero crossing within the bracket; "
                         "force never decays to zero");
  }
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = force(mid);
    if (f_mid == 0.0) return mid;
    if ((f_lo > 0.0) == (f_mid > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double max_extension(const ActuatorGeometry& geom, const FoldSpec& spec,
                     const StiffnessCubic& poly, double pressure_mpa) {
  return max_extension(projected_areas(geom, spec), poly, pressure_mpa,
                       1.5 * extension_total(spec));
}

std::vector<StaticState> force_displacement_curve(const ProjectedAreas& areas,
                                                  const StiffnessCubic& poly,
                                                  double pressure_mpa,
                                                  std::span<const double>
                                                      y_grid) {
  std::vector<StaticState> curve;
  curve.reserve(y_grid.size());
  for (double y : y_grid) {
    curve.push_back(net_force(areas, poly, pressure_mpa, y));
  }
  return curve;
}

double fold_angle_at_displacement(const FoldSpec& spec, double y_mm) {
  const double sin0 = std::sin(spec.fold_angle_rad());
  const double per_fold =
      y_mm / (2.0 * spec.fold_length_mm() * spec.fold_count());
  const double s = std::clamp(sin0 + per_fold, 1e-12, 1.0);
  return std::asin(s);
}

ProjectedAreas projected_areas_at(const ActuatorGeometry& geom,
                                  const FoldSpec& spec, double y_mm) {
  const double theta = fold_angle_at_displacement(spec, y_mm);
  const auto& r = geom.radii();
  return ProjectedAreas{
      area_cap(r.cap_outer_r1o, r.cap_inner_r1i),
      area_external(r.external_inner_r2i, spec.fold_length_mm(), theta),
      area_internal(r.internal_outer_r3i, spec.fold_length_mm(), theta)};
}

std::vector<StaticState> force_displacement_curve(
    const ActuatorGeometry& geom, const FoldSpec& spec,
    const StiffnessCubic& poly, double pressure_mpa,
    std::span<const double> y_grid, bool update_areas) {
  if (!update_areas) {
    return force_displacement_curve(projected_areas(geom, spec), poly,
                                    pressure_mpa, y_grid);
  }
  std::vector<StaticState> curve;
  curve.reserve(y_grid.size());
  for (double y : y_grid) {
    curve.push_back(
        net_force(projected_areas_at(geom, spec, y), poly, pressure_mpa, y));
  }
  return curve;
}

}  // namespace sleevesim
