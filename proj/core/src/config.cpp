#include "sleevesim/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "sleevesim/errors.hpp"
#include "sleevesim/report.hpp"

namespace sleevesim {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string& path, const std::string& why) {
  throw ValidationError(path + ": " + why);
}

const json& require_object(const json& node, const std::string& path) {
  if (!node.is_object()) field_error(path, "must be a JSON object");
  return node;
}

const json* find(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double require_number(const json& obj, const std::string& key,
                      const std::string& scope) {
  const json* node = find(obj, key);
  if (!node) field_error(scope + key, "missing required field");
  if (!node->is_number()) field_error(scope + key, "must be a number");
  const double v = node->get<double>();
  if (!std::isfinite(v)) field_error(scope + key, "must be finite");
  return v;
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& scope) {
  const json* node = find(obj, key);
  if (!node) return std::nullopt;
  if (!node->is_number()) field_error(scope + key, "must be a number");
  const double v = node->get<double>();
  if (!std::isfinite(v)) field_error(scope + key, "must be finite");
  return v;
}

int require_integer(const json& obj, const std::string& key,
                    const std::string& scope) {
  const json* node = find(obj, key);
  if (!node) field_error(scope + key, "missing required field");
  if (!node->is_number_integer()) field_error(scope + key,
                                              "must be an integer");
  return node->get<int>();
}

void audit_keys(const json& obj, const std::set<std::string>& known,
                const std::string& scope, bool strict,
                std::vector<std::string>& warnings) {
  for (const auto& item : obj.items()) {
    if (known.count(item.key())) continue;
    const std::string what = scope + item.key() + ": unknown field";
    if (strict) throw ValidationError(what);
    warnings.push_back(what);
  }
}

constexpr double kKpaPerMpa = 1000.0;

}  // namespace

GeometryConfig parse_geometry_config(std::istream& in, bool strict) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config parse error: ") + e.what());
  }
  require_object(root, "config");

  std::vector<std::string> warnings;
  audit_keys(root, {"geometry", "fold_count", "fold_length_mm", "stiffness",
                    "plant", "pid"},
             "", strict, warnings);

  const json* geom_node = find(root, "geometry");
  if (!geom_node) field_error("geometry", "missing required field");
  const json& g = require_object(*geom_node, "geometry");
  audit_keys(g,
             {"sleeve_radius_mm", "actuator_length_mm", "fold_width_mm",
              "fold_angle_deg", "restraining_thickness_mm",
              "restraining_count", "wall_thickness_mm",
              "constraining_thickness_mm", "shore_hardness", "radial_gap_mm",
              "radii_mm"},
             "geometry.", strict, warnings);

  const double sleeve_radius = require_number(g, "sleeve_radius_mm",
                                              "geometry.");
  const double length = require_number(g, "actuator_length_mm", "geometry.");
  const double fold_width = require_number(g, "fold_width_mm", "geometry.");
  const double fold_angle = require_number(g, "fold_angle_deg", "geometry.");
  const double restraining_thickness =
      require_number(g, "restraining_thickness_mm", "geometry.");
  const int restraining_count =
      require_integer(g, "restraining_count", "geometry.");
  const double wall_thickness = require_number(g, "wall_thickness_mm",
                                               "geometry.");
  const double constraining_thickness =
      require_number(g, "constraining_thickness_mm", "geometry.");
  const double shore = require_number(g, "shore_hardness", "geometry.");
  const double radial_gap =
      optional_number(g, "radial_gap_mm", "geometry.").value_or(0.0);

  WallRadii radii{};
  bool explicit_radii = false;
  if (const json* radii_node = find(g, "radii_mm")) {
    const json& r = require_object(*radii_node, "geometry.radii_mm");
    audit_keys(r, {"cap_inner", "cap_outer", "external_inner",
                   "internal_outer"},
               "geometry.radii_mm.", strict, warnings);
    radii.cap_inner_r1i = require_number(r, "cap_inner", "geometry.radii_mm.");
    radii.cap_outer_r1o = require_number(r, "cap_outer", "geometry.radii_mm.");
    radii.external_inner_r2i =
        require_number(r, "external_inner", "geometry.radii_mm.");
    radii.internal_outer_r3i =
        require_number(r, "internal_outer", "geometry.radii_mm.");
    explicit_radii = true;
  } else {
    radii = derive_wall_radii(sleeve_radius, wall_thickness, radial_gap);
  }

  GeometryConfig config{
      ActuatorGeometry(sleeve_radius, length, fold_width, fold_angle,
                       restraining_thickness, restraining_count,
                       wall_thickness, constraining_thickness, shore, radii),
      std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
      explicit_radii, radial_gap, {}};

  if (fold_angle < 25.0 || fold_angle > 45.0) {
    warnings.push_back("geometry.fold_angle_deg: " + format_number(fold_angle) +
                       " is outside the tested range [25, 45] degrees");
  }
  if (config.geometry.nonstandard_shore_hardness()) {
    warnings.push_back("geometry.shore_hardness: values other than 85 and 95 "
                       "have no calibrated material data");
  }

  if (const json* node = find(root, "fold_count")) {
    if (!node->is_number_integer()) {
      field_error("fold_count", "must be an integer");
    }
    config.fold_count = node->get<int>();
  }
  if (auto v = optional_number(root, "fold_length_mm", "")) {
    config.fold_length_mm = *v;
  }

  if (const json* node = find(root, "stiffness")) {
    const json& s = require_object(*node, "stiffness");
    audit_keys(s, {"a_n_mm3", "b_n_mm2", "c_n_mm", "d_n", "range_mm"},
               "stiffness.", strict, warnings);
    const json* range = find(s, "range_mm");
    if (!range) field_error("stiffness.range_mm", "missing required field");
    if (!range->is_array() || range->size() != 2 ||
        !(*range)[0].is_number() || !(*range)[1].is_number()) {
      field_error("stiffness.range_mm", "must be a [min, max] number pair");
    }
    config.stiffness = StiffnessCubic(
        require_number(s, "a_n_mm3", "stiffness."),
        require_number(s, "b_n_mm2", "stiffness."),
        require_number(s, "c_n_mm", "stiffness."),
        require_number(s, "d_n", "stiffness."),
        (*range)[0].get<double>(), (*range)[1].get<double>());
    if (!config.stiffness->plausible()) {
      warnings.push_back("stiffness.c_n_mm: nonpositive linear coefficient; "
                         "the fit does not resist extension near rest");
    }
  }

  if (const json* node = find(root, "plant")) {
    const json& p = require_object(*node, "plant");
    audit_keys(p, {"mass_kg", "damping_n_s_mm", "pressure_max_kpa",
                   "fill_tau_s", "vent_tau_s"},
               "plant.", strict, warnings);
    PlantConfig plant{};
    plant.mass_kg = require_number(p, "mass_kg", "plant.");
    plant.damping_n_s_per_mm = require_number(p, "damping_n_s_mm", "plant.");
    plant.pressure_max_mpa =
        require_number(p, "pressure_max_kpa", "plant.") / kKpaPerMpa;
    const auto fill = optional_number(p, "fill_tau_s", "plant.");
    const auto vent = optional_number(p, "vent_tau_s", "plant.");
    if (fill.has_value() != vent.has_value()) {
      field_error("plant.fill_tau_s",
                  "fill_tau_s and vent_tau_s must be given together");
    }
    if (fill) plant.lag = PressureLag{*fill, *vent};
    config.plant = plant;
  }

  if (const json* node = find(root, "pid")) {
    const json& p = require_object(*node, "pid");
    audit_keys(p, {"kp_kpa_mm", "ki_kpa_mm_s", "kd_kpa_s_mm", "u_min_kpa",
                   "u_max_kpa", "sample_time_s", "anti_windup"},
               "pid.", strict, warnings);
    PidGains gains{};
    gains.kp_mpa_per_mm = require_number(p, "kp_kpa_mm", "pid.") / kKpaPerMpa;
    gains.ki_mpa_per_mm_s =
        require_number(p, "ki_kpa_mm_s", "pid.") / kKpaPerMpa;
    gains.kd_mpa_s_per_mm =
        require_number(p, "kd_kpa_s_mm", "pid.") / kKpaPerMpa;
    gains.u_min_mpa = require_number(p, "u_min_kpa", "pid.") / kKpaPerMpa;
    gains.u_max_mpa = require_number(p, "u_max_kpa", "pid.") / kKpaPerMpa;
    gains.sample_time_s = require_number(p, "sample_time_s", "pid.");
    if (const json* aw = find(p, "anti_windup")) {
      if (!aw->is_boolean()) field_error("pid.anti_windup",
                                         "must be a boolean");
      gains.anti_windup = aw->get<bool>();
    }
    gains.validate();
    config.pid = gains;
  }

  config.warnings = std::move(warnings);
  return config;
}

GeometryConfig load_geometry_config(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open config file '" + path + "'");
  }
  try {
    return parse_geometry_config(in, strict);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void save_geometry_config(const GeometryConfig& config, std::ostream& out) {
  ordered_json root;
  ordered_json g;
  const auto& geom = config.geometry;
  g["sleeve_radius_mm"] = geom.sleeve_radius_mm();
  g["actuator_length_mm"] = geom.actuator_length_mm();
  g["fold_width_mm"] = geom.fold_width_mm();
  g["fold_angle_deg"] = geom.fold_angle_deg();
  g["restraining_thickness_mm"] = geom.restraining_thickness_mm();
  g["restraining_count"] = geom.restraining_count();
  g["wall_thickness_mm"] = geom.wall_thickness_mm();
  g["constraining_thickness_mm"] = geom.constraining_thickness_mm();
  g["shore_hardness"] = geom.shore_hardness();
  if (config.radial_gap_mm != 0.0) {
    g["radial_gap_mm"] = config.radial_gap_mm;
  }
  if (config.explicit_radii) {
    ordered_json r;
    r["cap_inner"] = geom.radii().cap_inner_r1i;
    r["cap_outer"] = geom.radii().cap_outer_r1o;
    r["external_inner"] = geom.radii().external_inner_r2i;
    r["internal_outer"] = geom.radii().internal_outer_r3i;
    g["radii_mm"] = std::move(r);
  }
  root["geometry"] = std::move(g);

  if (config.fold_count) root["fold_count"] = *config.fold_count;
  if (config.fold_length_mm) root["fold_length_mm"] = *config.fold_length_mm;

  if (config.stiffness) {
    ordered_json s;
    s["a_n_mm3"] = config.stiffness->a;
    s["b_n_mm2"] = config.stiffness->b;
    s["c_n_mm"] = config.stiffness->c;
    s["d_n"] = config.stiffness->d;
    s["range_mm"] = {config.stiffness->range_min_mm,
                     config.stiffness->range_max_mm};
    root["stiffness"] = std::move(s);
  }

  if (config.plant) {
    ordered_json p;
    p["mass_kg"] = config.plant->mass_kg;
    p["damping_n_s_mm"] = config.plant->damping_n_s_per_mm;
    p["pressure_max_kpa"] = config.plant->pressure_max_mpa * kKpaPerMpa;
    if (config.plant->lag) {
      p["fill_tau_s"] = config.plant->lag->fill_tau_s;
      p["vent_tau_s"] = config.plant->lag->vent_tau_s;
    }
    root["plant"] = std::move(p);
  }

  if (config.pid) {
    ordered_json p;
    p["kp_kpa_mm"] = config.pid->kp_mpa_per_mm * kKpaPerMpa;
    p["ki_kpa_mm_s"] = config.pid->ki_mpa_per_mm_s * kKpaPerMpa;
    p["kd_kpa_s_mm"] = config.pid->kd_mpa_s_per_mm * kKpaPerMpa;
    p["u_min_kpa"] = config.pid->u_min_mpa * kKpaPerMpa;
    p["u_max_kpa"] = config.pid->u_max_mpa * kKpaPerMpa;
    p["sample_time_s"] = config.pid->sample_time_s;
    if (!config.pid->anti_windup) p["anti_windup"] = false;
    root["pid"] = std::move(p);
  }

  out << root.dump(2) << "\n";
}

PlantParams make_plant_params(const GeometryConfig& config) {
  if (!config.plant) {
    throw ValidationError("config has no 'plant' block; dynamics need mass, "
                          "damping, and the pressure limit");
  }
  if (!config.stiffness) {
    throw ValidationError("config has no 'stiffness' block; dynamics need "
                          "the axial-stiffness cubic");
  }
  const auto areas = projected_areas(config.geometry, config.fold_spec());
  return PlantParams(config.plant->mass_kg, config.plant->damping_n_s_per_mm,
                     areas.effective_mm2(), *config.stiffness,
                     config.plant->lag, config.plant->pressure_max_mpa);
}

}  // namespace sleevesim
