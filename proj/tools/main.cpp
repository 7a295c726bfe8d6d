#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sleevesim/config.hpp"
#include "sleevesim/csv_io.hpp"
#include "sleevesim/errors.hpp"
#include "sleevesim/fold_geometry.hpp"
#include "sleevesim/frequency.hpp"
#include "sleevesim/hyperelastic.hpp"
#include "sleevesim/metrics.hpp"
#include "sleevesim/pid.hpp"
#include "sleevesim/plant.hpp"
#include "sleevesim/report.hpp"
#include "sleevesim/simulation.hpp"
#include "sleevesim/statics.hpp"
#include "sleevesim/stiffness.hpp"
#include "sleevesim/trajectory.hpp"

namespace {

using namespace sleevesim;

constexpr double kKpaPerMpa = 1000.0;

void ensure_writable(const std::string& path, bool force) {
  if (!force && std::filesystem::exists(path)) {
    throw ValidationError("refusing to overwrite '" + path +
                          "' (pass --force)");
  }
}

std::ofstream open_output(const std::string& path, bool force) {
  ensure_writable(path, force);
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot open '" + path + "' for writing");
  }
  return out;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

/// Text report to stdout; the same report as JSON when --json was given.
void emit_report(const Report& report, const std::string& json_path,
                 bool force) {
  write_report_text(report, std::cout);
  if (!json_path.empty()) {
    auto out = open_output(json_path, force);
    write_report_json(report, out);
  }
}

GeometryConfig load_config(const std::string& path, bool lenient) {
  GeometryConfig config = load_geometry_config(path, !lenient);
  print_warnings(config.warnings);
  return config;
}

struct KinematicsArgs {
  std::string config_path;
  std::string mode = "extension";
  double offset_mm = -1.0;  // <0: use the constraining layer thickness
  std::string json_path;
  bool lenient = false;
  bool force = false;
};

void run_kinematics(const KinematicsArgs& args) {
  const GeometryConfig config = load_config(args.config_path, args.lenient);
  const FoldSpec spec = config.fold_spec();

  Report report;
  report.add("mode", args.mode);
  report.add("fold_length_mm", spec.fold_length_mm());
  report.add("fold_angle_deg", spec.fold_angle_deg());
  report.add("fold_count", static_cast<double>(spec.fold_count()));

  if (args.mode == "extension") {
    report.add("single_fold_extension_mm", extension_single_fold(spec));
    report.add("extension_total_mm", extension_total(spec));
  } else if (args.mode == "contraction") {
    report.add("contraction_total_mm", contraction_total(spec));
  } else if (args.mode == "bending") {
    const double offset = args.offset_mm >= 0.0
                              ? args.offset_mm
                              : config.geometry.constraining_thickness_mm();
    const double length = config.geometry.actuator_length_mm();
    const BendAnalysis bend = analyze_bending(
        spec, length, config.geometry.sleeve_radius_mm(), offset);
    report.add("constrained_length_mm", length);
    report.add("offset_mm", offset);
    report.add("single_fold_extension_mm", bend.single_fold_extension_mm);
    report.add("straight", bend.straight ? "true" : "false");
    if (!bend.straight) {
      report.add("curvature_radius_mm", *bend.curvature_radius_mm);
      report.add("bend_angle_outer_deg", bend.angle_outer_deg);
      report.add("bend_angle_consistent_deg", bend.angle_consistent_deg);
      report.add("arc_residual_mm", bend.arc_residual_mm);
    }
  } else {
    throw ValidationError("unknown kinematics mode '" + args.mode +
                          "' (expected extension, contraction, or bending)");
  }
  emit_report(report, args.json_path, args.force);
}

struct FitMaterialArgs {
  std::string data_path;
  std::string family = "mr5";
  std::string json_path;
  bool force = false;
};

void run_fit_material(const FitMaterialArgs& args) {
  const StressStrainDataset data = load_stress_strain(args.data_path);
  const HyperelasticFamily family = parse_family(args.family);
  const MaterialFitReport fit = fit_linear_family(data, family);

  static const char* kNames[][5] = {
      {"c10"},                               // neo-hookean
      {"c10", "c01"},                        // mooney-rivlin 2
      {"c10", "c01", "c20", "c11", "c02"},   // mooney-rivlin 5
      {"c10", "c20", "c30"},                 // yeoh 3
  };
  const auto& coeffs = fit.model.coefficients();
  const char* const* names = kNames[static_cast<int>(family)];

  Report report;
  report.add("family", family_name(family));
  report.add("samples", static_cast<double>(data.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    report.add(std::string(names[i]) + "_mpa", coeffs[i]);
  }
  report.add("rms_residual_mpa", fit.rms_residual_mpa);
  report.add("max_abs_residual_mpa", fit.max_abs_residual_mpa);
  report.add("condition_estimate", fit.condition_estimate);
  emit_report(report, args.json_path, args.force);
}

struct FitStiffnessArgs {
  std::string data_path;
  double select_pressure_kpa = std::nan("");
  double bin_width_mm = 0.0;
  std::string json_path;
  bool force = false;
};

void run_fit_stiffness(const FitStiffnessArgs& args) {
  std::vector<std::string> warnings;
  const auto groups = load_force_displacement(args.data_path, &warnings);
  print_warnings(warnings);

  const ForceDisplacementDataset* data = nullptr;
  if (groups.size() == 1 && std::isnan(args.select_pressure_kpa)) {
    data = &groups.front();
  } else if (!std::isnan(args.select_pressure_kpa)) {
    for (const auto& g : groups) {
      if (g.pressure_kpa() &&
          *g.pressure_kpa() == args.select_pressure_kpa) {
        data = &g;
      }
    }
    if (!data) {
      throw ValidationError("no dataset at pressure " +
                            format_number(args.select_pressure_kpa) +
                            " kPa in '" + args.data_path + "'");
    }
  } else {
    std::string pressures;
    for (const auto& g : groups) {
      if (!pressures.empty()) pressures += ", ";
      pressures += g.pressure_kpa() ? format_number(*g.pressure_kpa()) : "?";
    }
    throw ValidationError("'" + args.data_path + "' holds " +
                          std::to_string(groups.size()) +
                          " pressure groups (" + pressures +
                          " kPa); select one with --pressure-kpa");
  }

  const CubicFitReport fit = fit_cubic(*data);

  Report report;
  report.add("samples", static_cast<double>(data->size()));
  if (data->pressure_kpa()) report.add("pressure_kpa", *data->pressure_kpa());
  report.add("a_n_mm3", fit.cubic.a);
  report.add("b_n_mm2", fit.cubic.b);
  report.add("c_n_mm", fit.cubic.c);
  report.add("d_n", fit.cubic.d);
  report.add("range_min_mm", fit.cubic.range_min_mm);
  report.add("range_max_mm", fit.cubic.range_max_mm);
  report.add("rms_residual_n", fit.rms_residual_n);
  report.add("max_abs_residual_n", fit.max_abs_residual_n);
  report.add("condition_estimate", fit.condition_estimate);
  report.add("plausible", fit.cubic.plausible() ? "true" : "false");

  if (args.bin_width_mm > 0.0) {
    for (const auto& bin : interval_stiffness(*data, args.bin_width_mm)) {
      report.add("k(" + format_number(bin.from_mm) + ".." +
                     format_number(bin.to_mm) + ")_n_per_m",
                 bin.stiffness_n_per_m);
    }
  }
  emit_report(report, args.json_path, args.force);
}

struct StaticsArgs {
  std::string config_path;
  double pressure_kpa = 0.0;
  bool sweep_y = false;
  bool update_areas = false;
  int points = 201;
  double y_max_mm = -1.0;  // <0: geometric extension stroke
  std::string out_path;
  std::string json_path;
  bool lenient = false;
  bool force = false;
};

void run_statics(const StaticsArgs& args) {
  const GeometryConfig config = load_config(args.config_path, args.lenient);
  if (!config.stiffness) {
    throw ValidationError("config has no 'stiffness' block; the static force "
                          "balance needs the axial-stiffness cubic");
  }
  const FoldSpec spec = config.fold_spec();
  const ProjectedAreas areas = projected_areas(config.geometry, spec);
  const double pressure_mpa = args.pressure_kpa / kKpaPerMpa;

  Report report;
  report.add("pressure_kpa", args.pressure_kpa);
  report.add("fold_count", static_cast<double>(spec.fold_count()));
  report.add("extension_total_mm", extension_total(spec));
  report.add("area_cap_mm2", areas.cap_a1_mm2);
  report.add("area_external_mm2", areas.external_a2_mm2);
  report.add("area_internal_mm2", areas.internal_a3_mm2);
  report.add("area_effective_mm2", areas.effective_mm2());
  report.add("blocked_force_n",
             blocked_force(areas, *config.stiffness, pressure_mpa));
  if (pressure_mpa > 0.0) {
    report.add("max_extension_mm",
               max_extension(config.geometry, spec, *config.stiffness,
                             pressure_mpa));
  }

  if (args.sweep_y) {
    if (args.out_path.empty()) {
      throw ValidationError("--sweep-y needs --out for the curve CSV");
    }
    if (args.points < 2) {
      throw ValidationError("--points must be at least 2");
    }
    const double y_max =
        args.y_max_mm >= 0.0 ? args.y_max_mm : extension_total(spec);
    std::vector<double> grid(static_cast<std::size_t>(args.points));
    for (int i = 0; i < args.points; ++i) {
      grid[static_cast<std::size_t>(i)] =
          y_max * static_cast<double>(i) / (args.points - 1);
    }
    const auto curve =
        force_displacement_curve(config.geometry, spec, *config.stiffness,
                                 pressure_mpa, grid, args.update_areas);
    auto out = open_output(args.out_path, args.force);
    write_force_curve(curve, out);
    report.add("curve_csv", args.out_path);
    report.add("curve_points", static_cast<double>(curve.size()));
  }
  emit_report(report, args.json_path, args.force);
}

struct SimulateArgs {
  std::string config_path;
  std::string trajectory;
  double dt_s = 1e-4;
  std::string out_path;
  std::string json_path;
  bool lenient = false;
  bool force = false;
};

void run_simulate(const SimulateArgs& args) {
  const GeometryConfig config = load_config(args.config_path, args.lenient);
  if (!config.pid) {
    throw ValidationError("config has no 'pid' block; closed-loop simulation "
                          "needs controller gains");
  }
  const PlantParams params = make_plant_params(config);
  const TrajectorySpec trajectory = TrajectorySpec::parse(args.trajectory);

  const double stroke = extension_total(config.fold_spec());
  if (trajectory.exceeds_stroke(stroke)) {
    std::cerr << "warning: peak setpoint "
              << format_number(trajectory.peak_setpoint_mm())
              << " mm exceeds the geometric extension stroke "
              << format_number(stroke) << " mm\n";
  }

  const SimTrace trace = simulate_closed_loop(params, *config.pid, trajectory,
                                              args.dt_s);
  if (!args.out_path.empty()) {
    auto out = open_output(args.out_path, args.force);
    write_trace(trace, out);
  }

  const ResponseMetrics metrics = response_metrics(trace, trajectory);
  Report report;
  report.add("trajectory", trajectory.kind_name());
  report.add("duration_s", trajectory.duration_s());
  report.add("dt_s", args.dt_s);
  report.add("samples", static_cast<double>(trace.size()));
  report.add("final_y_mm", trace.back().y_mm);
  report.add("rise_time_s", metrics.rise_time_s);
  report.add("settling_time_s", metrics.settling_time_s);
  report.add("overshoot_percent", metrics.overshoot_percent);
  report.add("steady_state_error_mm", metrics.steady_state_error_mm);
  report.add("rmse_mm", metrics.rmse_mm);
  if (metrics.amplitude_ratio) {
    report.add("amplitude_ratio", *metrics.amplitude_ratio);
  }
  if (metrics.phase_lag_deg) {
    report.add("phase_lag_deg", *metrics.phase_lag_deg);
  }
  if (!args.out_path.empty()) report.add("trace_csv", args.out_path);
  emit_report(report, args.json_path, args.force);
}

struct FreqArgs {
  std::string config_path;
  double f_min_hz = 0.0;
  double f_max_hz = 0.0;
  double df_hz = 0.0;
  double pressure_kpa = -1.0;  // <0: plant pressure limit
  int settle_cycles = 5;
  int measure_cycles = 3;
  double dt_hint_s = 1e-3;
  std::string out_path;
  std::string json_path;
  bool lenient = false;
  bool force = false;
};

void run_freq(const FreqArgs& args) {
  const GeometryConfig config = load_config(args.config_path, args.lenient);
  const PlantParams params = make_plant_params(config);
  SquareDrive drive;
  drive.pressure_mpa = args.pressure_kpa >= 0.0
                           ? args.pressure_kpa / kKpaPerMpa
                           : params.pressure_max_mpa;
  drive.settle_cycles = args.settle_cycles;
  drive.measure_cycles = args.measure_cycles;

  const auto response = frequency_response(params, drive, args.f_min_hz,
                                           args.f_max_hz, args.df_hz,
                                           args.dt_hint_s);
  if (!args.out_path.empty()) {
    auto out = open_output(args.out_path, args.force);
    write_frequency_response(response, out);
  }

  double max_amplitude = 0.0;
  for (const auto& point : response) {
    max_amplitude = std::max(max_amplitude, point.amplitude_mm);
  }

  Report report;
  report.add("drive_pressure_kpa", drive.pressure_mpa * kKpaPerMpa);
  report.add("f_min_hz", args.f_min_hz);
  report.add("f_max_hz", args.f_max_hz);
  report.add("df_hz", args.df_hz);
  report.add("points", static_cast<double>(response.size()));
  report.add("max_amplitude_mm", max_amplitude);
  if (!args.out_path.empty()) report.add("response_csv", args.out_path);
  // Written after the CSV so the sweep survives even when the curve never
  // reaches -3 dB (which exits with the numerical-failure code).
  report.add("bandwidth_hz", bandwidth_hz(response));
  emit_report(report, args.json_path, args.force);
}

struct SweepArgs {
  std::string config_path;
  std::string param;
  std::string range;  // start:stop:steps
  std::string metric = "extension";
  double pressure_kpa = -1.0;
  std::string out_path;
  bool lenient = false;
  bool force = false;
};

std::vector<double> parse_range(const std::string& text) {
  double start = 0.0, stop = 0.0;
  long steps = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &start, &stop, &steps,
                  &tail) != 3 ||
      steps < 1) {
    throw ValidationError("range must be start:stop:steps with steps >= 1, "
                          "got '" + text + "'");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    values.push_back(start);
  } else {
    for (long i = 0; i < steps; ++i) {
      values.push_back(start + (stop - start) * static_cast<double>(i) /
                                   static_cast<double>(steps - 1));
    }
  }
  return values;
}

void run_sweep(const SweepArgs& args) {
  const GeometryConfig config = load_config(args.config_path, args.lenient);
  const FoldSpec base = config.fold_spec();
  const std::vector<double> values = parse_range(args.range);

  std::string value_column;
  // The fold count stays at the config's value while fold angle or width is
  // swept, so each row isolates the swept parameter; re-estimating N per
  // point would fold pitch changes into the trend.
  std::function<FoldSpec(double)> make_spec;
  if (args.param == "fold_angle") {
    value_column = "fold_angle_deg";
    make_spec = [&](double v) {
      return FoldSpec::from_fold_width(config.geometry.fold_width_mm(), v,
                                       base.fold_count());
    };
  } else if (args.param == "fold_width") {
    value_column = "fold_width_mm";
    make_spec = [&](double v) {
      return FoldSpec::from_fold_width(v, config.geometry.fold_angle_deg(),
                                       base.fold_count());
    };
  } else if (args.param == "fold_count") {
    value_column = "fold_count";
    make_spec = [&](double v) {
      const double rounded = std::round(v);
      if (std::abs(v - rounded) > 1e-9 || rounded < 1.0) {
        throw ValidationError("fold_count sweep values must be whole numbers "
                              ">= 1, got " + format_number(v));
      }
      return base.with_fold_count(static_cast<int>(rounded));
    };
  } else {
    throw ValidationError("unknown sweep parameter '" + args.param +
                          "' (expected fold_angle, fold_width, or "
                          "fold_count)");
  }

  const double pressure_mpa = args.pressure_kpa / kKpaPerMpa;
  std::string metric_column;
  std::function<double(const FoldSpec&)> evaluate;
  if (args.metric == "extension") {
    metric_column = "extension_mm";
    evaluate = [](const FoldSpec& spec) { return extension_total(spec); };
  } else if (args.metric == "blocked_force" ||
             args.metric == "max_extension") {
    if (!config.stiffness) {
      throw ValidationError("config has no 'stiffness' block; force metrics "
                            "need the axial-stiffness cubic");
    }
    if (args.pressure_kpa <= 0.0) {
      throw ValidationError("metric '" + args.metric +
                            "' needs --pressure-kpa > 0");
    }
    if (args.metric == "blocked_force") {
      metric_column = "blocked_force_n";
      evaluate = [&](const FoldSpec& spec) {
        return blocked_force(config.geometry, spec, *config.stiffness,
                             pressure_mpa);
      };
    } else {
      metric_column = "max_extension_mm";
      evaluate = [&](const FoldSpec& spec) {
        return max_extension(config.geometry, spec, *config.stiffness,
                             pressure_mpa);
      };
    }
  } else {
    throw ValidationError("unknown sweep metric '" + args.metric +
                          "' (expected extension, blocked_force, or "
                          "max_extension)");
  }

  auto out = open_output(args.out_path, args.force);
  out << value_column << "," << metric_column << "\n";
  for (double v : values) {
    out << format_number(v) << "," << format_number(evaluate(make_spec(v)))
        << "\n";
  }

  Report report;
  report.add("parameter", args.param);
  report.add("metric", args.metric);
  report.add("points", static_cast<double>(values.size()));
  report.add("sweep_csv", args.out_path);
  emit_report(report, "", false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folded-bellows sleeve actuator models: stroke kinematics, "
               "material and stiffness fits, quasi-static forces, and "
               "closed-loop dynamics"};
  app.require_subcommand(1);

  KinematicsArgs kin_args;
  auto* kin = app.add_subcommand(
      "kinematics", "Stroke and bend geometry from a config");
  kin->add_option("config", kin_args.config_path, "actuator config JSON")
      ->required();
  kin->add_option("--mode", kin_args.mode,
                  "extension, contraction, or bending")
      ->check(CLI::IsMember({"extension", "contraction", "bending"}));
  kin->add_option("--offset-mm", kin_args.offset_mm,
                  "neutral-axis offset for bending (default: constraining "
                  "layer thickness)");
  kin->add_option("--json", kin_args.json_path, "also write the report here");
  kin->add_flag("--lenient", kin_args.lenient,
                "downgrade unknown config keys to warnings");
  kin->add_flag("--force", kin_args.force, "overwrite existing outputs");
  kin->callback([&] { run_kinematics(kin_args); });

  FitMaterialArgs mat_args;
  auto* mat = app.add_subcommand(
      "fit-material", "Fit a hyperelastic model to uniaxial tensile data");
  mat->add_option("data", mat_args.data_path,
                  "CSV with header strain,stress_mpa")
      ->required();
  mat->add_option("--family", mat_args.family,
                  "nh, mr2, mr5, or yeoh3 (default mr5)");
  mat->add_option("--json", mat_args.json_path, "also write the report here");
  mat->add_flag("--force", mat_args.force, "overwrite existing outputs");
  mat->callback([&] { run_fit_material(mat_args); });

  FitStiffnessArgs stiff_args;
  auto* stiff = app.add_subcommand(
      "fit-stiffness", "Fit the axial-stiffness cubic to force-displacement "
                       "data");
  stiff->add_option("data", stiff_args.data_path,
                    "CSV with header displacement_mm,force_n[,pressure_kpa]")
      ->required();
  stiff->add_option("--pressure-kpa", stiff_args.select_pressure_kpa,
                    "pressure group to fit when the file holds several");
  stiff->add_option("--bin-width", stiff_args.bin_width_mm,
                    "also report per-bin secant stiffness (mm)");
  stiff->add_option("--json", stiff_args.json_path,
                    "also write the report here");
  stiff->add_flag("--force", stiff_args.force, "overwrite existing outputs");
  stiff->callback([&] { run_fit_stiffness(stiff_args); });

  StaticsArgs statics_args;
  auto* stat = app.add_subcommand(
      "statics", "Quasi-static force balance: blocked force, max extension, "
                 "force-displacement curve");
  stat->add_option("config", statics_args.config_path, "actuator config JSON")
      ->required();
  stat->add_option("--pressure-kpa", statics_args.pressure_kpa,
                   "internal pressure")
      ->required();
  stat->add_flag("--sweep-y", statics_args.sweep_y,
                 "write the force-displacement curve to --out");
  stat->add_flag("--update-areas", statics_args.update_areas,
                 "recompute projected areas as the folds open");
  stat->add_option("--points", statics_args.points,
                   "curve sample count (default 201)");
  stat->add_option("--y-max", statics_args.y_max_mm,
                   "curve displacement limit (default: extension stroke)");
  stat->add_option("--out", statics_args.out_path, "curve CSV path");
  stat->add_option("--json", statics_args.json_path,
                   "also write the report here");
  stat->add_flag("--lenient", statics_args.lenient,
                 "downgrade unknown config keys to warnings");
  stat->add_flag("--force", statics_args.force, "overwrite existing outputs");
  stat->callback([&] { run_statics(statics_args); });

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand(
      "simulate", "Closed-loop PID tracking of a displacement trajectory");
  sim->add_option("config", sim_args.config_path, "actuator config JSON")
      ->required();
  sim->add_option("--trajectory", sim_args.trajectory,
                  "step:amplitude=..,duration=.. | "
                  "ramp:slope=..,ramp_duration=..,duration=.. | "
                  "sinusoid:amplitude=..,offset=..,frequency=..,duration=..")
      ->required();
  sim->add_option("--dt", sim_args.dt_s,
                  "plant integration step in s (default 1e-4); must divide "
                  "the controller sample time");
  sim->add_option("--out", sim_args.out_path, "trace CSV path");
  sim->add_option("--json", sim_args.json_path, "also write the report here");
  sim->add_flag("--lenient", sim_args.lenient,
                "downgrade unknown config keys to warnings");
  sim->add_flag("--force", sim_args.force, "overwrite existing outputs");
  sim->callback([&] { run_simulate(sim_args); });

  FreqArgs freq_args;
  auto* freq = app.add_subcommand(
      "freq", "Open-loop square-drive frequency response and bandwidth");
  freq->add_option("config", freq_args.config_path, "actuator config JSON")
      ->required();
  freq->add_option("--fmin", freq_args.f_min_hz, "lowest frequency (Hz)")
      ->required();
  freq->add_option("--fmax", freq_args.f_max_hz, "highest frequency (Hz)")
      ->required();
  freq->add_option("--df", freq_args.df_hz, "frequency step (Hz)")
      ->required();
  freq->add_option("--pressure-kpa", freq_args.pressure_kpa,
                   "drive amplitude (default: plant pressure limit)");
  freq->add_option("--settle-cycles", freq_args.settle_cycles,
                   "transient cycles discarded per point (default 5)");
  freq->add_option("--measure-cycles", freq_args.measure_cycles,
                   "cycles measured per point (default 3)");
  freq->add_option("--dt", freq_args.dt_hint_s,
                   "integration step hint in s (default 1e-3)");
  freq->add_option("--out", freq_args.out_path, "response CSV path");
  freq->add_option("--json", freq_args.json_path,
                   "also write the report here");
  freq->add_flag("--lenient", freq_args.lenient,
                 "downgrade unknown config keys to warnings");
  freq->add_flag("--force", freq_args.force, "overwrite existing outputs");
  freq->callback([&] { run_freq(freq_args); });

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep", "Tabulate a performance metric over a geometric parameter");
  sweep->add_option("config", sweep_args.config_path, "actuator config JSON")
      ->required();
  sweep->add_option("--param", sweep_args.param,
                    "fold_angle, fold_width, or fold_count")
      ->required()
      ->check(CLI::IsMember({"fold_angle", "fold_width", "fold_count"}));
  sweep->add_option("--range", sweep_args.range, "start:stop:steps")
      ->required();
  sweep->add_option("--metric", sweep_args.metric,
                    "extension, blocked_force, or max_extension")
      ->check(CLI::IsMember({"extension", "blocked_force", "max_extension"}));
  sweep->add_option("--pressure-kpa", sweep_args.pressure_kpa,
                    "pressure for the force metrics");
  sweep->add_option("--out", sweep_args.out_path, "sweep CSV path")
      ->required();
  sweep->add_flag("--lenient", sweep_args.lenient,
                  "downgrade unknown config keys to warnings");
  sweep->add_flag("--force", sweep_args.force, "overwrite existing outputs");
  sweep->callback([&] { run_sweep(sweep_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
