#include "sleevesim/plant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sleevesim/errors.hpp"

namespace sleevesim {

PlantParams::PlantParams(double mass_kg, double damping_n_s_per_mm,
                         double effective_area_mm2, StiffnessCubic stiffness,
                         std::optional<PressureLag> pressure_lag,
                         double pressure_max_mpa)
    : mass_kg(mass_kg),
      damping_n_s_per_mm(damping_n_s_per_mm),
      effective_area_mm2(effective_area_mm2),
      stiffness(stiffness),
      pressure_lag(pressure_lag),
      pressure_max_mpa(pressure_max_mpa) {
  if (!(mass_kg > 0.0)) {
    throw ValidationError("plant mass must be positive");
  }
  if (!(damping_n_s_per_mm >= 0.0)) {
    throw ValidationError("damping must be nonnegative");
  }
  if (!(effective_area_mm2 > 0.0)) {
    throw ValidationError("effective area must be positive");
  }
  if (!(pressure_max_mpa > 0.0)) {
    throw ValidationError("pressure limit must be positive");
  }
  if (pressure_lag &&
      (!(pressure_lag->fill_tau_s > 0.0) || !(pressure_lag->vent_tau_s > 0.0))) {
    throw ValidationError("pressure lag time constants must be positive");
  }
}

double SimTrace::dt_s() const {
  if (samples.size() < 2) {
    throw ValidationError("trace needs at least two samples for a grid "
                          "spacing");
  }
  return samples[1].t_s - samples[0].t_s;
}

PlantDerivatives plant_derivatives(const PlantParams& params, double y_mm,
                                   double v_mm_s, double pressure_mpa,
                                   double external_force_n) {
  if (!std::isfinite(y_mm) || !std::isfinite(v_mm_s) ||
      !std::isfinite(pressure_mpa) || !std::isfinite(external_force_n)) {
    throw ValidationError("plant state and inputs must be finite");
  }
  const double net_n = params.effective_area_mm2 * pressure_mpa -
                       params.damping_n_s_per_mm * v_mm_s -
                       stiffness_force(params.stiffness, y_mm) +
                       external_force_n;
  return PlantDerivatives{v_mm_s, 1000.0 / params.mass_kg * net_n};
}

namespace {

double clamp_command(const PlantParams& params, double cmd_mpa, double t_s) {
  if (!std::isfinite(cmd_mpa)) {
    throw NumericalError("pressure command is non-finite at t = " +
                         std::to_string(t_s) + " s");
  }
  if (cmd_mpa < 0.0) return 0.0;
  if (cmd_mpa > params.pressure_max_mpa) return params.pressure_max_mpa;
  return cmd_mpa;
}

double lag_rate(const PressureLag& lag, double cmd_mpa, double p_mpa) {
  const double tau = cmd_mpa > p_mpa ? lag.fill_tau_s : lag.vent_tau_s;
  return (cmd_mpa - p_mpa) / tau;
}

}  // namespace

PlantState rk4_step(const PlantParams& params, const PlantState& state,
                    double command_mpa, double dt_s, double t_s,
                    const ForceSignal& external_force) {
  if (!(dt_s > 0.0)) {
    throw ValidationError("time step must be positive");
  }
  const auto f_ext = [&](double t) {
    return external_force ? external_force(t) : 0.0;
  };
  const double u = clamp_command(params, command_mpa, t_s);
  const double t_mid = t_s + 0.5 * dt_s;
  const double t_end = t_s + dt_s;
  double y = state.y_mm;
  double v = state.v_mm_s;

  if (!params.pressure_lag) {
    const auto k1 = plant_derivatives(params, y, v, u, f_ext(t_s));
    const auto k2 = plant_derivatives(params, y + 0.5 * dt_s * k1.dy_dt,
                                      v + 0.5 * dt_s * k1.dv_dt, u,
                                      f_ext(t_mid));
    const auto k3 = plant_derivatives(params, y + 0.5 * dt_s * k2.dy_dt,
                                      v + 0.5 * dt_s * k2.dv_dt, u,
                                      f_ext(t_mid));
    const auto k4 = plant_derivatives(params, y + dt_s * k3.dy_dt,
                                      v + dt_s * k3.dv_dt, u, f_ext(t_end));
    y += dt_s / 6.0 * (k1.dy_dt + 2.0 * k2.dy_dt + 2.0 * k3.dy_dt + k4.dy_dt);
    v += dt_s / 6.0 * (k1.dv_dt + 2.0 * k2.dv_dt + 2.0 * k3.dv_dt + k4.dv_dt);
    return PlantState{y, v, u};
  }

  const PressureLag& lag = *params.pressure_lag;
  double p = state.p_mpa;
  const auto k1 = plant_derivatives(params, y, v, p, f_ext(t_s));
  const double kp1 = lag_rate(lag, u, p);
  const auto k2 = plant_derivatives(params, y + 0.5 * dt_s * k1.dy_dt,
                                    v + 0.5 * dt_s * k1.dv_dt,
                                    p + 0.5 * dt_s * kp1, f_ext(t_mid));
  const double kp2 = lag_rate(lag, u, p + 0.5 * dt_s * kp1);
  const auto k3 = plant_derivatives(params, y + 0.5 * dt_s * k2.dy_dt,
                                    v + 0.5 * dt_s * k2.dv_dt,
                                    p + 0.5 * dt_s * kp2, f_ext(t_mid));
  const double kp3 = lag_rate(lag, u, p + 0.5 * dt_s * kp2);
  const auto k4 = plant_derivatives(params, y + dt_s * k3.dy_dt,
                                    v + dt_s * k3.dv_dt, p + dt_s * kp3,
                                    f_ext(t_end));
  const double kp4 = lag_rate(lag, u, p + dt_s * kp3);
  y += dt_s / 6.0 * (k1.dy_dt + 2.0 * k2.dy_dt + 2.0 * k3.dy_dt + k4.dy_dt);
  v += dt_s / 6.0 * (k1.dv_dt + 2.0 * k2.dv_dt + 2.0 * k3.dv_dt + k4.dv_dt);
  p += dt_s / 6.0 * (kp1 + 2.0 * kp2 + 2.0 * kp3 + kp4);
  return PlantState{y, v, p};
}

SimTrace integrate_rk4(const PlantParams& params, double y0_mm,
                       double v0_mm_s, const PressureSignal& command,
                       double dt_s, double duration_s,
                       const ForceSignal& external_force) {
  if (!command) {
    throw ValidationError("pressure command signal is required");
  }
  if (!(dt_s > 0.0) || !(duration_s > 0.0)) {
    throw ValidationError("time step and duration must be positive");
  }
  if (!std::isfinite(y0_mm) || !std::isfinite(v0_mm_s)) {
    throw ValidationError("initial state must be finite");
  }

  const auto f_ext = [&](double t) {
    return external_force ? external_force(t) : 0.0;
  };
  // Without a lag the plant pressure equals the clamped command; with one it
  // becomes a third state integrated alongside (y, v).
  const bool lagged = params.pressure_lag.has_value();

  const long long n_steps =
      std::max<long long>(1, std::llround(duration_s / dt_s));

  SimTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

  double y = y0_mm;
  double v = v0_mm_s;
  double p = lagged ? 0.0 : clamp_command(params, command(0.0), 0.0);

  const auto record = [&](double t) {
    const double u = clamp_command(params, command(t), t);
    const double p_now = lagged ? p : u;
    trace.samples.push_back(TraceSample{t, 0.0, y, v, p_now, u, -y});
  };
  record(0.0);

  for (long long i = 0; i < n_steps; ++i) {
    const double t = static_cast<double>(i) * dt_s;
    const double t_mid = t + 0.5 * dt_s;
    const double t_end = t + dt_s;
    const double u0 = clamp_command(params, command(t), t);
    const double u_mid = clamp_command(params, command(t_mid), t_mid);
    const double u1 = clamp_command(params, command(t_end), t_end);

    if (!lagged) {
      const auto k1 = plant_derivatives(params, y, v, u0, f_ext(t));
      const auto k2 = plant_derivatives(params, y + 0.5 * dt_s * k1.dy_dt,
                                        v + 0.5 * dt_s * k1.dv_dt, u_mid,
                                        f_ext(t_mid));
      const auto k3 = plant_derivatives(params, y + 0.5 * dt_s * k2.dy_dt,
                                        v + 0.5 * dt_s * k2.dv_dt, u_mid,
                                        f_ext(t_mid));
      const auto k4 = plant_derivatives(params, y + dt_s * k3.dy_dt,
                                        v + dt_s * k3.dv_dt, u1, f_ext(t_end));
      y += dt_s / 6.0 *
           (k1.dy_dt + 2.0 * k2.dy_dt + 2.0 * k3.dy_dt + k4.dy_dt);
      v += dt_s / 6.0 *
           (k1.dv_dt + 2.0 * k2.dv_dt + 2.0 * k3.dv_dt + k4.dv_dt);
    } else {
      const PressureLag& lag = *params.pressure_lag;
      const auto k1 = plant_derivatives(params, y, v, p, f_ext(t));
      const double kp1 = lag_rate(lag, u0, p);
      const auto k2 =
          plant_derivatives(params, y + 0.5 * dt_s * k1.dy_dt,
                            v + 0.5 * dt_s * k1.dv_dt, p + 0.5 * dt_s * kp1,
                            f_ext(t_mid));
      const double kp2 = lag_rate(lag, u_mid, p + 0.5 * dt_s * kp1);
      const auto k3 =
          plant_derivatives(params, y + 0.5 * dt_s * k2.dy_dt,
                            v + 0.5 * dt_s * k2.dv_dt, p + 0.5 * dt_s * kp2,
                            f_ext(t_mid));
      const double kp3 = lag_rate(lag, u_mid, p + 0.5 * dt_s * kp2);
      const auto k4 = plant_derivatives(params, y + dt_s * k3.dy_dt,
                                        v + dt_s * k3.dv_dt, p + dt_s * kp3,
                                        f_ext(t_end));
      const double kp4 = lag_rate(lag, u1, p + dt_s * kp3);
      y += dt_s / 6.0 *
           (k1.dy_dt + 2.0 * k2.dy_dt + 2.0 * k3.dy_dt + k4.dy_dt);
      v += dt_s / 6.0 *
           (k1.dv_dt + 2.0 * k2.dv_dt + 2.0 * k3.dv_dt + k4.dv_dt);
      p += dt_s / 6.0 * (kp1 + 2.0 * kp2 + 2.0 * kp3 + kp4);
    }

    if (std::abs(y) > 1e9 || std::abs(v) > 1e9) {
      throw NumericalError("simulation diverged at t = " +
                           std::to_string(t_end) + " s");
    }
    record(t_end);
  }
  return trace;
}

}  // namespace sleevesim
