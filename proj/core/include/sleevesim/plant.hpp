#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sleevesim/stiffness.hpp"

namespace sleevesim {

/// First-order pressure actuator lag with separate fill and vent time
/// constants: dP/dt = (P_cmd - P)/tau, tau picked by the sign of P_cmd - P.
struct PressureLag {
  double fill_tau_s;
  double vent_tau_s;
};

/// Lumped axial dynamics of the actuator: a mass driven by pressure over the
/// effective area against viscous damping and the stiffness cubic.
struct PlantParams {
  double mass_kg;
  double damping_n_s_per_mm;
  double effective_area_mm2;  // A1 + A2 - A3
  StiffnessCubic stiffness;
  std::optional<PressureLag> pressure_lag;
  double pressure_max_mpa;

  PlantParams(double mass_kg, double damping_n_s_per_mm,
              double effective_area_mm2, StiffnessCubic stiffness,
              std::optional<PressureLag> pressure_lag = std::nullopt,
              double pressure_max_mpa = 0.2);
};

struct TraceSample {
  double t_s;
  double setpoint_mm;
  double y_mm;
  double v_mm_s;
  double p_mpa;  // pressure acting on the plant
  double u_mpa;  // commanded pressure (post-limit, pre-lag)
  double e_mm;   // setpoint - y
};

/// Uniform-time-grid simulation record.
struct SimTrace {
  std::vector<TraceSample> samples;

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
  const TraceSample& front() const { return samples.front(); }
  const TraceSample& back() const { return samples.back(); }
  /// Grid spacing; needs at least two samples.
  double dt_s() const;
};

struct PlantDerivatives {
  double dy_dt;  // mm/s
  double dv_dt;  // mm/s^2
};

/// dy/dt = v; dv/dt = (1000/M)(A P - b v - FK(y) + F_ext). The factor 1000
/// converts N/kg (= m/s^2) to mm/s^2 so the whole state stays in mm.
/// Non-finite inputs are rejected.
PlantDerivatives plant_derivatives(const PlantParams& params, double y_mm,
                                   double v_mm_s, double pressure_mpa,
                                   double external_force_n = 0.0);

/// Commanded pressure in MPa as a function of time.
using PressureSignal = std::function<double(double t_s)>;
/// Additive external axial force in N as a function of time (disturbances).
using ForceSignal = std::function<double(double t_s)>;

struct PlantState {
  double y_mm;
  double v_mm_s;
  double p_mpa;
};

/// One RK4 step of duration dt under a constant (zero-order-hold) pressure
/// command starting at time t_s. The command is clamped to the plant's
/// pressure limits; with a lag configured the state pressure relaxes toward
/// it, otherwise the returned pressure equals the clamped command.
PlantState rk4_step(const PlantParams& params, const PlantState& state,
                    double command_mpa, double dt_s, double t_s,
                    const ForceSignal& external_force = nullptr);

/// Classical fixed-step 4th-order Runge-Kutta integration of the plant under
/// a commanded pressure signal. Commands are clamped to [0, pressure_max];
/// when a pressure lag is configured the plant pressure follows the command
/// through the first-order lag (integrated as part of the RK4 state),
/// otherwise it equals the command. Starts from rest pressure 0.
/// Throws NumericalError if |y| or |v| exceeds 1e9 (divergence).
SimTrace integrate_rk4(const PlantParams& params, double y0_mm,
                       double v0_mm_s, const PressureSignal& command,
                       double dt_s, double duration_s,
                       const ForceSignal& external_force = nullptr);

}  // namespace sleevesim
