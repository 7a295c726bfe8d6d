#pragma once

namespace sleevesim {

/// Discrete PID gains in pressure-per-displacement units, with output
/// saturation limits and the controller sample time.
struct PidGains {
  double kp_mpa_per_mm;
  double ki_mpa_per_mm_s;
  double kd_mpa_s_per_mm;
  double u_min_mpa;
  double u_max_mpa;
  double sample_time_s;
  /// Freeze the integrator while the output is saturated (clamping
  /// anti-windup). Disable only to study windup.
  bool anti_windup = true;

  void validate() const;
};

/// Mutable controller memory between samples.
struct PidState {
  double integral_mm_s = 0.0;
  double prev_error_mm = 0.0;
  double prev_measurement_mm = 0.0;
  bool primed = false;
};

/// One controller sample: trapezoidal integral, derivative on the measurement
/// (1-sample backward difference, so step setpoint changes cause no
/// derivative kick), output clamped to [u_min, u_max]. With anti-windup the
/// integrator keeps its previous value whenever the unclamped output falls
/// outside the limits. Returns the clamped command in MPa and updates state.
double pid_step(const PidGains& gains, PidState& state, double setpoint_mm,
                double measurement_mm, double dt_s);

/// Stateful convenience wrapper around pid_step.
class PidController {
 public:
  explicit PidController(PidGains gains);

  /// Advance one sample_time step.
  double update(double setpoint_mm, double measurement_mm);

  void reset();
  const PidGains& gains() const { return gains_; }
  double integrator_mm_s() const { return state_.integral_mm_s; }

 private:
  PidGains gains_;
  PidState state_;
};

}  // namespace sleevesim
