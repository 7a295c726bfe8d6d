#include "sleevesim/pid.hpp"

#include <cmath>

#include "sleevesim/errors.hpp"

namespace sleevesim {

void PidGains::validate() const {
  for (double v : {kp_mpa_per_mm, ki_mpa_per_mm_s, kd_mpa_s_per_mm, u_min_mpa,
                   u_max_mpa, sample_time_s}) {
    if (!std::isfinite(v)) {
      throw ValidationError("PID gains and limits must be finite");
    }
  }
  if (!(sample_time_s > 0.0)) {
    throw ValidationError("controller sample time must be positive");
  }
  if (!(u_min_mpa < u_max_mpa)) {
    throw ValidationError("controller output limits must satisfy "
                          "u_min < u_max");
  }
}

double pid_step(const PidGains& gains, PidState& state, double setpoint_mm,
                double measurement_mm, double dt_s) {
  if (!(dt_s > 0.0)) {
    throw ValidationError("controller step must be positive");
  }
  if (!std::isfinite(setpoint_mm) || !std::isfinite(measurement_mm)) {
    throw ValidationError("controller inputs must be finite");
  }
  const double error = setpoint_mm - measurement_mm;
  if (!state.primed) {
    state.prev_error_mm = error;
    state.prev_measurement_mm = measurement_mm;
    state.primed = true;
  }

  const double integral_candidate =
      state.integral_mm_s + 0.5 * (error + state.prev_error_mm) * dt_s;
  const double derivative =
      -(measurement_mm - state.prev_measurement_mm) / dt_s;

  const double unclamped = gains.kp_mpa_per_mm * error +
                           gains.ki_mpa_per_mm_s * integral_candidate +
                           gains.kd_mpa_s_per_mm * derivative;

  double command = unclamped;
  bool clamped = false;
  if (command < gains.u_min_mpa) {
    command = gains.u_min_mpa;
    clamped = true;
  } else if (command > gains.u_max_mpa) {
    command = gains.u_max_mpa;
    clamped = true;
  }

  if (!clamped || !gains.anti_windup) {
    state.integral_mm_s = integral_candidate;
  }
  state.prev_error_mm = error;
  state.prev_measurement_mm = measurement_mm;
  return command;
}

PidController::PidController(PidGains gains) : gains_(gains) {
  gains_.validate();
}

double PidController::update(double setpoint_mm, double measurement_mm) {
  return pid_step(gains_, state_, setpoint_mm, measurement_mm,
                  gains_.sample_time_s);
}

void PidController::reset() { state_ = PidState{}; }

}  // namespace sleevesim
