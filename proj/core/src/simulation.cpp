#include "sleevesim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sleevesim/errors.hpp"

namespace sleevesim {

SimTrace simulate_closed_loop(const PlantParams& params, const PidGains& gains,
                              const TrajectorySpec& trajectory,
                              double plant_dt_s, double y0_mm, double v0_mm_s,
                              const ForceSignal& external_force) {
  gains.validate();
  if (!(plant_dt_s > 0.0)) {
    throw ValidationError("plant time step must be positive");
  }
  const double ratio = gains.sample_time_s / plant_dt_s;
  const long long steps_per_sample = std::llround(ratio);
  if (steps_per_sample < 1 ||
      std::abs(steps_per_sample * plant_dt_s - gains.sample_time_s) >
          1e-9 * gains.sample_time_s) {
    throw ValidationError("plant step " + std::to_string(plant_dt_s) +
                          " s must divide the controller sample time " +
                          std::to_string(gains.sample_time_s) + " s exactly");
  }
  if (!std::isfinite(y0_mm) || !std::isfinite(v0_mm_s)) {
    throw ValidationError("initial state must be finite");
  }

  const long long n_steps = std::max<long long>(
      1, std::llround(trajectory.duration_s() / plant_dt_s));

  PidController controller(gains);
  PlantState state{y0_mm, v0_mm_s, 0.0};
  double command = 0.0;

  SimTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

  for (long long i = 0; i <= n_steps; ++i) {
    const double t = static_cast<double>(i) * plant_dt_s;
    const double setpoint = trajectory.setpoint_mm(t);
    // The command for the interval starting at t; held between controller
    // samples. No controller action at the final instant.
    if (i < n_steps && i % steps_per_sample == 0) {
      command = controller.update(setpoint, state.y_mm);
    }
    trace.samples.push_back(TraceSample{t, setpoint, state.y_mm, state.v_mm_s,
                                        params.pressure_lag
                                            ? state.p_mpa
                                            : std::min(std::max(command, 0.0),
                                                       params.pressure_max_mpa),
                                        command, setpoint - state.y_mm});
    if (i < n_steps) {
      state = rk4_step(params, state, command, plant_dt_s, t, external_force);
      if (std::abs(state.y_mm) > 1e9 || std::abs(state.v_mm_s) > 1e9) {
        throw NumericalError("closed-loop simulation diverged at t = " +
                             std::to_string(t + plant_dt_s) + " s");
      }
    }
  }
  return trace;
}

}  // namespace sleevesim
