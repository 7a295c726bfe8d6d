#pragma once

#include <optional>

#include "sleevesim/plant.hpp"
#include "sleevesim/trajectory.hpp"

namespace sleevesim {

/// Fraction of the final value defining the settling band (+/-2%).
inline constexpr double kSettlingBandFraction = 0.02;

/// Tracking quality measures of one simulation trace.
/// Conventions, since the usual textbook definitions leave corners open:
///  - The final value is the last trace sample.
///  - Rise time is the 10% -> 90% transition of y between its initial and
///    final values, crossing times linearly interpolated; zero when the
///    trace starts at the final value.
///  - Settling time is the earliest time after which |y - final| stays
///    within 2% of |final|; for a near-zero final value an absolute band of
///    0.02 mm is used.
///  - Overshoot is the peak excursion beyond the final value in the
///    direction of travel, as a percentage of |final|.
///  - steady_state_error is the signed setpoint - y at the final sample.
///  - rmse is the root-mean-square error over the post-settling window (the
///    whole trace when the response never settles).
///  - For sinusoid trajectories, amplitude_ratio and phase_lag_deg come from
///    a least-squares sinusoid fit at the command frequency over the final
///    three command cycles.
struct ResponseMetrics {
  double rise_time_s;
  double settling_time_s;
  double overshoot_percent;
  double steady_state_error_mm;
  double rmse_mm;
  std::optional<double> amplitude_ratio;
  std::optional<double> phase_lag_deg;
};

ResponseMetrics response_metrics(const SimTrace& trace,
                                 const TrajectorySpec& trajectory);

/// Least-squares fit of a + b cos + c sin at a fixed frequency, reduced to
/// amplitude and phase: y(t) ~ offset + amplitude * sin(2 pi f t - phase).
/// Exposed for direct use on synthetic signals.
struct SinusoidFit {
  double offset_mm;
  double amplitude_mm;
  double phase_deg;  // positive = lag
};

/// Fits over samples with t >= t_start. Needs at least 3 samples there.
SinusoidFit fit_sinusoid(const SimTrace& trace, double frequency_hz,
                         double t_start_s);

}  // namespace sleevesim
