#pragma once

#include <string>

namespace sleevesim {

enum class TrajectoryKind { kStep, kRamp, kSinusoid };

/// Displacement setpoint profile for closed-loop runs: a step to a constant
/// amplitude, a ramp (with optional hold after ramp_duration), or an offset
/// sinusoid.
class TrajectorySpec {
 public:
  static TrajectorySpec step(double amplitude_mm, double duration_s);
  /// Rises at `slope_mm_s` until ramp_duration_s, holds afterwards.
  static TrajectorySpec ramp(double slope_mm_s, double ramp_duration_s,
                             double duration_s);
  static TrajectorySpec sinusoid(double amplitude_mm, double offset_mm,
                                 double frequency_hz, double duration_s);

  /// Parse a CLI trajectory description:
  ///   step:amplitude=15,duration=10
  ///   ramp:slope=1.5,ramp_duration=10,duration=10
  ///   sinusoid:amplitude=8,offset=10,frequency=0.4,duration=20
  /// Units are mm, s, Hz. Unknown keys or missing values are errors.
  static TrajectorySpec parse(const std::string& text);

  TrajectoryKind kind() const { return kind_; }
  double duration_s() const { return duration_s_; }
  double amplitude_mm() const { return amplitude_mm_; }
  double offset_mm() const { return offset_mm_; }
  double slope_mm_s() const { return slope_mm_s_; }
  double ramp_duration_s() const { return ramp_duration_s_; }
  double frequency_hz() const { return frequency_hz_; }

  double setpoint_mm(double t_s) const;

  /// Largest setpoint over the trajectory's duration.
  double peak_setpoint_mm() const;

  /// True when the peak setpoint exceeds the given stroke budget. A policy
  /// flag, not an error: callers decide whether to warn or refuse.
  bool exceeds_stroke(double max_stroke_mm) const {
    return peak_setpoint_mm() > max_stroke_mm;
  }

  const char* kind_name() const;

 private:
  TrajectorySpec() = default;

  TrajectoryKind kind_ = TrajectoryKind::kStep;
  double duration_s_ = 0.0;
  double amplitude_mm_ = 0.0;
  double offset_mm_ = 0.0;
  double slope_mm_s_ = 0.0;
  double ramp_duration_s_ = 0.0;
  double frequency_hz_ = 0.0;
};

}  // namespace sleevesim
