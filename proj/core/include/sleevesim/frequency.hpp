#pragma once

#include <span>
#include <vector>

#include "sleevesim/plant.hpp"

namespace sleevesim {

/// Open-loop square-wave pressure drive for frequency sweeps: the command
/// alternates between 0 and pressure_mpa, starting high, with the given
/// number of transient cycles discarded and measurement cycles kept.
struct SquareDrive {
  double pressure_mpa;
  int settle_cycles = 5;
  int measure_cycles = 3;
};

struct FrequencyPoint {
  double frequency_hz;
  double amplitude_mm;
  double amplitude_db;  // relative to the largest amplitude in the sweep
};

/// Drives the plant with the square wave at each frequency from f_min to
/// f_max in df steps (inclusive within half a step), integrating at
/// min(dt_hint, period/500). Amplitude per point is (max - min)/2 of y over
/// the final measure_cycles; dB values are relative to the sweep's maximum
/// amplitude.
std::vector<FrequencyPoint> frequency_response(const PlantParams& params,
                                               const SquareDrive& drive,
                                               double f_min_hz, double f_max_hz,
                                               double df_hz,
                                               double dt_hint_s = 1e-3);

/// First -3 dB crossing of the response curve, linearly interpolated between
/// the bracketing sweep points (exact when a point sits on -3 dB). Throws
/// NumericalError when the curve never reaches -3 dB.
double bandwidth_hz(std::span<const FrequencyPoint> response);

}  // namespace sleevesim
