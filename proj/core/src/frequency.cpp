#include "sleevesim/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sleevesim/errors.hpp"

namespace sleevesim {

std::vector<FrequencyPoint> frequency_response(const PlantParams& params,
                                               const SquareDrive& drive,
                                               double f_min_hz, double f_max_hz,
                                               double df_hz, double dt_hint_s) {
  if (!(drive.pressure_mpa > 0.0)) {
    throw ValidationError("square drive pressure must be positive");
  }
  if (drive.settle_cycles < 0 || drive.measure_cycles < 1) {
    throw ValidationError("drive needs nonnegative settle cycles and at "
                          "least one measurement cycle");
  }
  if (!(f_min_hz > 0.0) || !(f_max_hz >= f_min_hz) || !(df_hz > 0.0)) {
    throw ValidationError("sweep range must satisfy 0 < f_min <= f_max with "
                          "positive step");
  }
  if (!(dt_hint_s > 0.0)) {
    throw ValidationError("time step hint must be positive");
  }

  std::vector<FrequencyPoint> points;
  const int n_freq =
      static_cast<int>(std::floor((f_max_hz - f_min_hz) / df_hz + 0.5)) + 1;
  points.reserve(n_freq);

  for (int k = 0; k < n_freq; ++k) {
    const double f = f_min_hz + k * df_hz;
    const double period = 1.0 / f;
    const double dt = std::min(dt_hint_s, period / 500.0);
    const int total_cycles = drive.settle_cycles + drive.measure_cycles;
    const double duration = total_cycles * period;

    const auto square = [&](double t) {
      // First half-period high. Cycle phase in [0, 1).
      const double phase = t / period - std::floor(t / period);
      return phase < 0.5 ? drive.pressure_mpa : 0.0;
    };
    const SimTrace trace =
        integrate_rk4(params, 0.0, 0.0, square, dt, duration);

    const double t_measure_start = drive.settle_cycles * period;
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    for (const auto& s : trace.samples) {
      if (s.t_s < t_measure_start) continue;
      y_min = std::min(y_min, s.y_mm);
      y_max = std::max(y_max, s.y_mm);
    }
    points.push_back(FrequencyPoint{f, 0.5 * (y_max - y_min), 0.0});
  }

  double peak = 0.0;
  for (const auto& p : points) peak = std::max(peak, p.amplitude_mm);
  if (!(peak > 0.0)) {
    throw NumericalError("sweep produced no displacement; cannot normalize "
                         "the response");
  }
  for (auto& p : points) {
    p.amplitude_db = 20.0 * std::log10(p.amplitude_mm / peak);
  }
  return points;
}

double bandwidth_hz(std::span<const FrequencyPoint> response) {
  if (response.size() < 2) {
    throw ValidationError("bandwidth needs at least two sweep points");
  }
  constexpr double kCutoffDb = -3.0;
  if (response.front().amplitude_db <= kCutoffDb) {
    return response.front().frequency_hz;
  }
  for (std::size_t i = 1; i < response.size(); ++i) {
    const auto& lo = response[i - 1];
    const auto& hi = response[i];
    if (hi.amplitude_db <= kCutoffDb) {
      if (hi.amplitude_db == kCutoffDb) return hi.frequency_hz;
      const double t =
          (kCutoffDb - lo.amplitude_db) / (hi.amplitude_db - lo.amplitude_db);
      return lo.frequency_hz + t * (hi.frequency_hz - lo.frequency_hz);
    }
  }
  throw NumericalError("response never falls to -3 dB within the sweep "
                       "range");
}

}  // namespace sleevesim
