#include "sleevesim/metrics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "sleevesim/errors.hpp"
#include "sleevesim/fold_geometry.hpp"

namespace sleevesim {

SinusoidFit fit_sinusoid(const SimTrace& trace, double frequency_hz,
                         double t_start_s) {
  if (!(frequency_hz > 0.0)) {
    throw ValidationError("fit frequency must be positive");
  }
  std::size_t first = 0;
  while (first < trace.size() && trace.samples[first].t_s < t_start_s) {
    ++first;
  }
  const std::size_t n = trace.size() - first;
  if (n < 3) {
    throw ValidationError("sinusoid fit needs at least 3 samples past the "
                          "window start");
  }

  const double omega = 2.0 * kPi * frequency_hz;
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = trace.samples[first + i];
    design(i, 0) = 1.0;
    design(i, 1) = std::sin(omega * s.t_s);
    design(i, 2) = std::cos(omega * s.t_s);
    rhs(i) = s.y_mm;
  }
  const Eigen::Vector3d coef =
      design.colPivHouseholderQr().solve(rhs);

  // y ~ a + b sin + c cos = a + A sin(wt - phi) with b = A cos phi,
  // c = -A sin phi.
  const double amplitude = std::hypot(coef(1), coef(2));
  double phase_rad = std::atan2(-coef(2), coef(1));
  return SinusoidFit{coef(0), amplitude, rad_to_deg(phase_rad)};
}

namespace {

// First time the normalized response reaches `level`, linearly interpolated.
double crossing_time(const SimTrace& trace, double y0, double dy,
                     double level) {
  const auto& s = trace.samples;
  double prev_frac = (s[0].y_mm - y0) / dy;
  if (prev_frac >= level) return s[0].t_s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double frac = (s[i].y_mm - y0) / dy;
    if (frac >= level) {
      if (frac == prev_frac) return s[i].t_s;
      const double t_prev = s[i - 1].t_s;
      return t_prev + (level - prev_frac) / (frac - prev_frac) *
                          (s[i].t_s - t_prev);
    }
    prev_frac = frac;
  }
  return s.back().t_s;
}

}  // namespace

ResponseMetrics response_metrics(const SimTrace& trace,
                                 const TrajectorySpec& trajectory) {
  if (trace.size() < 2) {
    throw ValidationError("metrics need a trace with at least two samples");
  }
  const auto& s = trace.samples;
  const double y0 = s.front().y_mm;
  const double yf = s.back().y_mm;
  const double dy = yf - y0;

  ResponseMetrics m{};

  if (std::abs(dy) < 1e-12 * std::max(1.0, std::abs(yf))) {
    m.rise_time_s = 0.0;
  } else {
    const double t10 = crossing_time(trace, y0, dy, 0.1);
    const double t90 = crossing_time(trace, y0, dy, 0.9);
    m.rise_time_s = std::max(0.0, t90 - t10);
  }

  const double band = std::abs(yf) > 1e-9
                          ? kSettlingBandFraction * std::abs(yf)
                          : kSettlingBandFraction;
  std::size_t settle_idx = 0;
  for (std::size_t i = s.size(); i-- > 0;) {
    if (std::abs(s[i].y_mm - yf) > band) {
      settle_idx = i + 1;
      break;
    }
  }
  m.settling_time_s = s[settle_idx].t_s;

  double peak_over = 0.0;
  if (dy >= 0.0) {
    for (const auto& sample : s) {
      peak_over = std::max(peak_over, sample.y_mm - yf);
    }
  } else {
    for (const auto& sample : s) {
      peak_over = std::max(peak_over, yf - sample.y_mm);
    }
  }
  const double overshoot_denom = std::abs(yf) > 1e-9 ? std::abs(yf) : 1.0;
  m.overshoot_percent = 100.0 * peak_over / overshoot_denom;

  m.steady_state_error_mm = s.back().e_mm;

  double sq_sum = 0.0;
  std::size_t n_rmse = 0;
  for (std::size_t i = settle_idx; i < s.size(); ++i) {
    sq_sum += s[i].e_mm * s[i].e_mm;
    ++n_rmse;
  }
  m.rmse_mm = n_rmse > 0 ? std::sqrt(sq_sum / n_rmse) : 0.0;

  if (trajectory.kind() == TrajectoryKind::kSinusoid) {
    const double period = 1.0 / trajectory.frequency_hz();
    const double t_start =
        std::max(s.front().t_s, s.back().t_s - 3.0 * period);
    const auto fit = fit_sinusoid(trace, trajectory.frequency_hz(), t_start);
    if (std::abs(trajectory.amplitude_mm()) > 0.0) {
      m.amplitude_ratio = fit.amplitude_mm /
                          std::abs(trajectory.amplitude_mm());
    }
    double phase = fit.phase_deg;
    if (phase < 0.0 && phase > -1e-9) phase = 0.0;
    m.phase_lag_deg = phase;
  }
  return m;
}

}  // namespace sleevesim
