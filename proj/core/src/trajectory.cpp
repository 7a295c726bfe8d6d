#include "sleevesim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "sleevesim/errors.hpp"
#include "sleevesim/fold_geometry.hpp"

namespace sleevesim {

namespace {

void check_duration(double duration_s) {
  if (!(duration_s > 0.0) || !std::isfinite(duration_s)) {
    throw ValidationError("trajectory duration must be positive");
  }
}

double parse_number(const std::string& key, const std::string& text) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw ValidationError("trajectory parameter '" + key +
                          "' is not a number: '" + text + "'");
  }
  if (consumed != text.size() || !std::isfinite(value)) {
    throw ValidationError("trajectory parameter '" + key +
                          "' is not a finite number: '" + text + "'");
  }
  return value;
}

}  // namespace

TrajectorySpec TrajectorySpec::step(double amplitude_mm, double duration_s) {
  check_duration(duration_s);
  if (!std::isfinite(amplitude_mm)) {
    throw ValidationError("step amplitude must be finite");
  }
  TrajectorySpec spec;
  spec.kind_ = TrajectoryKind::kStep;
  spec.amplitude_mm_ = amplitude_mm;
  spec.duration_s_ = duration_s;
  return spec;
}

TrajectorySpec TrajectorySpec::ramp(double slope_mm_s, double ramp_duration_s,
                                    double duration_s) {
  check_duration(duration_s);
  if (!std::isfinite(slope_mm_s)) {
    throw ValidationError("ramp slope must be finite");
  }
  if (!(ramp_duration_s > 0.0)) {
    throw ValidationError("ramp duration must be positive");
  }
  TrajectorySpec spec;
  spec.kind_ = TrajectoryKind::kRamp;
  spec.slope_mm_s_ = slope_mm_s;
  spec.ramp_duration_s_ = ramp_duration_s;
  spec.duration_s_ = duration_s;
  return spec;
}

TrajectorySpec TrajectorySpec::sinusoid(double amplitude_mm, double offset_mm,
                                        double frequency_hz,
                                        double duration_s) {
  check_duration(duration_s);
  if (!std::isfinite(amplitude_mm) || !std::isfinite(offset_mm)) {
    throw ValidationError("sinusoid amplitude and offset must be finite");
  }
  if (!(frequency_hz > 0.0)) {
    throw ValidationError("sinusoid frequency must be positive");
  }
  TrajectorySpec spec;
  spec.kind_ = TrajectoryKind::kSinusoid;
  spec.amplitude_mm_ = amplitude_mm;
  spec.offset_mm_ = offset_mm;
  spec.frequency_hz_ = frequency_hz;
  spec.duration_s_ = duration_s;
  return spec;
}

TrajectorySpec TrajectorySpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ValidationError("trajectory must look like "
                          "'kind:key=value,key=value', got '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);

  std::map<std::string, double> kv;
  std::size_t pos = colon + 1;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string pair = text.substr(pos, next - pos);
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ValidationError("trajectory parameter '" + pair +
                            "' must look like key=value");
    }
    const std::string key = pair.substr(0, eq);
    if (kv.count(key)) {
      throw ValidationError("duplicate trajectory parameter '" + key + "'");
    }
    kv[key] = parse_number(key, pair.substr(eq + 1));
    pos = next + 1;
  }

  const auto take = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw ValidationError(std::string("trajectory is missing required "
                                        "parameter '") + key + "'");
    }
    const double v = it->second;
    kv.erase(it);
    return v;
  };
  const auto take_or = [&](const char* key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    const double v = it->second;
    kv.erase(it);
    return v;
  };
  const auto reject_leftovers = [&]() {
    if (!kv.empty()) {
      throw ValidationError("unknown trajectory parameter '" +
                            kv.begin()->first + "' for kind '" + kind + "'");
    }
  };

  if (kind == "step") {
    const double amplitude = take("amplitude");
    const double duration = take("duration");
    reject_leftovers();
    return step(amplitude, duration);
  }
  if (kind == "ramp") {
    const double slope = take("slope");
    const double duration = take("duration");
    const double ramp_duration = take_or("ramp_duration", duration);
    reject_leftovers();
    return ramp(slope, ramp_duration, duration);
  }
  if (kind == "sinusoid") {
    const double amplitude = take("amplitude");
    const double frequency = take("frequency");
    const double duration = take("duration");
    const double offset = take_or("offset", 0.0);
    reject_leftovers();
    return sinusoid(amplitude, offset, frequency, duration);
  }
  throw ValidationError("unknown trajectory kind '" + kind +
                        "' (expected step, ramp, or sinusoid)");
}

double TrajectorySpec::setpoint_mm(double t_s) const {
  switch (kind_) {
    case TrajectoryKind::kStep:
      return amplitude_mm_;
    case TrajectoryKind::kRamp:
      return slope_mm_s_ * std::min(t_s, ramp_duration_s_);
    case TrajectoryKind::kSinusoid:
      return offset_mm_ +
             amplitude_mm_ * std::sin(2.0 * kPi * frequency_hz_ * t_s);
  }
  throw ValidationError("unknown trajectory kind");
}

double TrajectorySpec::peak_setpoint_mm() const {
  switch (kind_) {
    case TrajectoryKind::kStep:
      return std::max(0.0, amplitude_mm_);
    case TrajectoryKind::kRamp:
      return std::max(0.0, slope_mm_s_ *
                               std::min(duration_s_, ramp_duration_s_));
    case TrajectoryKind::kSinusoid:
      return offset_mm_ + std::abs(amplitude_mm_);
  }
  throw ValidationError("unknown trajectory kind");
}

const char* TrajectorySpec::kind_name() const {
  switch (kind_) {
    case TrajectoryKind::kStep: return "step";
    case TrajectoryKind::kRamp: return "ramp";
    case TrajectoryKind::kSinusoid: return "sinusoid";
  }
  return "unknown";
}

}  // namespace sleevesim
