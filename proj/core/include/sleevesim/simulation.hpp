#pragma once

#include "sleevesim/pid.hpp"
#include "sleevesim/plant.hpp"
#include "sleevesim/trajectory.hpp"

namespace sleevesim {

/// Closed-loop run: the PID controller samples the plant displacement every
/// gains.sample_time and commands pressure with zero-order hold; the plant
/// integrates at plant_dt (RK4), which must divide the sample time exactly.
/// The pressure lag, when configured on the plant, sits between command and
/// plant pressure. Starts at rest (y = v = 0, pressure 0) unless initial
/// conditions are given. An optional force signal adds an external axial
/// disturbance in N.
SimTrace simulate_closed_loop(const PlantParams& params, const PidGains& gains,
                              const TrajectorySpec& trajectory,
                              double plant_dt_s, double y0_mm = 0.0,
                              double v0_mm_s = 0.0,
                              const ForceSignal& external_force = nullptr);

}  // namespace sleevesim
