#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sleevesim/hyperelastic.hpp"
#include "sleevesim/stiffness.hpp"

namespace testutil {

// Standard-normal draws via Box-Muller on mt19937, so noisy-fit tests see
// the same sequence on every platform (std::normal_distribution does not
// promise that).
class Gaussian {
 public:
  explicit Gaussian(std::uint32_t seed) : rng_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform_(rng_);
    } while (u1 <= 0.0);
    const double u2 = uniform_(rng_);
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.28318530717958647692;
    spare_ = mag * std::sin(two_pi * u2);
    have_spare_ = true;
    return mag * std::cos(two_pi * u2);
  }

 private:
  std::mt19937 rng_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Uniaxial samples lambda in [lo, hi] from a material model; noise_frac adds
// multiplicative Gaussian noise.
inline sleevesim::StressStrainDataset synth_stress_strain(
    const sleevesim::MaterialModel& model, double lambda_lo, double lambda_hi,
    int n, double noise_frac = 0.0, std::uint32_t seed = 1) {
  Gaussian gauss(seed);
  std::vector<sleevesim::StressStrainSample> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double lambda =
        lambda_lo + (lambda_hi - lambda_lo) * i / static_cast<double>(n - 1);
    double stress = sleevesim::uniaxial_nominal_stress(model, lambda);
    if (noise_frac != 0.0) stress *= 1.0 + noise_frac * gauss();
    samples.push_back({lambda - 1.0, stress});
  }
  return sleevesim::StressStrainDataset(std::move(samples));
}

// Force-displacement samples over [0, y_max] from a stiffness cubic.
inline sleevesim::ForceDisplacementDataset synth_force_displacement(
    const sleevesim::StiffnessCubic& poly, double y_max, int n,
    double noise_frac = 0.0, std::uint32_t seed = 1) {
  Gaussian gauss(seed);
  std::vector<sleevesim::ForceDisplacementSample> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double y = y_max * i / static_cast<double>(n - 1);
    double f = sleevesim::stiffness_force(poly, y);
    if (noise_frac != 0.0) f *= 1.0 + noise_frac * gauss();
    samples.push_back({y, f});
  }
  return sleevesim::ForceDisplacementDataset(std::move(samples));
}

}  // namespace testutil
