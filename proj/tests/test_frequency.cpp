#include <doctest.h>

#include <cmath>
#include <vector>

#include "sleevesim/errors.hpp"
#include "sleevesim/frequency.hpp"

using namespace sleevesim;

namespace {

PlantParams sweep_plant() {
  // Damped enough that the open-loop square-wave response rolls off
  // monotonically instead of resonating, with the fill/vent lag on top.
  return PlantParams(2.0, 0.2, 280.3607549545989, StiffnessCubic::l13(),
                     PressureLag{0.08, 0.10});
}

FrequencyPoint pt(double f, double db) {
  return FrequencyPoint{f, std::pow(10.0, db / 20.0), db};
}

}  // namespace

TEST_CASE("bandwidth interpolates the -3 dB crossing linearly in dB") {
  const std::vector<FrequencyPoint> curve = {pt(0.1, 0.0), pt(0.2, -2.0),
                                             pt(0.3, -4.0)};
  CHECK(bandwidth_hz(curve) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("bandwidth returns grid points that sit exactly on -3 dB") {
  const std::vector<FrequencyPoint> curve = {pt(0.1, 0.0), pt(0.2, -3.0),
                                             pt(0.3, -6.0)};
  CHECK(bandwidth_hz(curve) == 0.2);
}

TEST_CASE("a curve starting at or below -3 dB cuts off at the front") {
  const std::vector<FrequencyPoint> already = {pt(0.5, -3.0), pt(1.0, -5.0)};
  CHECK(bandwidth_hz(already) == 0.5);
  const std::vector<FrequencyPoint> below = {pt(0.5, -8.0), pt(1.0, -9.0)};
  CHECK(bandwidth_hz(below) == 0.5);
}

TEST_CASE("bandwidth failure modes") {
  const std::vector<FrequencyPoint> single = {pt(0.5, 0.0)};
  CHECK_THROWS_AS(bandwidth_hz(single), ValidationError);

  const std::vector<FrequencyPoint> shallow = {pt(0.5, 0.0), pt(1.0, -1.0),
                                               pt(1.5, -2.9)};
  CHECK_THROWS_WITH_AS(
      bandwidth_hz(shallow),
      "response never falls to -3 dB within the sweep range", NumericalError);
}

TEST_CASE("bandwidth of a sampled first-order magnitude curve") {
  // |H(f)| = 1 / sqrt(1 + (f/fc)^2), fc = 0.65 Hz, sampled at 0.05 Hz steps.
  // Normalizing to the first grid point (not true DC) moves the -3 dB
  // crossing slightly above fc.
  const double fc = 0.65;
  std::vector<FrequencyPoint> curve;
  double peak = 0.0;
  for (int i = 1; i <= 60; ++i) {
    const double f = 0.05 * i;
    const double amp = 1.0 / std::sqrt(1.0 + (f / fc) * (f / fc));
    peak = std::max(peak, amp);
    curve.push_back({f, amp, 0.0});
  }
  for (FrequencyPoint& p : curve) {
    p.amplitude_db = 20.0 * std::log10(p.amplitude_mm / peak);
  }
  const double bw = bandwidth_hz(curve);
  CHECK(std::abs(bw - fc) / fc < 0.02);
  CHECK(bw > fc);
}

TEST_CASE("sweep validation") {
  const PlantParams plant = sweep_plant();
  CHECK_THROWS_AS(
      frequency_response(plant, SquareDrive{0.0}, 0.1, 1.0, 0.1),
      ValidationError);
  CHECK_THROWS_AS(
      frequency_response(plant, SquareDrive{0.125, -1, 3}, 0.1, 1.0, 0.1),
      ValidationError);
  CHECK_THROWS_AS(
      frequency_response(plant, SquareDrive{0.125, 5, 0}, 0.1, 1.0, 0.1),
      ValidationError);
  CHECK_THROWS_AS(
      frequency_response(plant, SquareDrive{0.125}, 0.0, 1.0, 0.1),
      ValidationError);
  CHECK_THROWS_AS(
      frequency_response(plant, SquareDrive{0.125}, 1.0, 0.5, 0.1),
      ValidationError);
  CHECK_THROWS_AS(
      frequency_response(plant, SquareDrive{0.125}, 0.1, 1.0, 0.0),
      ValidationError);
  CHECK_THROWS_AS(
      frequency_response(plant, SquareDrive{0.125}, 0.1, 1.0, 0.1, 0.0),
      ValidationError);
}

TEST_CASE("square-wave sweep of the lagged plant rolls off monotonically") {
  const PlantParams plant = sweep_plant();
  const std::vector<FrequencyPoint> sweep =
      frequency_response(plant, SquareDrive{0.125}, 0.25, 1.5, 0.25, 1e-3);
  REQUIRE(sweep.size() == 6);
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    CHECK(sweep[i].frequency_hz ==
          doctest::Approx(0.25 * (i + 1)).epsilon(1e-12));
    CHECK(sweep[i].amplitude_mm > 0.0);
    CHECK(sweep[i].amplitude_db <= 0.0);
  }
  // Low frequencies shake the sleeve hardest.
  CHECK(sweep.front().amplitude_db == 0.0);
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    CHECK(sweep[i].amplitude_mm < sweep[i - 1].amplitude_mm);
  }
}

TEST_CASE("a single-frequency sweep normalizes to itself") {
  const PlantParams plant = sweep_plant();
  const std::vector<FrequencyPoint> sweep =
      frequency_response(plant, SquareDrive{0.125}, 1.0, 1.0, 0.5, 1e-3);
  REQUIRE(sweep.size() == 1);
  CHECK(sweep[0].amplitude_db == 0.0);
}
