// Acceptance gate: one self-checking scenario per release criterion, each
// printed as a [PASS]/[FAIL] line with its runtime. Exit code is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sleevesim/fold_geometry.hpp"
#include "sleevesim/frequency.hpp"
#include "sleevesim/hyperelastic.hpp"
#include "sleevesim/metrics.hpp"
#include "sleevesim/plant.hpp"
#include "sleevesim/simulation.hpp"
#include "sleevesim/statics.hpp"
#include "sleevesim/stiffness.hpp"

using namespace sleevesim;

namespace {

struct CheckFailure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure{message};
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Deterministic standard-normal draws (Box-Muller over mt19937).
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
    spare_ = mag * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * kPi * u2);
  }

 private:
  std::mt19937 rng_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

ActuatorGeometry default_sleeve() {
  return ActuatorGeometry(30.0, 80.0, 16.0, 30.0, 0.8, 12, 0.96, 1.6, 85.0,
                          derive_wall_radii(30.0, 0.96));
}

PlantParams reference_plant(std::optional<PressureLag> lag = std::nullopt,
                            double damping = 0.05) {
  const ActuatorGeometry geom = default_sleeve();
  const ProjectedAreas areas = projected_areas(geom, geom.fold_spec());
  return PlantParams(2.0, damping, areas.effective_mm2(),
                     StiffnessCubic::l13(), lag);
}

PidGains reference_gains() {
  return PidGains{0.01, 0.05, 0.0005, 0.0, 0.2, 1e-3};
}

const double kEquilibriumPressuresMpa[] = {0.025, 0.050, 0.075, 0.100, 0.125};

double terminal_displacement(double pressure_mpa, double dt_s) {
  const SimTrace trace = integrate_rk4(
      reference_plant(), 0.0, 0.0,
      [pressure_mpa](double) { return pressure_mpa; }, dt_s, 3.0);
  return trace.back().y_mm;
}

// ---- criteria ----

void criterion_1_cubic_derivative() {
  const StiffnessCubic poly = StiffnessCubic::l13();
  // dFK/dy = 3a y^2 + 2b y + c; the three derivative coefficients.
  const double coef2 = 3.0 * poly.a;
  const double coef1 = 2.0 * poly.b;
  const double coef0 = poly.c;
  require(rel_err(coef2, 1.24443e-3) <= 1e-4,
          "quadratic stiffness coefficient off: " + num(coef2));
  require(rel_err(coef1, 2.5730e-2) <= 1e-4,
          "linear stiffness coefficient off: " + num(coef1));
  require(rel_err(coef0, 2.0789) <= 1e-4,
          "constant stiffness coefficient off: " + num(coef0));
  // And the evaluated derivative agrees with those coefficients.
  for (double y : {0.0, 5.0, 17.5, 40.0}) {
    const double direct = coef2 * y * y + coef1 * y + coef0;
    require(rel_err(axial_stiffness(poly, y), direct) <= 1e-4,
            "stiffness derivative mismatch at y = " + num(y));
  }
}

void criterion_2_stiffness_endpoints() {
  const StiffnessCubic poly = StiffnessCubic::l13();
  require(rel_err(stiffness_force(poly, 0.0), -0.2246) <= 1e-9,
          "rest force FK(0) off: " + num(stiffness_force(poly, 0.0)));
  require(rel_err(axial_stiffness(poly, 0.0), 2.0789) <= 1e-9,
          "rest stiffness K(0) off: " + num(axial_stiffness(poly, 0.0)));

  std::vector<ForceDisplacementSample> line;
  for (int i = 0; i <= 30; ++i) {
    const double y = static_cast<double>(i);
    line.push_back({y, 1.71642 * y});
  }
  const IntervalStiffnessReport bins =
      interval_stiffness(ForceDisplacementDataset(std::move(line)), 5.0);
  require(bins.size() == 6, "expected 6 bins over 30 mm");
  for (const StiffnessInterval& bin : bins) {
    require(rel_err(bin.stiffness_n_per_m, 1716.42) <= 1e-9,
            "secant stiffness off in bin starting " + num(bin.from_mm) +
                " mm: " + num(bin.stiffness_n_per_m));
  }
}

void criterion_3_stress_energy_consistency() {
  const MaterialModel models[] = {MaterialModel::tpu85(),
                                  MaterialModel::tpu95()};
  for (const MaterialModel& m : models) {
    require(strain_energy(m, StretchState(1.0, 1.0, 1.0)) == 0.0,
            "identity state stores energy");
    require(uniaxial_nominal_stress(m, 1.0) == 0.0,
            "unit stretch carries stress");
    const double h = 1e-6;
    for (double lambda = 1.01; lambda <= 6.0 + 1e-12; lambda += 0.01) {
      const double fd = (strain_energy(m, StretchState::uniaxial(lambda + h)) -
                         strain_energy(m, StretchState::uniaxial(lambda - h))) /
                        (2.0 * h);
      const double p = uniaxial_nominal_stress(m, lambda);
      require(std::abs(fd - p) <= 1e-6 * std::max(1.0, std::abs(p)),
              "stress is not the energy derivative at lambda = " +
                  num(lambda) + " (fd " + num(fd) + ", analytic " + num(p) +
                  ")");
    }
  }
}

void criterion_4_material_fit_roundtrip() {
  const MaterialModel truth = MaterialModel::tpu85();
  const auto sample = [&](double noise_frac, std::uint32_t seed) {
    Gaussian gauss(seed);
    std::vector<StressStrainSample> samples;
    for (int i = 0; i < 50; ++i) {
      const double lambda = 1.05 + (6.0 - 1.05) * i / 49.0;
      double stress = uniaxial_nominal_stress(truth, lambda);
      if (noise_frac != 0.0) stress *= 1.0 + noise_frac * gauss();
      samples.push_back({lambda - 1.0, stress});
    }
    return StressStrainDataset(std::move(samples));
  };

  const MaterialFitReport clean =
      fit_linear_family(sample(0.0, 1), HyperelasticFamily::kMooneyRivlin5);
  for (std::size_t i = 0; i < 5; ++i) {
    require(rel_err(clean.model.coefficients()[i],
                    truth.coefficients()[i]) <= 1e-6,
            "noiseless fit missed coefficient " + std::to_string(i) + ": " +
                num(clean.model.coefficients()[i]));
  }

  const StressStrainDataset noisy = sample(0.01, 42);
  const MaterialFitReport fit =
      fit_linear_family(noisy, HyperelasticFamily::kMooneyRivlin5);
  double peak = 0.0;
  double rms = 0.0;
  for (const auto& s : noisy.samples()) {
    const double lambda = 1.0 + s.strain;
    const double clean_p = uniaxial_nominal_stress(truth, lambda);
    const double pred = uniaxial_nominal_stress(fit.model, lambda);
    peak = std::max(peak, std::abs(clean_p));
    rms += (pred - clean_p) * (pred - clean_p);
  }
  rms = std::sqrt(rms / static_cast<double>(noisy.size()));
  require(rms <= 0.02 * peak, "noisy-fit stress RMS " + num(rms) +
                                  " exceeds 2% of peak " + num(peak));
}

void criterion_5_static_dynamic_agreement() {
  const ActuatorGeometry geom = default_sleeve();
  const StiffnessCubic poly = StiffnessCubic::l13();
  for (double p : kEquilibriumPressuresMpa) {
    const double y_static = max_extension(geom, geom.fold_spec(), poly, p);
    const double y_dynamic = terminal_displacement(p, 1e-4);
    require(rel_err(y_dynamic, y_static) <= 1e-3,
            "terminal displacement " + num(y_dynamic) +
                " disagrees with the force-balance root " + num(y_static) +
                " at " + num(p * 1000.0) + " kPa");
  }
}

void criterion_6_force_curve_shape() {
  const ActuatorGeometry geom = default_sleeve();
  const FoldSpec spec = geom.fold_spec();
  const StiffnessCubic poly = StiffnessCubic::l13();
  const double pressure = 0.125;
  const double y_star = max_extension(geom, spec, poly, pressure);

  const int n = 2000;
  const double y_hi = 1.25 * extension_total(spec) / 4.0 * 4.0;
  std::vector<double> grid;
  for (int i = 0; i <= n; ++i) grid.push_back(y_hi * i / n);
  const std::vector<StaticState> curve =
      force_displacement_curve(geom, spec, poly, pressure, grid);

  int crossing = -1;
  for (int i = 1; i <= n; ++i) {
    require(curve[i].net_force_n < curve[i - 1].net_force_n,
            "force curve is not strictly decreasing at index " +
                std::to_string(i));
    if (crossing < 0 && curve[i - 1].net_force_n > 0.0 &&
        curve[i].net_force_n <= 0.0) {
      crossing = i;
    }
  }
  require(crossing > 0, "force curve never crosses zero");
  require(curve[crossing - 1].displacement_mm <= y_star &&
              y_star <= curve[crossing].displacement_mm,
          "bisection root " + num(y_star) + " outside the curve's crossing "
          "interval");

  // Independent fine-grid scan: first sign flip within one step of the root.
  const double h = 1e-4;
  double y_scan = -1.0;
  for (double y = 0.0; y <= y_hi; y += h) {
    if (net_force(geom, spec, poly, pressure, y).net_force_n <= 0.0) {
      y_scan = y;
      break;
    }
  }
  require(y_scan >= 0.0, "fine scan found no sign change");
  require(std::abs(y_scan - y_star) <= h,
          "fine-scan crossing " + num(y_scan) +
              " further than one step from the root " + num(y_star));
}

void criterion_7_tracking_properties() {
  const PidGains gains = reference_gains();

  // Step: the integrator wipes out the steady-state error.
  const SimTrace step_trace = simulate_closed_loop(
      reference_plant(), gains, TrajectorySpec::step(15.0, 10.0), 1e-4);
  require(std::abs(step_trace.back().e_mm) < 1e-4,
          "step steady-state error " + num(step_trace.back().e_mm) +
              " mm not below 1e-4 mm");

  // Ramp: finite lag that scales with the slope (one net integration in the
  // loop). Matched end displacement keeps both runs in the same regime.
  const SimTrace slow_ramp = simulate_closed_loop(
      reference_plant(), gains, TrajectorySpec::ramp(1.5, 10.0, 10.0), 1e-4);
  const SimTrace fast_ramp = simulate_closed_loop(
      reference_plant(), gains, TrajectorySpec::ramp(3.0, 5.0, 5.0), 1e-4);
  const double e_slow = slow_ramp.back().e_mm;
  const double e_fast = fast_ramp.back().e_mm;
  require(e_slow > 1e-3, "slow-ramp lag " + num(e_slow) + " mm not finite");
  const double ratio = e_fast / e_slow;
  require(ratio >= 1.9 && ratio <= 2.1,
          "doubling the slope scaled the ramp lag by " + num(ratio) +
              ", expected 2 within 5%");

  // Sinusoid: with the pressure lag in the loop the response attenuates and
  // lags more as the command speeds up.
  const PlantParams lag_plant = reference_plant(PressureLag{0.08, 0.10});
  double prev_phase = -1.0;
  double prev_ratio = 2.0;
  for (double f : {0.2, 0.4, 0.8}) {
    const TrajectorySpec traj =
        TrajectorySpec::sinusoid(5.0, 10.0, f, 10.0 + 3.0 / f);
    const SimTrace trace = simulate_closed_loop(lag_plant, gains, traj, 1e-4);
    const ResponseMetrics m = response_metrics(trace, traj);
    require(m.amplitude_ratio.has_value() && m.phase_lag_deg.has_value(),
            "sinusoid metrics missing the frequency-domain fields");
    require(*m.amplitude_ratio <= 1.0 + 1e-9,
            "amplitude ratio " + num(*m.amplitude_ratio) + " above 1 at " +
                num(f) + " Hz");
    require(*m.phase_lag_deg > prev_phase,
            "phase lag not increasing at " + num(f) + " Hz");
    require(*m.amplitude_ratio < prev_ratio,
            "amplitude ratio not decreasing at " + num(f) + " Hz");
    prev_phase = *m.phase_lag_deg;
    prev_ratio = *m.amplitude_ratio;
  }

  // Phase recovery: a known injected lag comes back from the fitter.
  const double injected_deg = 19.5;
  SimTrace synthetic;
  for (double t = 0.0; t <= 10.0; t += 1e-3) {
    const double y =
        10.0 + 5.0 * std::sin(2.0 * kPi * 0.5 * t - deg_to_rad(injected_deg));
    synthetic.samples.push_back(TraceSample{t, 0.0, y, 0.0, 0.0, 0.0, 0.0});
  }
  const SinusoidFit fit = fit_sinusoid(synthetic, 0.5, 4.0);
  require(std::abs(fit.phase_deg - injected_deg) <= 0.1,
          "recovered phase " + num(fit.phase_deg) + " deg off by more than "
          "0.1 deg");
}

void criterion_8_frequency_sweep() {
  const std::vector<FrequencyPoint> sweep = frequency_response(
      reference_plant(PressureLag{0.08, 0.10}, 0.2), SquareDrive{0.125}, 0.1,
      2.0, 0.1, 1e-3);
  require(sweep.size() == 20,
          "expected 20 sweep points, got " + std::to_string(sweep.size()));
  int crossings = 0;
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    require(sweep[i].amplitude_mm <= sweep[i - 1].amplitude_mm * (1.0 + 1e-12),
            "amplitude increased at " + num(sweep[i].frequency_hz) + " Hz");
    if (sweep[i - 1].amplitude_db > -3.0 && sweep[i].amplitude_db <= -3.0) {
      ++crossings;
    }
  }
  require(crossings == 1, "expected a unique -3 dB crossing, found " +
                              std::to_string(crossings));
  const double bw = bandwidth_hz(sweep);
  require(bw > sweep.front().frequency_hz && bw < sweep.back().frequency_hz,
          "bandwidth " + num(bw) + " Hz outside the sweep interior");

  // Synthetic first-order magnitude curve: the interpolated -3 dB crossing
  // lands within 2% of the analytic corner.
  const double fc = 0.65;
  std::vector<FrequencyPoint> synthetic;
  double peak = 0.0;
  for (int i = 1; i <= 60; ++i) {
    const double f = 0.05 * i;
    const double amp = 1.0 / std::sqrt(1.0 + (f / fc) * (f / fc));
    peak = std::max(peak, amp);
    synthetic.push_back({f, amp, 0.0});
  }
  for (FrequencyPoint& p : synthetic) {
    p.amplitude_db = 20.0 * std::log10(p.amplitude_mm / peak);
  }
  const double bw_syn = bandwidth_hz(synthetic);
  require(rel_err(bw_syn, fc) <= 0.02,
          "synthetic corner recovered at " + num(bw_syn) + " Hz, expected " +
              num(fc) + " Hz within 2%");
}

void criterion_9_geometry_trends() {
  // Extension falls with steeper folds.
  double prev = 1e300;
  for (int deg = 30; deg <= 40; ++deg) {
    const FoldSpec spec = FoldSpec::from_fold_width(16.0, deg, 4);
    const double ext = extension_total(spec);
    require(ext < prev, "extension not strictly decreasing at " +
                            std::to_string(deg) + " deg");
    prev = ext;
  }
  // And grows with wider folds.
  prev = -1.0;
  for (int fw = 8; fw <= 16; ++fw) {
    const FoldSpec spec = FoldSpec::from_fold_width(fw, 30.0, 4);
    const double ext = extension_total(spec);
    require(ext > prev, "extension not strictly increasing at fw = " +
                            std::to_string(fw) + " mm");
    prev = ext;
  }
  // Contraction rises with the fold angle.
  prev = -1.0;
  for (int deg = 30; deg <= 40; ++deg) {
    const FoldSpec spec = FoldSpec::from_fold_width(16.0, deg, 4);
    const double con = contraction_total(spec);
    require(con > prev, "contraction not strictly increasing at " +
                            std::to_string(deg) + " deg");
    prev = con;
  }
  // Bend angle is linear in the fold count.
  const double base = bend_angle_consistent(10.0, 30.0, 1.6, 1);
  require(bend_angle_consistent(10.0, 30.0, 1.6, 2) == 2.0 * base,
          "bend angle not exactly doubled by doubling the fold count");
  require(rel_err(bend_angle_consistent(10.0, 30.0, 1.6, 3), 3.0 * base) <=
              1e-12,
          "bend angle not tripled by tripling the fold count");
}

void criterion_10_step_halving() {
  for (double p : kEquilibriumPressuresMpa) {
    const double coarse = terminal_displacement(p, 1e-3);
    const double fine = terminal_displacement(p, 5e-4);
    require(rel_err(fine, coarse) < 1e-6,
            "halving dt moved the terminal displacement by " +
                num(rel_err(fine, coarse)) + " at " + num(p * 1000.0) +
                " kPa");
  }
}

struct Criterion {
  const char* description;
  void (*run)();
  double budget_s;  // <= 0: no runtime requirement
};

const Criterion kCriteria[] = {
    {"calibrated cubic derivative matches its printed coefficients",
     criterion_1_cubic_derivative, 1e-3},
    {"stiffness endpoints and interval secants", criterion_2_stiffness_endpoints,
     0.0},
    {"uniaxial stress equals the strain-energy derivative for both TPU sets",
     criterion_3_stress_energy_consistency, 1.0},
    {"five-term material fit round-trips cleanly and survives 1% noise",
     criterion_4_material_fit_roundtrip, 1.0},
    {"dynamic terminal displacement matches the static force-balance root",
     criterion_5_static_dynamic_agreement, 5.0},
    {"force-displacement curve decreases and crosses zero at max extension",
     criterion_6_force_curve_shape, 0.0},
    {"step, ramp, and sinusoid tracking properties of the PID loop",
     criterion_7_tracking_properties, 10.0},
    {"lagged frequency sweep rolls off to a unique -3 dB bandwidth",
     criterion_8_frequency_sweep, 0.0},
    {"stroke and bend-angle trends across the geometry space",
     criterion_9_geometry_trends, 1.0},
    {"halving the integration step leaves terminal displacements unchanged",
     criterion_10_step_halving, 0.0},
};

}  // namespace

int main() {
  int failures = 0;
  for (std::size_t i = 0; i < std::size(kCriteria); ++i) {
    const Criterion& c = kCriteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.run();
    } catch (const CheckFailure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (failure.empty() && c.budget_s > 0.0 && elapsed > c.budget_s) {
      failure = "runtime " + num(elapsed) + " s exceeds the " +
                num(c.budget_s) + " s budget";
    }
    if (failure.empty()) {
      std::printf("[PASS] %zu. %s (%.1f ms)\n", i + 1, c.description,
                  elapsed * 1e3);
    } else {
      ++failures;
      std::printf("[FAIL] %zu. %s (%.1f ms): %s\n", i + 1, c.description,
                  elapsed * 1e3, failure.c_str());
    }
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures,
                std::size(kCriteria));
  } else {
    std::printf("all %zu criteria passed\n", std::size(kCriteria));
  }
  return failures;
}
