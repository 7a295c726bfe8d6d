#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sleevesim/fold_geometry.hpp"
#include "sleevesim/hyperelastic.hpp"
#include "sleevesim/plant.hpp"
#include "sleevesim/statics.hpp"
#include "sleevesim/stiffness.hpp"

namespace {

using namespace sleevesim;

ActuatorGeometry bench_geometry() {
  return ActuatorGeometry(30.0, 80.0, 16.0, 30.0, 0.8, 12, 0.96, 1.6, 85.0,
                          derive_wall_radii(30.0, 0.96));
}

void BM_uniaxial_stress(benchmark::State& state) {
  const MaterialModel model = MaterialModel::tpu85();
  double lambda = 1.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniaxial_nominal_stress(model, lambda));
    lambda += 1e-7;
  }
}
BENCHMARK(BM_uniaxial_stress);

void BM_net_force(benchmark::State& state) {
  const ActuatorGeometry geom = bench_geometry();
  const FoldSpec spec = geom.fold_spec();
  const StiffnessCubic poly = StiffnessCubic::l13();
  double y = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(net_force(geom, spec, poly, 0.1, y));
    y = y < 20.0 ? y + 1e-6 : 0.0;
  }
}
BENCHMARK(BM_net_force);

void BM_max_extension(benchmark::State& state) {
  const ActuatorGeometry geom = bench_geometry();
  const FoldSpec spec = geom.fold_spec();
  const StiffnessCubic poly = StiffnessCubic::l13();
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_extension(geom, spec, poly, 0.1));
  }
}
BENCHMARK(BM_max_extension);

void BM_rk4_step(benchmark::State& state) {
  const ActuatorGeometry geom = bench_geometry();
  const ProjectedAreas areas = projected_areas(geom, geom.fold_spec());
  const PlantParams plant(2.0, 0.05, areas.effective_mm2(),
                          StiffnessCubic::l13());
  PlantState s{0.0, 0.0, 0.0};
  double t = 0.0;
  for (auto _ : state) {
    s = rk4_step(plant, s, 0.1, 1e-4, t);
    t += 1e-4;
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_rk4_step);

void BM_fit_cubic(benchmark::State& state) {
  const StiffnessCubic truth = StiffnessCubic::l13();
  std::vector<ForceDisplacementSample> samples;
  for (int i = 0; i <= 40; ++i) {
    const double y = static_cast<double>(i);
    samples.push_back({y, stiffness_force(truth, y)});
  }
  const ForceDisplacementDataset data(std::move(samples));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_cubic(data));
  }
}
BENCHMARK(BM_fit_cubic);

void BM_fit_mr5(benchmark::State& state) {
  const MaterialModel truth = MaterialModel::tpu85();
  std::vector<StressStrainSample> samples;
  for (int i = 0; i < 50; ++i) {
    const double lambda = 1.05 + (6.0 - 1.05) * i / 49.0;
    samples.push_back({lambda - 1.0, uniaxial_nominal_stress(truth, lambda)});
  }
  const StressStrainDataset data(std::move(samples));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fit_linear_family(data, HyperelasticFamily::kMooneyRivlin5));
  }
}
BENCHMARK(BM_fit_mr5);

}  // namespace

BENCHMARK_MAIN();
