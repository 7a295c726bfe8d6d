#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "sleevesim/errors.hpp"
#include "sleevesim/hyperelastic.hpp"

using namespace sleevesim;

TEST_CASE("stretch states enforce positivity and incompressibility") {
  CHECK_THROWS_AS(StretchState(0.0, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(StretchState(1.0, -2.0, 1.0), ValidationError);
  CHECK_THROWS_AS(StretchState::uniaxial(0.0), ValidationError);
  CHECK_THROWS_AS(StretchState::uniaxial(-1.0), ValidationError);

  const StretchState uni = StretchState::uniaxial(1.5);
  CHECK(uni.lambda1() == 1.5);
  CHECK(uni.lambda2() == doctest::Approx(1.0 / std::sqrt(1.5)).epsilon(1e-15));
  CHECK(uni.lambda2() == uni.lambda3());

  const StretchState inc = StretchState::incompressible(2.0, 0.5);
  CHECK(inc.lambda3() == doctest::Approx(1.0).epsilon(1e-15));

  CHECK(stretch_from_strain(0.25) == 1.25);
  CHECK_THROWS_AS(stretch_from_strain(-1.0), ValidationError);
}

TEST_CASE("invariants of a uniaxial state") {
  const InvariantSet inv = invariants_of(StretchState::uniaxial(1.5));
  CHECK(inv.i1 == doctest::Approx(3.5833333333333335).epsilon(1e-14));
  CHECK(inv.i2 == doctest::Approx(3.4444444444444446).epsilon(1e-14));
  CHECK(inv.i3 == doctest::Approx(1.0).epsilon(1e-14));

  const InvariantSet id = invariants_of(StretchState(1.0, 1.0, 1.0));
  CHECK(id.i1 == 3.0);
  CHECK(id.i2 == 3.0);
  CHECK(id.i3 == 1.0);
}

TEST_CASE("family metadata and parsing") {
  CHECK(family_coefficient_count(HyperelasticFamily::kNeoHookean) == 1);
  CHECK(family_coefficient_count(HyperelasticFamily::kMooneyRivlin2) == 2);
  CHECK(family_coefficient_count(HyperelasticFamily::kMooneyRivlin5) == 5);
  CHECK(family_coefficient_count(HyperelasticFamily::kYeoh3) == 3);
  CHECK(family_coefficient_count(HyperelasticFamily::kOgden) == -1);

  CHECK(parse_family("nh") == HyperelasticFamily::kNeoHookean);
  CHECK(parse_family("neo-hookean") == HyperelasticFamily::kNeoHookean);
  CHECK(parse_family("mr2") == HyperelasticFamily::kMooneyRivlin2);
  CHECK(parse_family("mooney-rivlin-5") == HyperelasticFamily::kMooneyRivlin5);
  CHECK(parse_family("yeoh") == HyperelasticFamily::kYeoh3);
  CHECK(parse_family("yeoh3") == HyperelasticFamily::kYeoh3);
  CHECK(parse_family("ogden") == HyperelasticFamily::kOgden);
  CHECK_THROWS_AS(parse_family("polyurethane"), ValidationError);

  CHECK(parse_family(family_name(HyperelasticFamily::kMooneyRivlin2)) ==
        HyperelasticFamily::kMooneyRivlin2);
}

TEST_CASE("model construction validates coefficient counts") {
  CHECK_THROWS_AS(
      MaterialModel(HyperelasticFamily::kNeoHookean, {1.0, 2.0}),
      ValidationError);
  CHECK_THROWS_AS(MaterialModel(HyperelasticFamily::kMooneyRivlin5,
                                {1.0, 2.0, 3.0}),
                  ValidationError);
  CHECK_THROWS_AS(MaterialModel::ogden({1.0, 2.0}, {1.0}), ValidationError);
  CHECK_THROWS_AS(MaterialModel::ogden({}, {}), ValidationError);
  CHECK_THROWS_AS(MaterialModel::ogden({1.0}, {0.0}), ValidationError);

  const MaterialModel mr5 = MaterialModel::tpu85();
  CHECK(mr5.family() == HyperelasticFamily::kMooneyRivlin5);
  REQUIRE(mr5.coefficients().size() == 5);
  CHECK(mr5.coefficients()[0] == -3.1992);
  CHECK(mr5.coefficients()[1] == 6.977);
  CHECK(mr5.coefficients()[2] == 0.0281);
  CHECK(mr5.coefficients()[3] == -0.074972);
  CHECK(mr5.coefficients()[4] == 0.92155);

  const MaterialModel mr5b = MaterialModel::tpu95();
  CHECK(mr5b.coefficients()[0] == -28.763);
  CHECK(mr5b.coefficients()[4] == 9.138);
}

TEST_CASE("strain energy of the shore-85 constants") {
  const MaterialModel m = MaterialModel::tpu85();
  // I1 = 5, I2 = 4.25 is the uniaxial lambda = 2 state.
  CHECK(strain_energy(m, InvariantSet{5.0, 4.25, 1.0}) ==
        doctest::Approx(3.687741875).epsilon(1e-14));
  CHECK(strain_energy(m, StretchState::uniaxial(2.0)) ==
        doctest::Approx(3.687741875).epsilon(1e-13));
  // Identity state stores no energy.
  CHECK(strain_energy(m, StretchState(1.0, 1.0, 1.0)) == 0.0);
}

TEST_CASE("energy derivatives of the five-term Mooney-Rivlin form") {
  const MaterialModel m = MaterialModel::tpu85();
  const EnergyDerivatives d = energy_derivatives(m, InvariantSet{5.0, 4.25, 1.0});
  // dW/dI1 = c10 + 2 c20 x + c11 y, dW/dI2 = c01 + c11 x + 2 c02 y
  CHECK(d.d_i1 == doctest::Approx(-3.180515).epsilon(1e-14));
  CHECK(d.d_i2 == doctest::Approx(9.130931).epsilon(1e-14));
}

TEST_CASE("uniaxial nominal stress matches hand-evaluated values") {
  const MaterialModel m85 = MaterialModel::tpu85();
  CHECK(uniaxial_nominal_stress(m85, 2.0) ==
        doctest::Approx(4.84732675).epsilon(1e-13));
  CHECK(uniaxial_nominal_stress(m85, 1.5) ==
        doctest::Approx(4.155814485596708).epsilon(1e-13));
  CHECK(uniaxial_nominal_stress(m85, 1.0) == 0.0);

  const MaterialModel m95 = MaterialModel::tpu95();
  CHECK(uniaxial_nominal_stress(m95, 2.0) ==
        doctest::Approx(-36.48799).epsilon(1e-13));
  CHECK(uniaxial_nominal_stress(m95, 1.0) == 0.0);

  CHECK_THROWS_AS(uniaxial_nominal_stress(m85, 0.0), ValidationError);
}

TEST_CASE("stress is the derivative of energy along the uniaxial path") {
  // Central difference of W(uniaxial(lambda)) against the analytic P.
  const double h = 1e-6;
  for (const MaterialModel& m :
       {MaterialModel::tpu85(), MaterialModel::tpu95()}) {
    for (double lambda = 1.01; lambda <= 6.0; lambda += 0.07) {
      const double w_plus = strain_energy(m, StretchState::uniaxial(lambda + h));
      const double w_minus =
          strain_energy(m, StretchState::uniaxial(lambda - h));
      const double fd = (w_plus - w_minus) / (2.0 * h);
      const double p = uniaxial_nominal_stress(m, lambda);
      CHECK(std::abs(fd - p) <= 1e-6 * std::max(1.0, std::abs(p)));
    }
  }
}

TEST_CASE("one-term Ogden with alpha = 2 degenerates to neo-Hookean") {
  const MaterialModel og = MaterialModel::ogden({2.0}, {2.0});
  const MaterialModel nh = MaterialModel::neo_hookean(1.0);
  for (double lambda : {0.5, 0.9, 1.0, 1.3, 2.0, 4.0}) {
    CHECK(uniaxial_nominal_stress(og, lambda) ==
          doctest::Approx(uniaxial_nominal_stress(nh, lambda)).epsilon(1e-12));
    CHECK(strain_energy(og, StretchState::uniaxial(lambda)) ==
          doctest::Approx(strain_energy(nh, StretchState::uniaxial(lambda)))
              .epsilon(1e-12));
  }
}

TEST_CASE("Ogden rejects the invariant-space entry points") {
  const MaterialModel og = MaterialModel::ogden({1.0, 0.5}, {2.0, -1.5});
  CHECK_THROWS_AS(strain_energy(og, InvariantSet{5.0, 4.25, 1.0}),
                  ValidationError);
  CHECK_THROWS_AS(energy_derivatives(og, InvariantSet{5.0, 4.25, 1.0}),
                  ValidationError);
}

TEST_CASE("stress-strain datasets validate monotonicity") {
  CHECK_THROWS_AS(StressStrainDataset({}), ValidationError);
  CHECK_THROWS_AS(StressStrainDataset({{-0.1, 0.0}, {0.1, 1.0}}),
                  ValidationError);
  CHECK_THROWS_WITH_AS(
      StressStrainDataset({{0.0, 0.0}, {0.2, 1.0}, {0.2, 1.1}}),
      "strains must be strictly increasing (violated at sample 3)",
      ValidationError);
  const StressStrainDataset ok({{0.0, 0.0}, {0.5, 2.0}}, "tpu85");
  CHECK(ok.size() == 2);
  CHECK(ok.material_label() == "tpu85");
}

TEST_CASE("linear-family fits recover generating coefficients") {
  const MaterialModel truth = MaterialModel::tpu85();
  const StressStrainDataset data =
      testutil::synth_stress_strain(truth, 1.05, 6.0, 50);
  const MaterialFitReport fit =
      fit_linear_family(data, HyperelasticFamily::kMooneyRivlin5);
  REQUIRE(fit.model.coefficients().size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(fit.model.coefficients()[i] ==
          doctest::Approx(truth.coefficients()[i]).epsilon(1e-6));
  }
  CHECK(fit.rms_residual_mpa < 1e-9);
  CHECK(fit.max_abs_residual_mpa < 1e-8);
  CHECK(fit.condition_estimate < 1e12);
}

TEST_CASE("every coefficient-linear family round-trips through its fit") {
  struct Case {
    MaterialModel truth;
    HyperelasticFamily family;
  };
  const Case cases[] = {
      {MaterialModel::neo_hookean(0.8), HyperelasticFamily::kNeoHookean},
      {MaterialModel::mooney_rivlin2(0.6, 0.2),
       HyperelasticFamily::kMooneyRivlin2},
      {MaterialModel::yeoh3(0.5, -0.01, 0.002), HyperelasticFamily::kYeoh3},
  };
  for (const Case& c : cases) {
    const StressStrainDataset data =
        testutil::synth_stress_strain(c.truth, 1.02, 4.0, 40);
    const MaterialFitReport fit = fit_linear_family(data, c.family);
    REQUIRE(fit.model.coefficients().size() == c.truth.coefficients().size());
    for (std::size_t i = 0; i < c.truth.coefficients().size(); ++i) {
      CHECK(fit.model.coefficients()[i] ==
            doctest::Approx(c.truth.coefficients()[i]).epsilon(1e-7));
    }
  }
}

TEST_CASE("noisy data still yields a usable five-term fit") {
  const MaterialModel truth = MaterialModel::tpu85();
  const StressStrainDataset noisy =
      testutil::synth_stress_strain(truth, 1.05, 6.0, 50, 0.01, 42);
  const MaterialFitReport fit =
      fit_linear_family(noisy, HyperelasticFamily::kMooneyRivlin5);
  double peak = 0.0;
  double rms = 0.0;
  for (const auto& s : noisy.samples()) {
    const double lambda = 1.0 + s.strain;
    const double clean = uniaxial_nominal_stress(truth, lambda);
    const double pred = uniaxial_nominal_stress(fit.model, lambda);
    peak = std::max(peak, std::abs(clean));
    rms += (pred - clean) * (pred - clean);
  }
  rms = std::sqrt(rms / static_cast<double>(noisy.size()));
  CHECK(rms <= 0.02 * peak);
}

TEST_CASE("fitting guards sample count, family, and conditioning") {
  const StressStrainDataset tiny({{0.01, 0.1}, {0.02, 0.2}, {0.03, 0.3}});
  CHECK_THROWS_WITH_AS(
      fit_linear_family(tiny, HyperelasticFamily::kMooneyRivlin5),
      "need at least 5 samples to fit mooney-rivlin-5", ValidationError);
  CHECK_THROWS_AS(fit_linear_family(tiny, HyperelasticFamily::kOgden),
                  ValidationError);

  // Strains of ~1e-9 collapse the higher-order design columns.
  std::vector<StressStrainSample> flat;
  for (int i = 1; i <= 8; ++i)
    flat.push_back({1e-9 * i, 5e-9 * i});
  CHECK_THROWS_AS(fit_linear_family(StressStrainDataset(std::move(flat)),
                                    HyperelasticFamily::kMooneyRivlin5),
                  NumericalError);
}
