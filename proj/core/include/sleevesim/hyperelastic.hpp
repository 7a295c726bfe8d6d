#pragma once

#include <string>
#include <vector>

namespace sleevesim {

/// Principal stretches of an incompressible deformation state.
class StretchState {
 public:
  /// Requires all stretches positive.
  StretchState(double lambda1, double lambda2, double lambda3);

  /// Third stretch from incompressibility: lambda3 = 1/(lambda1*lambda2).
  static StretchState incompressible(double lambda1, double lambda2);

  /// Uniaxial tension along axis 1: (lambda, 1/sqrt(lambda), 1/sqrt(lambda)).
  static StretchState uniaxial(double stretch);

  double lambda1() const { return l1_; }
  double lambda2() const { return l2_; }
  double lambda3() const { return l3_; }

 private:
  double l1_, l2_, l3_;
};

/// Engineering strain to stretch: lambda = 1 + strain.
double stretch_from_strain(double engineering_strain);

struct InvariantSet {
  double i1;
  double i2;
  double i3;
};

/// I1 = sum li^2, I2 = sum li^2 lj^2 (i<j), I3 = prod li^2.
InvariantSet invariants_of(const StretchState& state);

enum class HyperelasticFamily {
  kNeoHookean,
  kMooneyRivlin2,
  kMooneyRivlin5,
  kYeoh3,
  kOgden,
};

/// Number of coefficients the family expects; Ogden is variable (pairs).
int family_coefficient_count(HyperelasticFamily family);

const char* family_name(HyperelasticFamily family);

/// Parse "nh" / "mr2" / "mr5" / "yeoh3" / "ogden" (also accepts the long
/// names). Throws ValidationError on anything else.
HyperelasticFamily parse_family(const std::string& token);

/// Incompressible strain-energy model: family tag plus coefficients.
/// C-coefficients and Ogden mu_i in MPa, Ogden alpha_i dimensionless.
/// The volumetric term is fixed at zero (incompressible).
class MaterialModel {
 public:
  static MaterialModel neo_hookean(double c10);
  static MaterialModel mooney_rivlin2(double c10, double c01);
  static MaterialModel mooney_rivlin5(double c10, double c01, double c20,
                                      double c11, double c02);
  static MaterialModel yeoh3(double c10, double c20, double c30);
  /// Ogden with N terms: mu and alpha must have equal nonzero size and every
  /// alpha nonzero.
  static MaterialModel ogden(std::vector<double> mu, std::vector<double> alpha);

  /// General constructor; validates coefficient count against the family.
  MaterialModel(HyperelasticFamily family, std::vector<double> coefficients);

  /// Five-parameter Mooney-Rivlin constants fitted to Shore 85A TPU tensile
  /// data.
  static MaterialModel tpu85();
  /// Five-parameter Mooney-Rivlin constants fitted to Shore 95A TPU tensile
  /// data.
  static MaterialModel tpu95();

  HyperelasticFamily family() const { return family_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

 private:
  HyperelasticFamily family_;
  std::vector<double> coeffs_;
};

struct EnergyDerivatives {
  double d_i1;
  double d_i2;
};

/// Strain energy density W in MPa from invariants. Ogden has no invariant
/// form here; passing it throws ValidationError (use the StretchState
/// overload).
double strain_energy(const MaterialModel& model, const InvariantSet& inv);

/// Strain energy density from principal stretches (all families).
double strain_energy(const MaterialModel& model, const StretchState& state);

/// Analytic (dW/dI1, dW/dI2). Same Ogden restriction as the invariant-based
/// strain_energy.
EnergyDerivatives energy_derivatives(const MaterialModel& model,
                                     const InvariantSet& inv);

/// Nominal (engineering) uniaxial stress in MPa:
/// P = 2 (lambda - lambda^-2)(dW/dI1 + dW/dI2 / lambda), and the equivalent
/// closed form for Ogden. P(1) = 0 for every model.
double uniaxial_nominal_stress(const MaterialModel& model, double stretch);

struct StressStrainSample {
  double strain;
  double stress_mpa;
};

/// Uniaxial tensile dataset: strictly increasing engineering strain,
/// first strain >= 0, finite stresses.
class StressStrainDataset {
 public:
  StressStrainDataset(std::vector<StressStrainSample> samples,
                      std::string material_label = {});

  const std::vector<StressStrainSample>& samples() const { return samples_; }
  const std::string& material_label() const { return label_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::vector<StressStrainSample> samples_;
  std::string label_;
};

struct MaterialFitReport {
  MaterialModel model;
  double rms_residual_mpa;
  double max_abs_residual_mpa;
  double condition_estimate;
};

/// Least-squares fit of a coefficient-linear family (every family except
/// Ogden) to uniaxial nominal stress data. Solved by column-pivoted QR.
/// Throws ValidationError for Ogden or insufficient samples, NumericalError
/// when the design-matrix condition estimate exceeds 1e12.
MaterialFitReport fit_linear_family(const StressStrainDataset& data,
                                    HyperelasticFamily family);

}  // namespace sleevesim
