#include "sleevesim/hyperelastic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

#include "sleevesim/errors.hpp"

namespace sleevesim {

namespace {

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string(what) + " must be finite");
  }
}

}  // namespace

StretchState::StretchState(double lambda1, double lambda2, double lambda3)
    : l1_(lambda1), l2_(lambda2), l3_(lambda3) {
  if (!(lambda1 > 0.0 && lambda2 > 0.0 && lambda3 > 0.0)) {
    throw ValidationError("principal stretches must be positive");
  }
  check_finite(lambda1, "stretch");
  check_finite(lambda2, "stretch");
  check_finite(lambda3, "stretch");
}

StretchState StretchState::incompressible(double lambda1, double lambda2) {
  if (!(lambda1 > 0.0 && lambda2 > 0.0)) {
    throw ValidationError("principal stretches must be positive");
  }
  return StretchState(lambda1, lambda2, 1.0 / (lambda1 * lambda2));
}

StretchState StretchState::uniaxial(double stretch) {
  if (!(stretch > 0.0)) {
    throw ValidationError("uniaxial stretch must be positive");
  }
  const double lateral = 1.0 / std::sqrt(stretch);
  return StretchState(stretch, lateral, lateral);
}

double stretch_from_strain(double engineering_strain) {
  const double stretch = 1.0 + engineering_strain;
  if (!(stretch > 0.0)) {
    throw ValidationError("engineering strain must exceed -1");
  }
  return stretch;
}

InvariantSet invariants_of(const StretchState& state) {
  const double a = state.lambda1() * state.lambda1();
  const double b = state.lambda2() * state.lambda2();
  const double c = state.lambda3() * state.lambda3();
  return InvariantSet{a + b + c, a * b + a * c + b * c, a * b * c};
}

int family_coefficient_count(HyperelasticFamily family) {
  switch (family) {
    case HyperelasticFamily::kNeoHookean: return 1;
    case HyperelasticFamily::kMooneyRivlin2: return 2;
    case HyperelasticFamily::kMooneyRivlin5: return 5;
    case HyperelasticFamily::kYeoh3: return 3;
    case HyperelasticFamily::kOgden: return -1;
  }
  throw ValidationError("unknown hyperelastic family");
}

const char* family_name(HyperelasticFamily family) {
  switch (family) {
    case HyperelasticFamily::kNeoHookean: return "neo-hookean";
    case HyperelasticFamily::kMooneyRivlin2: return "mooney-rivlin-2";
    case HyperelasticFamily::kMooneyRivlin5: return "mooney-rivlin-5";
    case HyperelasticFamily::kYeoh3: return "yeoh-3";
    case HyperelasticFamily::kOgden: return "ogden";
  }
  throw ValidationError("unknown hyperelastic family");
}

HyperelasticFamily parse_family(const std::string& token) {
  if (token == "nh" || token == "neohookean" || token == "neo-hookean") {
    return HyperelasticFamily::kNeoHookean;
  }
  if (token == "mr2" || token == "mooney-rivlin-2") {
    return HyperelasticFamily::kMooneyRivlin2;
  }
  if (token == "mr5" || token == "mooney-rivlin-5") {
    return HyperelasticFamily::kMooneyRivlin5;
  }
  if (token == "yeoh3" || token == "yeoh" || token == "yeoh-3") {
    return HyperelasticFamily::kYeoh3;
  }
  if (token == "ogden") {
    return HyperelasticFamily::kOgden;
  }
  throw ValidationError("unknown material family '" + token +
                        "' (expected nh, mr2, mr5, yeoh3, or ogden)");
}

MaterialModel::MaterialModel(HyperelasticFamily family,
                             std::vector<double> coefficients)
    : family_(family), coeffs_(std::move(coefficients)) {
  for (double c : coeffs_) check_finite(c, "material coefficient");
  if (family_ == HyperelasticFamily::kOgden) {
    if (coeffs_.empty() || coeffs_.size() % 2 != 0) {
      throw ValidationError("Ogden coefficients must be nonempty "
                            "(mu, alpha) pairs");
    }
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
      if (coeffs_[i] == 0.0) {
        throw ValidationError("Ogden alpha exponents must be nonzero");
      }
    }
    return;
  }
  const int expected = family_coefficient_count(family_);
  if (static_cast<int>(coeffs_.size()) != expected) {
    throw ValidationError(std::string(family_name(family_)) + " expects " +
                          std::to_string(expected) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
  }
}

MaterialModel MaterialModel::neo_hookean(double c10) {
  return MaterialModel(HyperelasticFamily::kNeoHookean, {c10});
}

MaterialModel MaterialModel::mooney_rivlin2(double c10, double c01) {
  return MaterialModel(HyperelasticFamily::kMooneyRivlin2, {c10, c01});
}

MaterialModel MaterialModel::mooney_rivlin5(double c10, double c01, double c20,
                                            double c11, double c02) {
  return MaterialModel(HyperelasticFamily::kMooneyRivlin5,
                       {c10, c01, c20, c11, c02});
}

MaterialModel MaterialModel::yeoh3(double c10, double c20, double c30) {
  return MaterialModel(HyperelasticFamily::kYeoh3, {c10, c20, c30});
}

MaterialModel MaterialModel::ogden(std::vector<double> mu,
                                   std::vector<double> alpha) {
  if (mu.size() != alpha.size() || mu.empty()) {
    throw ValidationError("Ogden needs equally sized nonempty mu and alpha "
                          "lists");
  }
  std::vector<double> interleaved;
  interleaved.reserve(2 * mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    interleaved.push_back(mu[i]);
    interleaved.push_back(alpha[i]);
  }
  return MaterialModel(HyperelasticFamily::kOgden, std::move(interleaved));
}

MaterialModel MaterialModel::tpu85() {
  return mooney_rivlin5(-3.1992, 6.977, 0.0281, -0.074972, 0.92155);
}

MaterialModel MaterialModel::tpu95() {
  return mooney_rivlin5(-28.763, 42.995, 0.10499, -6.6676, 9.138);
}

double strain_energy(const MaterialModel& model, const InvariantSet& inv) {
  const auto& c = model.coefficients();
  const double x = inv.i1 - 3.0;
  const double y = inv.i2 - 3.0;
  switch (model.family()) {
    case HyperelasticFamily::kNeoHookean:
      return c[0] * x;
    case HyperelasticFamily::kMooneyRivlin2:
      return c[0] * x + c[1] * y;
    case HyperelasticFamily::kMooneyRivlin5:
      return c[0] * x + c[1] * y + c[2] * x * x + c[3] * x * y + c[4] * y * y;
    case HyperelasticFamily::kYeoh3:
      return c[0] * x + c[1] * x * x + c[2] * x * x * x;
    case HyperelasticFamily::kOgden:
      throw ValidationError("Ogden strain energy needs principal stretches, "
                            "not invariants");
  }
  throw ValidationError("unknown hyperelastic family");
}

double strain_energy(const MaterialModel& model, const StretchState& state) {
  if (model.family() != HyperelasticFamily::kOgden) {
    return strain_energy(model, invariants_of(state));
  }
  const auto& c = model.coefficients();
  double w = 0.0;
  for (std::size_t i = 0; i < c.size(); i += 2) {
    const double mu = c[i];
    const double alpha = c[i + 1];
    w += mu / alpha *
         (std::pow(state.lambda1(), alpha) + std::pow(state.lambda2(), alpha) +
          std::pow(state.lambda3(), alpha) - 3.0);
  }
  return w;
}

EnergyDerivatives energy_derivatives(const MaterialModel& model,
                                     const InvariantSet& inv) {
  const auto& c = model.coefficients();
  const double x = inv.i1 - 3.0;
  const double y = inv.i2 - 3.0;
  switch (model.family()) {
    case HyperelasticFamily::kNeoHookean:
      return {c[0], 0.0};
    case HyperelasticFamily::kMooneyRivlin2:
      return {c[0], c[1]};
    case HyperelasticFamily::kMooneyRivlin5:
      return {c[0] + 2.0 * c[2] * x + c[3] * y,
              c[1] + c[3] * x + 2.0 * c[4] * y};
    case HyperelasticFamily::kYeoh3:
      return {c[0] + 2.0 * c[1] * x + 3.0 * c[2] * x * x, 0.0};
    case HyperelasticFamily::kOgden:
      throw ValidationError("Ogden has no (I1, I2) derivative form");
  }
  throw ValidationError("unknown hyperelastic family");
}

double uniaxial_nominal_stress(const MaterialModel& model, double stretch) {
  if (!(stretch > 0.0)) {
    throw ValidationError("uniaxial stretch must be positive");
  }
  if (model.family() == HyperelasticFamily::kOgden) {
    const auto& c = model.coefficients();
    double p = 0.0;
    for (std::size_t i = 0; i < c.size(); i += 2) {
      const double mu = c[i];
      const double alpha = c[i + 1];
      p += mu * (std::pow(stretch, alpha - 1.0) -
                 std::pow(stretch, -alpha / 2.0 - 1.0));
    }
    return p;
  }
  const auto inv = invariants_of(StretchState::uniaxial(stretch));
  const auto d = energy_derivatives(model, inv);
  return 2.0 * (stretch - 1.0 / (stretch * stretch)) *
         (d.d_i1 + d.d_i2 / stretch);
}

StressStrainDataset::StressStrainDataset(
    std::vector<StressStrainSample> samples, std::string material_label)
    : samples_(std::move(samples)), label_(std::move(material_label)) {
  if (samples_.empty()) {
    throw ValidationError("stress-strain dataset must not be empty");
  }
  if (samples_.front().strain < 0.0) {
    throw ValidationError("first strain must be nonnegative");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    check_finite(samples_[i].strain, "strain");
    check_finite(samples_[i].stress_mpa, "stress");
    if (i > 0 && !(samples_[i].strain > samples_[i - 1].strain)) {
      throw ValidationError("strains must be strictly increasing (violated "
                            "at sample " + std::to_string(i + 1) + ")");
    }
  }
}

namespace {

// Basis functions phi_j(lambda) with P = sum_j coeff_j phi_j, valid for the
// coefficient-linear families.
void stress_basis_row(HyperelasticFamily family, double stretch, double* row) {
  const double pref = 2.0 * (stretch - 1.0 / (stretch * stretch));
  const auto inv = invariants_of(StretchState::uniaxial(stretch));
  const double x = inv.i1 - 3.0;
  const double y = inv.i2 - 3.0;
  switch (family) {
    case HyperelasticFamily::kNeoHookean:
      row[0] = pref;
      return;
    case HyperelasticFamily::kMooneyRivlin2:
      row[0] = pref;
      row[1] = pref / stretch;
      return;
    case HyperelasticFamily::kMooneyRivlin5:
      row[0] = pref;
      row[1] = pref / stretch;
      row[2] = pref * 2.0 * x;
      row[3] = pref * (y + x / stretch);
      row[4] = pref * 2.0 * y / stretch;
      return;
    case HyperelasticFamily::kYeoh3:
      row[0] = pref;
      row[1] = pref * 2.0 * x;
      row[2] = pref * 3.0 * x * x;
      return;
    case HyperelasticFamily::kOgden:
      break;
  }
  throw ValidationError("stress basis undefined for this family");
}

}  // namespace

MaterialFitReport fit_linear_family(const StressStrainDataset& data,
                                    HyperelasticFamily family) {
  if (family == HyperelasticFamily::kOgden) {
    throw ValidationError("Ogden fitting is nonlinear in its coefficients "
                          "and not supported");
  }
  const int ncoef = family_coefficient_count(family);
  const auto& samples = data.samples();
  const int n = static_cast<int>(samples.size());
  if (n < ncoef) {
    throw ValidationError("need at least " + std::to_string(ncoef) +
                          " samples to fit " + family_name(family));
  }
  bool any_positive_strain = false;
  for (const auto& s : samples) {
    if (s.strain > 0.0) any_positive_strain = true;
  }
  if (!any_positive_strain) {
    throw ValidationError("dataset has no sample with positive strain");
  }

  Eigen::MatrixXd design(n, ncoef);
  Eigen::VectorXd rhs(n);
  std::vector<double> row(static_cast<std::size_t>(ncoef));
  for (int i = 0; i < n; ++i) {
    const double stretch = stretch_from_strain(samples[i].strain);
    stress_basis_row(family, stretch, row.data());
    for (int j = 0; j < ncoef; ++j) design(i, j) = row[j];
    rhs(i) = samples[i].stress_mpa;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  const auto r_diag = qr.matrixQR().diagonal().cwiseAbs();
  const double r_max = r_diag(0);
  const double r_min = r_diag(ncoef - 1);
  const double condition =
      r_min > 0.0 ? r_max / r_min : std::numeric_limits<double>::infinity();
  if (!(condition <= 1e12)) {
    throw NumericalError("stress basis is rank deficient (condition estimate "
                         "exceeds 1e12); data does not constrain the model");
  }

  const Eigen::VectorXd coef = qr.solve(rhs);
  const Eigen::VectorXd residual = design * coef - rhs;
  const double rms = std::sqrt(residual.squaredNorm() / n);
  const double max_abs = residual.cwiseAbs().maxCoeff();

  std::vector<double> coeffs(coef.data(), coef.data() + ncoef);
  return MaterialFitReport{MaterialModel(family, std::move(coeffs)), rms,
                           max_abs, condition};
}

}  // namespace sleevesim
