#include "sleevesim/stiffness.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "sleevesim/errors.hpp"

namespace sleevesim {

StiffnessCubic::StiffnessCubic(double a, double b, double c, double d,
                               double range_min_mm, double range_max_mm)
    : a(a), b(b), c(c), d(d),
      range_min_mm(range_min_mm),
      range_max_mm(range_max_mm) {
  if (!(range_min_mm < range_max_mm)) {
    throw ValidationError("stiffness valid range must be a nonempty interval");
  }
  for (double v : {a, b, c, d, range_min_mm, range_max_mm}) {
    if (!std::isfinite(v)) {
      throw ValidationError("stiffness coefficients must be finite");
    }
  }
}

StiffnessCubic StiffnessCubic::l13() {
  return StiffnessCubic(4.1481e-4, 1.2865e-2, 2.0789, -0.2246, 0.0, 40.0);
}

double stiffness_force(const StiffnessCubic& poly, double y_mm) {
  return ((poly.a * y_mm + poly.b) * y_mm + poly.c) * y_mm + poly.d;
}

double axial_stiffness(const StiffnessCubic& poly, double y_mm) {
  return (3.0 * poly.a * y_mm + 2.0 * poly.b) * y_mm + poly.c;
}

bool extrapolates(const StiffnessCubic& poly, double y_mm) {
  return y_mm < poly.range_min_mm || y_mm > poly.range_max_mm;
}

ForceDisplacementDataset::ForceDisplacementDataset(
    std::vector<ForceDisplacementSample> samples,
    std::optional<double> pressure_kpa, std::string label)
    : samples_(std::move(samples)),
      pressure_kpa_(pressure_kpa),
      label_(std::move(label)) {
  if (samples_.empty()) {
    throw ValidationError("force-displacement dataset must not be empty");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].displacement_mm) ||
        !std::isfinite(samples_[i].force_n)) {
      throw ValidationError("non-finite value at sample " +
                            std::to_string(i + 1));
    }
    if (i > 0 &&
        samples_[i].displacement_mm < samples_[i - 1].displacement_mm) {
      throw ValidationError("displacements must be nondecreasing (violated "
                            "at sample " + std::to_string(i + 1) + ")");
    }
  }
}

CubicFitReport fit_cubic(const ForceDisplacementDataset& data) {
  const auto& samples = data.samples();
  const int n = static_cast<int>(samples.size());
  if (n < 4) {
    throw ValidationError("need at least 4 samples to fit a cubic");
  }
  const double span =
      samples.back().displacement_mm - samples.front().displacement_mm;
  if (!(span > 0.0)) {
    throw ValidationError("samples must span a nonzero displacement "
                          "interval");
  }

  Eigen::MatrixXd design(n, 4);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    const double y = samples[i].displacement_mm;
    design(i, 0) = y * y * y;
    design(i, 1) = y * y;
    design(i, 2) = y;
    design(i, 3) = 1.0;
    rhs(i) = samples[i].force_n;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  const auto r_diag = qr.matrixQR().diagonal().cwiseAbs();
  const double r_min = r_diag(3);
  const double condition =
      r_min > 0.0 ? r_diag(0) / r_min
                  : std::numeric_limits<double>::infinity();
  if (!(condition <= 1e12)) {
    throw NumericalError("cubic fit is rank deficient (condition estimate "
                         "exceeds 1e12); displacements are degenerate");
  }

  const Eigen::VectorXd coef = qr.solve(rhs);
  const Eigen::VectorXd residual = design * coef - rhs;
  const double rms = std::sqrt(residual.squaredNorm() / n);
  const double max_abs = residual.cwiseAbs().maxCoeff();

  StiffnessCubic cubic(coef(0), coef(1), coef(2), coef(3),
                       samples.front().displacement_mm,
                       samples.back().displacement_mm);
  return CubicFitReport{cubic, rms, max_abs, condition};
}

namespace {

// Force at displacement y, linearly interpolated between the bracketing
// samples (exact at sample points).
double force_at(const std::vector<ForceDisplacementSample>& s, double y) {
  if (y <= s.front().displacement_mm) return s.front().force_n;
  if (y >= s.back().displacement_mm) return s.back().force_n;
  auto hi = std::lower_bound(
      s.begin(), s.end(), y,
      [](const ForceDisplacementSample& a, double v) {
        return a.displacement_mm < v;
      });
  if (hi->displacement_mm == y) return hi->force_n;
  auto lo = hi - 1;
  while (lo->displacement_mm == hi->displacement_mm) --lo;
  const double t = (y - lo->displacement_mm) /
                   (hi->displacement_mm - lo->displacement_mm);
  return lo->force_n + t * (hi->force_n - lo->force_n);
}

}  // namespace

IntervalStiffnessReport interval_stiffness(const ForceDisplacementDataset& data,
                                           double bin_width_mm) {
  if (!(bin_width_mm > 0.0)) {
    throw ValidationError("bin width must be positive");
  }
  const auto& samples = data.samples();
  const double y_min = samples.front().displacement_mm;
  const double y_max = samples.back().displacement_mm;
  if (!(y_max > y_min)) {
    throw ValidationError("dataset spans no displacement interval");
  }

  IntervalStiffnessReport report;
  double from = y_min;
  while (from < y_max) {
    double to = from + bin_width_mm;
    if (to > y_max) to = y_max;
    // Guard against a sliver bin produced by accumulated rounding.
    if (to - from < 1e-12 * bin_width_mm) break;
    const double slope_n_per_mm =
        (force_at(samples, to) - force_at(samples, from)) / (to - from);
    report.push_back({from, to, slope_n_per_mm * 1000.0});
    from = to;
  }
  return report;
}

}  // namespace sleevesim
