#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sleevesim {

/// Empirical axial-stiffness force cubic FK(y) = a y^3 + b y^2 + c y + d,
/// with y in mm and FK in N, valid over [range_min_mm, range_max_mm].
struct StiffnessCubic {
  double a;  // N/mm^3
  double b;  // N/mm^2
  double c;  // N/mm
  double d;  // N
  double range_min_mm;
  double range_max_mm;

  StiffnessCubic(double a, double b, double c, double d, double range_min_mm,
                 double range_max_mm);

  /// c > 0, so the fit resists extension near rest.
  bool plausible() const { return c > 0.0; }

  /// Calibration for the L13 actuator over 0..40 mm.
  static StiffnessCubic l13();
};

/// FK(y) in N. Evaluates outside the valid range too; callers that care use
/// extrapolates().
double stiffness_force(const StiffnessCubic& poly, double y_mm);

/// dFK/dy = 3a y^2 + 2b y + c, in N/mm.
double axial_stiffness(const StiffnessCubic& poly, double y_mm);

/// True when y lies outside the polynomial's fitted range.
bool extrapolates(const StiffnessCubic& poly, double y_mm);

struct ForceDisplacementSample {
  double displacement_mm;
  double force_n;
};

/// Measured axial force versus displacement, optionally tagged with the test
/// pressure. Displacements must be nondecreasing and all values finite.
class ForceDisplacementDataset {
 public:
  ForceDisplacementDataset(std::vector<ForceDisplacementSample> samples,
                           std::optional<double> pressure_kpa = std::nullopt,
                           std::string label = {});

  const std::vector<ForceDisplacementSample>& samples() const {
    return samples_;
  }
  std::optional<double> pressure_kpa() const { return pressure_kpa_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::vector<ForceDisplacementSample> samples_;
  std::optional<double> pressure_kpa_;
  std::string label_;
};

struct CubicFitReport {
  StiffnessCubic cubic;
  double rms_residual_n;
  double max_abs_residual_n;
  double condition_estimate;
};

/// Least-squares cubic through force-displacement data; valid range set to
/// the data's displacement span. Needs at least 4 samples spanning a nonzero
/// displacement interval. Throws NumericalError on degenerate data.
CubicFitReport fit_cubic(const ForceDisplacementDataset& data);

struct StiffnessInterval {
  double from_mm;
  double to_mm;
  double stiffness_n_per_m;
};

/// Contiguous displacement bins with per-bin secant stiffness in N/m.
using IntervalStiffnessReport = std::vector<StiffnessInterval>;

/// Secant stiffness (delta force / delta displacement) per displacement bin
/// of the given width, walking the data's span from its minimum displacement.
/// Bin-edge forces are linearly interpolated between samples. The final bin
/// is truncated at the data's maximum displacement. Default bin width 5 mm.
IntervalStiffnessReport interval_stiffness(const ForceDisplacementDataset& data,
                                           double bin_width_mm = 5.0);

}  // namespace sleevesim
