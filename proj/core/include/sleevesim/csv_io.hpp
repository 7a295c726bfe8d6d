#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sleevesim/frequency.hpp"
#include "sleevesim/hyperelastic.hpp"
#include "sleevesim/plant.hpp"
#include "sleevesim/statics.hpp"
#include "sleevesim/stiffness.hpp"

namespace sleevesim {

/// CSV dialect everywhere: comma separator, '.' decimal, required header
/// row, UTF-8, no quoting. Errors carry 1-based row numbers counting the
/// header as row 1. Numbers are written via format_number (9 significant
/// digits), so identical data produces byte-identical files.

/// Header `strain,stress_mpa`.
StressStrainDataset load_stress_strain(const std::string& path);
StressStrainDataset read_stress_strain(std::istream& in,
                                       const std::string& origin = "<stream>");

/// Header `displacement_mm,force_n` or `displacement_mm,force_n,pressure_kpa`.
/// With a pressure column the rows are grouped into one dataset per distinct
/// pressure, ordered by ascending pressure. Rows arriving out of displacement
/// order are sorted, with a note appended to `warnings`.
std::vector<ForceDisplacementDataset> load_force_displacement(
    const std::string& path, std::vector<std::string>* warnings = nullptr);
std::vector<ForceDisplacementDataset> read_force_displacement(
    std::istream& in, const std::string& origin = "<stream>",
    std::vector<std::string>* warnings = nullptr);

/// Header `t_s,setpoint_mm,y_mm,v_mm_s,p_mpa,u_mpa,e_mm`.
void write_trace(const SimTrace& trace, std::ostream& out);
void write_trace(const SimTrace& trace, const std::string& path);

/// Header `displacement_mm,force_n,pressure_kpa` (pressure repeated per row,
/// in boundary units), so a written curve reloads as force-displacement
/// data.
void write_force_curve(const std::vector<StaticState>& curve,
                       std::ostream& out);

/// Header `frequency_hz,amplitude_mm,amplitude_db`.
void write_frequency_response(const std::vector<FrequencyPoint>& response,
                              std::ostream& out);

/// Write stress-strain samples back out (header `strain,stress_mpa`).
void write_stress_strain(const StressStrainDataset& data, std::ostream& out);

}  // namespace sleevesim
