#include "sleevesim/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "sleevesim/errors.hpp"
#include "sleevesim/report.hpp"

namespace sleevesim {

namespace {

[[noreturn]] void row_error(const std::string& origin, std::size_t row,
                            const std::string& why) {
  throw ValidationError(origin + ", row " + std::to_string(row) + ": " + why);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(',', pos);
    if (next == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
}

double parse_cell(const std::string& origin, std::size_t row,
                  const std::string& cell) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    row_error(origin, row, "non-numeric cell '" + cell + "'");
  }
  if (!std::isfinite(value)) {
    row_error(origin, row, "non-finite value '" + cell + "'");
  }
  return value;
}

// Reads lines, strips a trailing '\r', skips blank lines, keeps the 1-based
// row index (header is row 1).
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string origin)
      : in_(in), origin_(std::move(origin)) {}

  bool next_row(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++row_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      fields = split_fields(line);
      return true;
    }
    return false;
  }

  std::size_t row() const { return row_; }
  const std::string& origin() const { return origin_; }

 private:
  std::istream& in_;
  std::string origin_;
  std::size_t row_ = 0;
};

void expect_header(CsvReader& reader,
                   const std::vector<std::string>& expected,
                   const std::vector<std::string>& got) {
  if (got != expected) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      want += (i ? "," : "") + expected[i];
    }
    row_error(reader.origin(), reader.row(),
              "header must be '" + want + "'");
  }
}

}  // namespace

StressStrainDataset read_stress_strain(std::istream& in,
                                       const std::string& origin) {
  CsvReader reader(in, origin);
  std::vector<std::string> fields;
  if (!reader.next_row(fields)) {
    throw ValidationError(origin + ": empty file");
  }
  expect_header(reader, {"strain", "stress_mpa"}, fields);

  std::vector<StressStrainSample> samples;
  while (reader.next_row(fields)) {
    if (fields.size() != 2) {
      row_error(origin, reader.row(), "expected 2 fields, got " +
                                          std::to_string(fields.size()));
    }
    const double strain = parse_cell(origin, reader.row(), fields[0]);
    const double stress = parse_cell(origin, reader.row(), fields[1]);
    if (!samples.empty() && !(strain > samples.back().strain)) {
      row_error(origin, reader.row(),
                "strain " + format_number(strain) +
                    " does not increase over the previous row");
    }
    samples.push_back({strain, stress});
  }
  try {
    return StressStrainDataset(std::move(samples));
  } catch (const ValidationError& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

StressStrainDataset load_stress_strain(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open '" + path + "'");
  }
  return read_stress_strain(in, path);
}

std::vector<ForceDisplacementDataset> read_force_displacement(
    std::istream& in, const std::string& origin,
    std::vector<std::string>* warnings) {
  CsvReader reader(in, origin);
  std::vector<std::string> fields;
  if (!reader.next_row(fields)) {
    throw ValidationError(origin + ": empty file");
  }
  bool has_pressure = false;
  if (fields == std::vector<std::string>{"displacement_mm", "force_n"}) {
    has_pressure = false;
  } else if (fields == std::vector<std::string>{"displacement_mm", "force_n",
                                                "pressure_kpa"}) {
    has_pressure = true;
  } else {
    row_error(origin, reader.row(),
              "header must be 'displacement_mm,force_n' or "
              "'displacement_mm,force_n,pressure_kpa'");
  }

  // Group rows by pressure label (single key 0 when absent), keyed in
  // ascending pressure order.
  std::map<double, std::vector<ForceDisplacementSample>> groups;
  const std::size_t expected_fields = has_pressure ? 3 : 2;
  while (reader.next_row(fields)) {
    if (fields.size() != expected_fields) {
      row_error(origin, reader.row(),
                "expected " + std::to_string(expected_fields) +
                    " fields, got " + std::to_string(fields.size()));
    }
    const double displacement = parse_cell(origin, reader.row(), fields[0]);
    const double force = parse_cell(origin, reader.row(), fields[1]);
    const double pressure =
        has_pressure ? parse_cell(origin, reader.row(), fields[2]) : 0.0;
    groups[pressure].push_back({displacement, force});
  }
  if (groups.empty()) {
    throw ValidationError(origin + ": no data rows");
  }

  std::vector<ForceDisplacementDataset> datasets;
  datasets.reserve(groups.size());
  for (auto& [pressure, samples] : groups) {
    const bool sorted = std::is_sorted(
        samples.begin(), samples.end(),
        [](const ForceDisplacementSample& a, const ForceDisplacementSample& b) {
          return a.displacement_mm < b.displacement_mm;
        });
    if (!sorted) {
      std::stable_sort(
          samples.begin(), samples.end(),
          [](const ForceDisplacementSample& a,
             const ForceDisplacementSample& b) {
            return a.displacement_mm < b.displacement_mm;
          });
      if (warnings) {
        warnings->push_back(
            origin + ": rows sorted by displacement" +
            (has_pressure ? " for pressure " + format_number(pressure) + " kPa"
                          : std::string()));
      }
    }
    datasets.emplace_back(std::move(samples),
                          has_pressure ? std::optional<double>(pressure)
                                       : std::nullopt);
  }
  return datasets;
}

std::vector<ForceDisplacementDataset> load_force_displacement(
    const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open '" + path + "'");
  }
  return read_force_displacement(in, path, warnings);
}

void write_trace(const SimTrace& trace, std::ostream& out) {
  out << "t_s,setpoint_mm,y_mm,v_mm_s,p_mpa,u_mpa,e_mm\n";
  for (const auto& s : trace.samples) {
    out << format_number(s.t_s) << ',' << format_number(s.setpoint_mm) << ','
        << format_number(s.y_mm) << ',' << format_number(s.v_mm_s) << ','
        << format_number(s.p_mpa) << ',' << format_number(s.u_mpa) << ','
        << format_number(s.e_mm) << '\n';
  }
}

void write_trace(const SimTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write '" + path + "'");
  }
  write_trace(trace, out);
}

void write_force_curve(const std::vector<StaticState>& curve,
                       std::ostream& out) {
  out << "displacement_mm,force_n,pressure_kpa\n";
  for (const auto& s : curve) {
    out << format_number(s.displacement_mm) << ','
        << format_number(s.net_force_n) << ','
        << format_number(s.pressure_mpa * 1000.0) << '\n';
  }
}

void write_frequency_response(const std::vector<FrequencyPoint>& response,
                              std::ostream& out) {
  out << "frequency_hz,amplitude_mm,amplitude_db\n";
  for (const auto& p : response) {
    out << format_number(p.frequency_hz) << ','
        << format_number(p.amplitude_mm) << ','
        << format_number(p.amplitude_db) << '\n';
  }
}

void write_stress_strain(const StressStrainDataset& data, std::ostream& out) {
  out << "strain,stress_mpa\n";
  for (const auto& s : data.samples()) {
    out << format_number(s.strain) << ',' << format_number(s.stress_mpa)
        << '\n';
  }
}

}  // namespace sleevesim
