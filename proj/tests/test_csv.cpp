#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "sleevesim/csv_io.hpp"
#include "sleevesim/errors.hpp"
#include "sleevesim/report.hpp"

using namespace sleevesim;

TEST_CASE("stress-strain files round trip") {
  const std::string text =
      "strain,stress_mpa\n"
      "0,0\n"
      "0.5,2.25\n"
      "1,4.8473\n";
  std::istringstream in(text);
  const StressStrainDataset data = read_stress_strain(in, "inline");
  REQUIRE(data.size() == 3);
  CHECK(data.samples()[1].strain == 0.5);
  CHECK(data.samples()[2].stress_mpa == 4.8473);

  std::ostringstream out;
  write_stress_strain(data, out);
  std::istringstream in2(out.str());
  const StressStrainDataset again = read_stress_strain(in2, "inline2");
  REQUIRE(again.size() == 3);
  CHECK(again.samples()[2].stress_mpa == data.samples()[2].stress_mpa);

  // Identical data writes byte-identical files.
  std::ostringstream out2;
  write_stress_strain(again, out2);
  CHECK(out2.str() == out.str());
}

TEST_CASE("stress-strain parsing errors carry the origin and row") {
  std::istringstream empty("");
  CHECK_THROWS_WITH_AS(read_stress_strain(empty, "f.csv"), "f.csv: empty file",
                       ValidationError);

  std::istringstream bad_header("stress,strain\n0,0\n");
  CHECK_THROWS_AS(read_stress_strain(bad_header, "f.csv"), ValidationError);

  std::istringstream short_row("strain,stress_mpa\n0.5\n");
  CHECK_THROWS_AS(read_stress_strain(short_row, "f.csv"), ValidationError);

  std::istringstream bad_cell("strain,stress_mpa\n0,zero\n");
  try {
    read_stress_strain(bad_cell, "f.csv");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("f.csv, row 2") != std::string::npos);
    CHECK(std::string(e.what()).find("zero") != std::string::npos);
  }

  std::istringstream backwards("strain,stress_mpa\n0.5,1\n0.2,2\n");
  CHECK_THROWS_AS(read_stress_strain(backwards, "f.csv"), ValidationError);
}

TEST_CASE("force-displacement files group by the pressure column") {
  const std::string text =
      "displacement_mm,force_n,pressure_kpa\n"
      "0,1,100\n"
      "10,2,100\n"
      "0,-0.2,0\n"
      "10,22.3,0\n";
  std::istringstream in(text);
  const std::vector<ForceDisplacementDataset> sets =
      read_force_displacement(in, "inline");
  REQUIRE(sets.size() == 2);
  // Ascending pressure order: 0 kPa first.
  REQUIRE(sets[0].pressure_kpa().has_value());
  CHECK(*sets[0].pressure_kpa() == 0.0);
  CHECK(*sets[1].pressure_kpa() == 100.0);
  CHECK(sets[0].samples()[1].force_n == 22.3);
  CHECK(sets[1].size() == 2);
}

TEST_CASE("force-displacement files without pressure form one dataset") {
  std::istringstream in("displacement_mm,force_n\n0,-0.2\n5,10\n");
  const std::vector<ForceDisplacementDataset> sets =
      read_force_displacement(in, "inline");
  REQUIRE(sets.size() == 1);
  CHECK_FALSE(sets[0].pressure_kpa().has_value());
  CHECK(sets[0].size() == 2);
}

TEST_CASE("out-of-order force rows are sorted with a warning") {
  std::istringstream in("displacement_mm,force_n\n5,10\n0,-0.2\n");
  std::vector<std::string> warnings;
  const std::vector<ForceDisplacementDataset> sets =
      read_force_displacement(in, "inline", &warnings);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].samples()[0].displacement_mm == 0.0);
  CHECK(sets[0].samples()[1].displacement_mm == 5.0);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("sorted by displacement") != std::string::npos);
}

TEST_CASE("simulation traces write the full state header") {
  SimTrace trace;
  trace.samples.push_back(TraceSample{0.0, 15.0, 0.0, 0.0, 0.0, 0.1, 15.0});
  trace.samples.push_back(TraceSample{0.1, 15.0, 3.5, 2.0, 0.1, 0.1, 11.5});
  std::ostringstream out;
  write_trace(trace, out);
  const std::string text = out.str();
  CHECK(text.find("t_s,setpoint_mm,y_mm,v_mm_s,p_mpa,u_mpa,e_mm\n") == 0);
  CHECK(text.find("\n0.1,15,3.5,2,0.1,0.1,11.5\n") != std::string::npos);
}

TEST_CASE("force curves reload as pressure-tagged datasets") {
  std::vector<StaticState> curve;
  curve.push_back(
      StaticState{0.1, 0.0, 59.28, 38.9, 382.0, 361.9, -0.2246, false});
  curve.push_back(
      StaticState{0.1, 10.0, 36.8, 38.9, 382.0, 361.9, 22.26, false});
  std::ostringstream out;
  write_force_curve(curve, out);
  const std::string text = out.str();
  CHECK(text.find("displacement_mm,force_n,pressure_kpa\n") == 0);

  std::istringstream in(text);
  const std::vector<ForceDisplacementDataset> sets =
      read_force_displacement(in, "inline");
  REQUIRE(sets.size() == 1);
  REQUIRE(sets[0].pressure_kpa().has_value());
  // 0.1 MPa writes back as 100 kPa.
  CHECK(*sets[0].pressure_kpa() == 100.0);
  CHECK(sets[0].samples()[0].force_n == 59.28);
}

TEST_CASE("frequency responses write their header and digits") {
  std::vector<FrequencyPoint> sweep = {{0.5, 7.25, 0.0},
                                       {1.0, 3.625, -6.0205999132796239}};
  std::ostringstream out;
  write_frequency_response(sweep, out);
  const std::string text = out.str();
  CHECK(text.find("frequency_hz,amplitude_mm,amplitude_db\n") == 0);
  CHECK(text.find("\n0.5,7.25,0\n") != std::string::npos);
  // format_number keeps 9 significant digits.
  CHECK(text.find("1,3.625,-6.02059991\n") != std::string::npos);
}

TEST_CASE("format_number is compact and deterministic") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(15.0) == "15");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-0.2246) == "-0.2246");
  CHECK(format_number(73.90083445627209) == "73.9008345");
  CHECK(format_number(1e-4) == "0.0001");
  CHECK(format_number(1.23456789012e8) == "123456789");
}
