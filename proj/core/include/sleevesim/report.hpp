#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sleevesim {

/// Ordered key-value report: the one shape every command's summary takes,
/// so the text and JSON writers stay trivial and deterministic.
class Report {
 public:
  struct Entry {
    std::string key;
    std::string value;  // numbers pre-formatted by format_number
    bool numeric;
  };

  /// Numeric values must be finite.
  void add(std::string key, double value);
  void add(std::string key, std::string value);

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Shortest representation with 9 significant digits, locale-independent.
/// All CSV and report numbers go through this so identical runs produce
/// byte-identical files.
std::string format_number(double value);

/// "key = value" lines.
void write_report_text(const Report& report, std::ostream& out);

/// Flat JSON object preserving entry order.
void write_report_json(const Report& report, std::ostream& out);

}  // namespace sleevesim
