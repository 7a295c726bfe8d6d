#include "sleevesim/report.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "sleevesim/errors.hpp"

namespace sleevesim {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void Report::add(std::string key, double value) {
  if (!std::isfinite(value)) {
    throw ValidationError("report value for '" + key + "' is not finite");
  }
  entries_.push_back(Entry{std::move(key), format_number(value), true});
}

void Report::add(std::string key, std::string value) {
  entries_.push_back(Entry{std::move(key), std::move(value), false});
}

void write_report_text(const Report& report, std::ostream& out) {
  for (const auto& e : report.entries()) {
    out << e.key << " = " << e.value << "\n";
  }
}

namespace {

void write_json_string(std::ostream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      case '\r': out << "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out << buf;
        } else {
          out << c;
        }
    }
  }
  out << '"';
}

}  // namespace

void write_report_json(const Report& report, std::ostream& out) {
  out << "{\n";
  const auto& entries = report.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << "  ";
    write_json_string(out, entries[i].key);
    out << ": ";
    if (entries[i].numeric) {
      out << entries[i].value;
    } else {
      write_json_string(out, entries[i].value);
    }
    out << (i + 1 < entries.size() ? ",\n" : "\n");
  }
  out << "}\n";
}

}  // namespace sleevesim
