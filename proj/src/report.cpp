/// @file report.cpp
#include "rbdkit/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rbdkit {

std::optional<int> nines(Probability a) {
  double q = a.complement();
  if (q <= 0.0) return std::nullopt;
  return static_cast<int>(std::floor(-std::log10(q)));
}

double downtime_minutes(Probability a, double minutes_per_year) {
  return a.complement() * minutes_per_year;
}

Report make_report(const Model& m, Probability system,
                   double minutes_per_year) {
  Report r;
  r.system = system;
  r.minutes_per_year = minutes_per_year;
  for (const auto& [id, c] : m.components)
    r.components.push_back({id, component_availability(c), component_mdt(c)});
  return r;
}

std::string format_sig17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_shortest(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string json_quote(std::string_view s) {
  return nlohmann::json(std::string(s)).dump();
}

void JsonWriter::newline() {
  out_ += '\n';
  out_.append(2 * first_.size(), ' ');
}

void JsonWriter::before_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (first_.empty()) return;
  if (!first_.back()) out_ += ',';
  first_.back() = false;
  newline();
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::close(char bracket) {
  bool empty = first_.back();
  first_.pop_back();
  if (!empty) newline();
  out_ += bracket;
  return *this;
}

JsonWriter& JsonWriter::end_object() { return close('}'); }

JsonWriter& JsonWriter::begin_array() {
  before_value();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() { return close(']'); }

JsonWriter& JsonWriter::key(std::string_view k) {
  before_value();
  out_ += json_quote(k);
  out_ += ": ";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::raw(std::string_view literal) {
  before_value();
  out_ += literal;
  return *this;
}

std::string emit_report(const Report& r, ReportFormat format) {
  auto n = nines(r.system);
  double downtime = downtime_minutes(r.system, r.minutes_per_year);

  if (format == ReportFormat::kJson) {
    JsonWriter w;
    w.begin_object();
    w.key("availability").raw(format_sig17(r.system.value()));
    w.key("unavailability").number(r.system.complement());
    w.key("nines");
    n ? w.integer(*n) : w.string("inf");
    w.key("downtime_minutes_per_year").number(downtime);
    w.key("per_component").begin_array();
    for (const auto& row : r.components) {
      w.begin_object();
      w.key("id").string(row.id);
      w.key("availability").raw(format_sig17(row.availability.value()));
      if (row.mdt_hours) w.key("mdt_hours").number(*row.mdt_hours);
      w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
  }

  std::ostringstream os;
  auto pad = [](std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
  };
  auto line = [&](const char* label, const std::string& value) {
    os << pad(label, 27) << value << '\n';
  };
  line("availability", format_sig17(r.system.value()));
  line("unavailability", format_shortest(r.system.complement()));
  line("nines", n ? std::to_string(*n) : "inf");
  line("downtime (min/year)", format_shortest(downtime));
  if (!r.components.empty()) {
    std::size_t width = 9;
    for (const auto& row : r.components) width = std::max(width, row.id.size());
    os << '\n'
       << pad("component", width) << "  " << pad("availability", 21)
       << "  mdt_hours\n";
    for (const auto& row : r.components) {
      os << pad(row.id, width) << "  "
         << pad(format_sig17(row.availability.value()), 21) << "  "
         << (row.mdt_hours ? format_shortest(*row.mdt_hours) : "-") << '\n';
    }
  }
  return os.str();
}

}  // namespace rbdkit
