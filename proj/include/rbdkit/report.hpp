/// @file report.hpp
/// Availability figures as users quote them: unavailability, nines and
/// yearly downtime, rendered as text or JSON.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbdkit/model.hpp"
#include "rbdkit/probability.hpp"

namespace rbdkit {

/// 365-day year.
constexpr double kMinutesPerYear = 525600.0;

enum class ReportFormat { kText, kJson };

/// floor(-log10(1 - A)); nullopt when A == 1 (reported as "inf").
std::optional<int> nines(Probability a);

double downtime_minutes(Probability a, double minutes_per_year = kMinutesPerYear);

struct ComponentRow {
  std::string id;
  Probability availability;
  std::optional<double> mdt_hours;  ///< derived components only
};

struct Report {
  Probability system;
  double minutes_per_year = kMinutesPerYear;
  std::vector<ComponentRow> components;
};

/// Rows for every component of @p m, ordered by id.
Report make_report(const Model& m, Probability system,
                   double minutes_per_year = kMinutesPerYear);

/// JSON keys, in order: availability, unavailability, nines,
/// downtime_minutes_per_year, per_component[{id, availability, mdt_hours?}].
/// Availabilities use 17 significant digits; other reals use the shortest
/// round-trip form. Output is byte-stable for identical input.
std::string emit_report(const Report& r, ReportFormat format);

// Number and string formatting shared by the CLI renderers.
std::string format_sig17(double v);
std::string format_shortest(double v);
std::string json_quote(std::string_view s);

/// Minimal indenting JSON writer with fixed key order.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  /// Emits @p literal verbatim (numbers, true/false, pre-quoted strings).
  JsonWriter& raw(std::string_view literal);
  JsonWriter& string(std::string_view s) { return raw(json_quote(s)); }
  JsonWriter& number(double v) { return raw(format_shortest(v)); }
  JsonWriter& integer(long long v) { return raw(std::to_string(v)); }
  JsonWriter& boolean(bool v) { return raw(v ? "true" : "false"); }

  /// The document followed by a newline.
  std::string str() const { return out_ + "\n"; }

 private:
  void before_value();
  JsonWriter& close(char bracket);
  void newline();

  std::string out_;
  std::vector<bool> first_;  // per open container: no element written yet
  bool after_key_ = false;
};

}  // namespace rbdkit
