/// @file maintainability.hpp
/// Time-based quantities and conversion of maintainability data into
/// steady-state component availability. All durations are in hours.
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "rbdkit/probability.hpp"

namespace rbdkit {

/// Mean times describing a repairable item's life cycle.
///
/// Only `mtbf` and `mdt` enter availability math; `mttr` is informational.
/// The `mtbf` operand is whatever the data sheet calls MTBF. Manufacturers
/// frequently quote mean time *before* failure (i.e. MTTF); no attempt is
/// made to tell the two apart.
struct MeanTimes {
  std::optional<double> mttf;
  std::optional<double> mtbf;
  std::optional<double> mut;
  std::optional<double> mdt;
  std::optional<double> mttr;

  /// Throws ValidationError if a present field is negative or non-finite.
  void validate() const;
};

/// Inputs of the repair pipeline that together make up the mean down time.
struct MaintainabilityParams {
  double mttres = 0.0;  ///< time to restore: notification, diagnosis, swap, checks
  double mldt = 0.0;    ///< mean logistic delay
  double madt = 0.0;    ///< mean administrative delay
  Probability pnrs{1.0};  ///< probability the spare stock is not exhausted
  double tat = 0.0;     ///< turn-around time for a missing spare

  void validate() const;

  friend bool operator==(const MaintainabilityParams&,
                         const MaintainabilityParams&) = default;
};

/// Availability given directly.
struct DirectAvailability {
  Probability availability;
  friend bool operator==(const DirectAvailability&,
                         const DirectAvailability&) = default;
};

/// Availability derived from MTBF and the full repair pipeline.
struct DerivedAvailability {
  double mtbf = 0.0;
  MaintainabilityParams maint;
  friend bool operator==(const DerivedAvailability&,
                         const DerivedAvailability&) = default;
};

/// Availability derived from MTBF and a known MDT.
struct DerivedSimpleAvailability {
  double mtbf = 0.0;
  double mdt = 0.0;
  friend bool operator==(const DerivedSimpleAvailability&,
                         const DerivedSimpleAvailability&) = default;
};

using ComponentSpec = std::variant<DirectAvailability, DerivedAvailability,
                                   DerivedSimpleAvailability>;

struct Component {
  std::string id;
  ComponentSpec spec;

  friend bool operator==(const Component&, const Component&) = default;
};

/// MDT = MTTRes + MLDT + MADT + (1 - PNRS) * TAT, summed left to right.
double mean_down_time(const MaintainabilityParams& p);

/// Steady-state availability MTBF / (MTBF + MDT).
///
/// @p component names the item in error messages.
Probability availability_from_times(double mtbf, double mdt,
                                    const std::string& component = {});

/// MDT of a derived component, nullopt for directly given availability.
std::optional<double> component_mdt(const Component& c);

Probability component_availability(const Component& c);

/// 1 - a. Exact involution.
inline Probability unavailability(Probability a) { return ~a; }

}  // namespace rbdkit
