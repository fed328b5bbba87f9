/// @file maintainability.cpp
#include "rbdkit/maintainability.hpp"

#include <cmath>

#include "rbdkit/error.hpp"

namespace rbdkit {
namespace {

void require_duration(const std::optional<double>& value, const char* name) {
  if (value && (!std::isfinite(*value) || *value < 0.0))
    throw ValidationError(std::string(name) + " must be a finite duration >= 0");
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

void MeanTimes::validate() const {
  require_duration(mttf, "mttf");
  require_duration(mtbf, "mtbf");
  require_duration(mut, "mut");
  require_duration(mdt, "mdt");
  require_duration(mttr, "mttr");
}

void MaintainabilityParams::validate() const {
  require_duration(mttres, "mttres");
  require_duration(mldt, "mldt");
  require_duration(madt, "madt");
  require_duration(tat, "tat");
}

double mean_down_time(const MaintainabilityParams& p) {
  p.validate();
  return p.mttres + p.mldt + p.madt + p.pnrs.complement() * p.tat;
}

Probability availability_from_times(double mtbf, double mdt,
                                    const std::string& component) {
  std::string who = component.empty() ? "" : " of component '" + component + "'";
  if (!std::isfinite(mtbf) || mtbf <= 0.0)
    throw ValidationError("mtbf" + who + " must be > 0");
  if (!std::isfinite(mdt) || mdt < 0.0)
    throw ValidationError("mdt" + who + " must be >= 0");
  double total = mtbf + mdt;
  return Probability::from_parts(mtbf / total, mdt / total);
}

std::optional<double> component_mdt(const Component& c) {
  return std::visit(
      overloaded{
          [](const DirectAvailability&) -> std::optional<double> {
            return std::nullopt;
          },
          [](const DerivedAvailability& d) -> std::optional<double> {
            return mean_down_time(d.maint);
          },
          [](const DerivedSimpleAvailability& d) -> std::optional<double> {
            return d.mdt;
          }},
      c.spec);
}

Probability component_availability(const Component& c) {
  return std::visit(
      overloaded{[](const DirectAvailability& d) { return d.availability; },
                 [&](const DerivedAvailability& d) {
                   return availability_from_times(
                       d.mtbf, mean_down_time(d.maint), c.id);
                 },
                 [&](const DerivedSimpleAvailability& d) {
                   return availability_from_times(d.mtbf, d.mdt, c.id);
                 }},
      c.spec);
}

}  // namespace rbdkit
