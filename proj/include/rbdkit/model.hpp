/// @file model.hpp
/// A component table plus the system structure, and structural validation.
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rbdkit/block.hpp"
#include "rbdkit/maintainability.hpp"
#include "rbdkit/network.hpp"
#include "rbdkit/probability.hpp"

namespace rbdkit {

/// Component availabilities keyed by component id.
using Environment = std::map<std::string, Probability, std::less<>>;

using System = std::variant<Block, Network>;

struct Model {
  std::map<std::string, Component, std::less<>> components;
  System system;

  /// Inserts @p c; throws ValidationError if the id is already present.
  void add_component(Component c);

  friend bool operator==(const Model&, const Model&) = default;
};

enum class Severity { kError, kWarning };

const char* to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string path;  ///< "system", "system/1/0", "network/edge[2]", ...
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Structural checks: k range, non-empty child lists, resolvable leaves and
/// edges, component parameter ranges, network well-formedness. Unused
/// components and an s-t disconnected network are warnings. Diagnostics
/// are ordered by a fixed traversal so identical models give identical
/// lists.
std::vector<Diagnostic> validate(const Model& m);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Availability of every component in the table.
Environment make_environment(const Model& m);

}  // namespace rbdkit
