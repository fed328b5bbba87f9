/// @file dsl.hpp
/// Model description language.
///
///   model      := (component | netdecl)* systemdecl
///   component  := "component" ID "{" field ("," field)* "}"
///   field      := ("availability" | "mtbf_h" | "mdt_h" | "mttres_h"
///                 | "mldt_h" | "madt_h" | "pnrs" | "tat_h") "=" NUM
///   systemdecl := "system" "=" (block | "network")
///   block      := ID
///               | "series"   "(" block ("," block)+ ")"
///               | "parallel" "(" block ("," block)+ ")"
///               | "kofn"     "(" INT ";" block ("," block)+ ")"
///               | "bridge"   "(" block "," block "," block "," block "," block ")"
///   netdecl    := "network" "{" "source" "=" ID "," "terminal" "=" ID
///                 ("," "edge" "(" ID "," ID "," ID ")")+ "}"
///
/// `#` starts a comment running to end of line. Identifiers match
/// [A-Za-z_][A-Za-z0-9_-]*. A component gives either `availability` alone,
/// `mtbf_h` with `mdt_h`, or `mtbf_h` with all of `mttres_h`, `mldt_h`,
/// `madt_h`, `pnrs`, `tat_h`. All durations are hours. `mtbf_h` is used as
/// given; data-sheet values that are really mean time to (first) failure
/// are not corrected.
///
/// A file declares at most one network; `system = network` selects it.
/// Edge ids are the component id, suffixed "#2", "#3", ... when a component
/// labels more than one edge.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbdkit/model.hpp"

namespace rbdkit {

struct SourceSpan {
  std::size_t start = 0;  ///< byte offset of the first character
  std::size_t end = 0;    ///< byte offset one past the last character
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct ParseDiagnostic {
  Severity severity = Severity::kError;
  std::string message;
  SourceSpan span;
};

struct ParseResult {
  /// Present iff no error was reported.
  std::optional<Model> model;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

/// Never throws on malformed input; every problem becomes a diagnostic.
ParseResult parse_model(std::string_view text);

/// Canonical source text; parse_model(to_source(m)) reproduces @p m.
/// Single-child series/parallel/kofn nodes are written as their child.
/// Throws StructureError for nodes the grammar cannot express (no children).
std::string to_source(const Model& m);

/// "file:line:col: severity: message".
std::string format_diagnostic(const ParseDiagnostic& d, std::string_view file);

}  // namespace rbdkit
