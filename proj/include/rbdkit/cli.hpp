/// @file cli.hpp
/// The rbdkit command line: eval, check, oracle and whatif subcommands.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rbdkit/model.hpp"

namespace rbdkit::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,   ///< validation errors, bad overrides, bad flags
  kIoError = 2,   ///< model file unreadable
  kMismatch = 3,  ///< oracle disagrees with the exact evaluator
  kResource = 4,  ///< enumeration cap or pivot depth exceeded
};

/// One `--set id.field=value` override.
struct WhatIfOverride {
  std::string component_id;
  std::string field;
  double value = 0.0;
};

/// Parses "id.field=value". Throws ValidationError on malformed text or an
/// unknown field name.
WhatIfOverride parse_override(std::string_view text);

/// Applies @p o to the component table of @p m before availability
/// derivation. Setting `availability` makes the component direct; setting
/// `mdt_h` on a pipeline component replaces the pipeline by that MDT;
/// pipeline fields require a pipeline component. Throws ValidationError for
/// an unknown component, an inapplicable field, or an invalid value.
void apply_override(Model& m, const WhatIfOverride& o);

/// Runs the tool with @p args (program name excluded). Reports go to @p out,
/// diagnostics to @p err. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rbdkit::cli
