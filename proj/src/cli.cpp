/// @file cli.cpp
#include "rbdkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rbdkit/analysis.hpp"
#include "rbdkit/dsl.hpp"
#include "rbdkit/error.hpp"
#include "rbdkit/report.hpp"

namespace rbdkit::cli {
namespace {

constexpr double kEnumerationTolerance = 1e-9;
constexpr double kMonteCarloHalfWidths = 4.0;

const char* const kOverrideFields[] = {"availability", "mtbf_h", "mdt_h",
                                       "mttres_h",     "mldt_h", "madt_h",
                                       "pnrs",         "tat_h"};

struct Options {
  std::string path;
  std::string format = "text";
  long minutes_per_year = 525600;
  std::size_t enum_cap = kDefaultEnumerationCap;
  int pivot_depth = 30;
  std::string mode = "enumerate";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::vector<std::string> overrides;

  bool json() const { return format == "json"; }
  FactoringOptions factoring() const {
    FactoringOptions f;
    f.max_pivot_depth = pivot_depth;
    return f;
  }
};

// Reads, parses and validates the model; prints diagnostics to err.
// Returns the exit code on failure.
std::variant<Model, int> load(const Options& opt, std::ostream& err,
                              std::vector<ParseDiagnostic>* diagnostics = nullptr) {
  std::ifstream in(opt.path, std::ios::binary);
  if (!in) {
    err << "error: cannot read model file '" << opt.path << "'\n";
    return kIoError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    err << "error: cannot read model file '" << opt.path << "'\n";
    return kIoError;
  }

  ParseResult parsed = parse_model(buffer.str());
  for (const auto& d : parsed.diagnostics)
    err << format_diagnostic(d, opt.path) << '\n';
  if (diagnostics) *diagnostics = parsed.diagnostics;
  if (!parsed.ok()) return kInvalid;

  // The parser already reports warnings with positions; only errors that
  // slipped past it are surfaced here.
  auto structural = validate(*parsed.model);
  if (has_errors(structural)) {
    for (const auto& d : structural) {
      if (d.severity != Severity::kError) continue;
      err << opt.path << ": " << d.path << ": error: " << d.message << '\n';
      if (diagnostics)
        diagnostics->push_back({Severity::kError, d.path + ": " + d.message, {}});
    }
    return kInvalid;
  }
  return std::move(*parsed.model);
}

void write_summary(JsonWriter& w, Probability a, double minutes) {
  auto n = nines(a);
  w.begin_object();
  w.key("availability").raw(format_sig17(a.value()));
  w.key("unavailability").number(a.complement());
  w.key("nines");
  n ? w.integer(*n) : w.string("inf");
  w.key("downtime_minutes_per_year").number(downtime_minutes(a, minutes));
  w.end_object();
}

std::string text_row(const std::string& label, const std::string& value) {
  std::string s = label;
  if (s.size() < 27) s.append(27 - s.size(), ' ');
  return s + value + "\n";
}

std::string system_kind(const Model& m) {
  if (std::holds_alternative<Network>(m.system)) return "network";
  return to_string(std::get<Block>(m.system).kind());
}

int cmd_eval(const Options& opt, std::ostream& out, std::ostream& err) {
  auto loaded = load(opt, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const Model& m = std::get<Model>(loaded);
  Probability a = evaluate(m, opt.factoring());
  Report r = make_report(m, a, static_cast<double>(opt.minutes_per_year));
  out << emit_report(r, opt.json() ? ReportFormat::kJson : ReportFormat::kText);
  return kOk;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<ParseDiagnostic> diagnostics;
  auto loaded = load(opt, err, &diagnostics);
  if (auto* code = std::get_if<int>(&loaded); code && *code == kIoError)
    return *code;
  const Model* m = std::get_if<Model>(&loaded);

  if (opt.json()) {
    JsonWriter w;
    w.begin_object();
    w.key("valid").boolean(m != nullptr);
    if (m) {
      w.key("system").string(system_kind(*m));
      w.key("components").integer(static_cast<long long>(m->components.size()));
      w.key("instances").integer(static_cast<long long>(instance_count(*m)));
    }
    w.key("diagnostics").begin_array();
    for (const auto& d : diagnostics) {
      w.begin_object();
      w.key("severity").string(to_string(d.severity));
      w.key("message").string(d.message);
      w.key("line").integer(d.span.line);
      w.key("column").integer(d.span.column);
      w.end_object();
    }
    w.end_array();
    w.end_object();
    out << w.str();
  } else if (m) {
    std::size_t warnings = diagnostics.size();
    out << "ok: " << system_kind(*m) << " system, " << m->components.size()
        << " components, " << instance_count(*m) << " instances, " << warnings
        << (warnings == 1 ? " warning\n" : " warnings\n");
  } else {
    out << "invalid: see diagnostics\n";
  }
  return m ? kOk : kInvalid;
}

int cmd_oracle(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.mode != "enumerate" && opt.mode != "mc") {
    err << "error: --mode must be enumerate or mc\n";
    return kInvalid;
  }
  auto loaded = load(opt, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const Model& m = std::get<Model>(loaded);
  Probability exact = evaluate(m, opt.factoring());

  JsonWriter w;
  std::string text;
  w.begin_object();
  w.key("mode").string(opt.mode);
  w.key("exact").raw(format_sig17(exact.value()));
  text += text_row("mode", opt.mode);
  text += text_row("exact", format_sig17(exact.value()));

  bool agree = false;
  if (opt.mode == "enumerate") {
    Enumeration e;
    try {
      e = enumerate(m, opt.enum_cap);
    } catch (const ResourceError& ex) {
      err << "error: " << ex.what() << " (--mode=mc)\n";
      return kResource;
    }
    double diff = std::abs(exact.value() - e.availability.value());
    agree = diff <= kEnumerationTolerance;
    w.key("oracle").raw(format_sig17(e.availability.value()));
    w.key("abs_difference").number(diff);
    w.key("tolerance").number(kEnumerationTolerance);
    w.key("instances").integer(static_cast<long long>(instance_count(m)));
    w.key("states").integer(static_cast<long long>(e.states));
    text += text_row("oracle", format_sig17(e.availability.value()));
    text += text_row("abs_difference", format_shortest(diff));
    text += text_row("tolerance", format_shortest(kEnumerationTolerance));
    text += text_row("states", std::to_string(e.states));
  } else {
    MonteCarloOptions mc;
    mc.samples = opt.samples;
    mc.seed = opt.seed;
    mc.workers = opt.workers;
    MonteCarloResult r = monte_carlo_availability(m, mc);
    double diff = std::abs(exact.value() - r.estimate.value());
    double tolerance = kMonteCarloHalfWidths * r.half_width_95;
    agree = diff <= tolerance;
    w.key("estimate").raw(format_sig17(r.estimate.value()));
    w.key("half_width_95").number(r.half_width_95);
    w.key("abs_difference").number(diff);
    w.key("tolerance").number(tolerance);
    w.key("samples").integer(static_cast<long long>(r.samples));
    w.key("seed").raw(std::to_string(opt.seed));
    w.key("workers").integer(opt.workers);
    text += text_row("estimate", format_sig17(r.estimate.value()));
    text += text_row("half_width_95", format_shortest(r.half_width_95));
    text += text_row("abs_difference", format_shortest(diff));
    text += text_row("tolerance", format_shortest(tolerance));
    text += text_row("samples", std::to_string(r.samples));
    text += text_row("seed", std::to_string(opt.seed));
  }
  w.key("agree").boolean(agree);
  w.end_object();
  text += text_row("agree", agree ? "yes" : "no");

  out << (opt.json() ? w.str() : text);
  return agree ? kOk : kMismatch;
}

int cmd_whatif(const Options& opt, std::ostream& out, std::ostream& err) {
  auto loaded = load(opt, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const Model& base = std::get<Model>(loaded);

  std::vector<WhatIfOverride> overrides;
  Model changed = base;
  try {
    for (const auto& text : opt.overrides) {
      overrides.push_back(parse_override(text));
      apply_override(changed, overrides.back());
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  auto minutes = static_cast<double>(opt.minutes_per_year);
  Probability before = evaluate(base, opt.factoring());
  Probability after = evaluate(changed, opt.factoring());
  double delta = downtime_minutes(after, minutes) - downtime_minutes(before, minutes);

  if (opt.json()) {
    JsonWriter w;
    w.begin_object();
    w.key("overrides").begin_array();
    for (const auto& o : overrides) {
      w.begin_object();
      w.key("component").string(o.component_id);
      w.key("field").string(o.field);
      w.key("value").number(o.value);
      w.end_object();
    }
    w.end_array();
    w.key("before");
    write_summary(w, before, minutes);
    w.key("after");
    write_summary(w, after, minutes);
    w.key("delta_downtime_minutes_per_year").number(delta);
    w.end_object();
    out << w.str();
  } else {
    for (const auto& o : overrides)
      out << "set " << o.component_id << '.' << o.field << " = "
          << format_shortest(o.value) << '\n';
    out << text_row("availability before", format_sig17(before.value()))
        << text_row("availability after", format_sig17(after.value()))
        << text_row("downtime before (min/yr)",
                    format_shortest(downtime_minutes(before, minutes)))
        << text_row("downtime after (min/yr)",
                    format_shortest(downtime_minutes(after, minutes)))
        << text_row("downtime delta (min/yr)", format_shortest(delta));
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("model", opt.path, "Model file")->required();
  sub->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--minutes-per-year", opt.minutes_per_year,
                  "Minutes per year for downtime figures")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--pivot-depth", opt.pivot_depth,
                  "Maximum pivot nesting when factoring networks")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

}  // namespace

WhatIfOverride parse_override(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos)
    throw ValidationError("override '" + std::string(text) +
                          "' is not of the form id.field=value");
  std::string_view target = text.substr(0, eq);
  std::string_view value = text.substr(eq + 1);
  auto dot = target.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == target.size())
    throw ValidationError("override '" + std::string(text) +
                          "' is not of the form id.field=value");

  WhatIfOverride o;
  o.component_id = std::string(target.substr(0, dot));
  o.field = std::string(target.substr(dot + 1));
  if (std::find(std::begin(kOverrideFields), std::end(kOverrideFields),
                o.field) == std::end(kOverrideFields))
    throw ValidationError("unknown field '" + o.field + "' in override");
  if (!value.empty() && value.front() == '+') value.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), o.value);
  if (ec != std::errc() || ptr != value.data() + value.size() ||
      !std::isfinite(o.value))
    throw ValidationError("override value '" + std::string(text.substr(eq + 1)) +
                          "' is not a number");
  return o;
}

void apply_override(Model& m, const WhatIfOverride& o) {
  auto it = m.components.find(o.component_id);
  if (it == m.components.end())
    throw ValidationError("override names unknown component '" +
                          o.component_id + "'");
  Component updated = it->second;
  const std::string& f = o.field;
  auto inapplicable = [&](const char* why) {
    return ValidationError("cannot set " + f + " on component '" +
                           o.component_id + "': " + why);
  };

  if (f == "availability") {
    updated.spec = DirectAvailability{Probability(o.value)};
  } else if (auto* direct = std::get_if<DirectAvailability>(&updated.spec)) {
    (void)direct;
    throw inapplicable("its availability is given directly");
  } else if (f == "mtbf_h") {
    std::visit(
        [&](auto& spec) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(spec)>,
                                        DirectAvailability>)
            spec.mtbf = o.value;
        },
        updated.spec);
  } else if (f == "mdt_h") {
    double mtbf = std::visit(
        [](const auto& spec) -> double {
          if constexpr (std::is_same_v<std::decay_t<decltype(spec)>,
                                       DirectAvailability>)
            return 0.0;
          else
            return spec.mtbf;
        },
        updated.spec);
    updated.spec = DerivedSimpleAvailability{mtbf, o.value};
  } else {
    auto* derived = std::get_if<DerivedAvailability>(&updated.spec);
    if (!derived) throw inapplicable("it is not described by the repair pipeline");
    auto& p = derived->maint;
    if (f == "mttres_h") p.mttres = o.value;
    else if (f == "mldt_h") p.mldt = o.value;
    else if (f == "madt_h") p.madt = o.value;
    else if (f == "tat_h") p.tat = o.value;
    else if (f == "pnrs") p.pnrs = Probability(o.value);
  }

  component_availability(updated);  // range checks
  it->second = std::move(updated);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Exact availability analysis of reliability block diagrams",
               "rbdkit"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate system availability");
  add_common(eval, opt);

  auto* check = app.add_subcommand("check", "Parse and validate only");
  add_common(check, opt);

  auto* oracle = app.add_subcommand(
      "oracle", "Cross-check the exact result against brute force");
  add_common(oracle, opt);
  oracle->add_option("--mode", opt.mode, "enumerate or mc")
      ->check(CLI::IsMember({"enumerate", "mc"}))
      ->capture_default_str();
  oracle->add_option("--samples", opt.samples, "Monte Carlo samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle->add_option("--seed", opt.seed, "Monte Carlo seed")->capture_default_str();
  oracle->add_option("--workers", opt.workers, "Monte Carlo worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle->add_option("--enum-cap", opt.enum_cap,
                     "Largest instance count enumerated exhaustively")
      ->capture_default_str();

  auto* whatif = app.add_subcommand(
      "whatif", "Compare availability before and after parameter overrides");
  add_common(whatif, opt);
  whatif->add_option("--set", opt.overrides, "id.field=value (repeatable)")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt, out, err);
    if (check->parsed()) return cmd_check(opt, out, err);
    if (oracle->parsed()) return cmd_oracle(opt, out, err);
    return cmd_whatif(opt, out, err);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace rbdkit::cli
