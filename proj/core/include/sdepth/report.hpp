#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdepth/script.hpp"
#include "sdepth/serre_depth.hpp"

namespace sdepth {

struct RunFlags {
  std::uint64_t seed = 0;
  // Defaults to nvars + 1.
  std::optional<std::size_t> ext_bound;
  // Empty selects the default routes of s_depth.
  std::vector<Route> routes;
  bool verify = false;
};

// Parses `seq,ext,hochster`. Throws StructuralError on unknown names.
std::vector<Route> parse_routes(std::string_view text);

struct RouteRecord {
  std::string route;
  std::optional<std::string> value;
  std::string error;
  std::vector<std::string> sequence;
  std::optional<std::string> maximality;

  friend bool operator==(const RouteRecord&, const RouteRecord&) = default;
};

// One executed command. Fields that do not apply to the command stay empty.
struct CommandRecord {
  std::size_t index = 0;
  std::string command;
  SourcePos pos;
  std::vector<std::string> args;
  // ok | mismatch | incomplete | error
  std::string status = "ok";
  // contract | structural | domain | search_incomplete | internal
  std::string error_kind;
  std::string error;

  std::optional<std::string> value;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> bound;
  std::string instance;
  std::vector<RouteRecord> routes;
  std::string verdict;
  std::string details;
  std::vector<std::string> sequence;
  std::optional<std::string> maximality;
  std::vector<std::string> basis;
  std::vector<std::size_t> ranks;
  std::vector<std::string> differentials;
  std::vector<std::string> ext_modules;

  // Not part of the canonical section.
  double wall_ms = 0;

  friend bool operator==(const CommandRecord&, const CommandRecord&) = default;
};

struct ParseFailure {
  SourcePos pos;
  std::string message;

  friend bool operator==(const ParseFailure&, const ParseFailure&) = default;
};

struct Report {
  std::uint64_t seed = 0;
  std::optional<std::size_t> ext_bound;
  std::vector<std::string> routes;
  bool verify = false;
  std::string ring;
  std::optional<ParseFailure> parse_error;
  std::vector<CommandRecord> commands;
  int exit_code = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

// Executes the commands in order. Never throws for command failures; they
// are recorded per command and folded into the exit code: 2 when any
// sdepth verdict is a mismatch, else 1 on parse or contract errors, else 3
// when a scan hit its bound or the sequence search came up short, else 0.
// 1 on a parse error, else 2 if any command mismatched, else 1 if any
// failed, else 3 if any was incomplete, else 0.
int exit_code_for(const Report& report);

Report run(const Script& script, const RunFlags& flags);

// parse_script + run; a parse failure becomes a report with exit code 1.
Report run_text(std::string_view text, const RunFlags& flags);

// JSON Lines: a header line, one line per command, a summary line. With
// `timing`, a final timing line carries the wall times.
std::string emit_report(const Report& report, bool timing = false);

// Inverse of emit_report. Throws StructuralError on malformed input.
Report parse_report(std::string_view text);

// Human-readable table.
std::string render_table(const Report& report);

}  // namespace sdepth
