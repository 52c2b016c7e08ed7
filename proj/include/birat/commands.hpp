#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "birat/inverse.hpp"
#include "birat/script.hpp"

namespace birat {

// Options shared by every command; mirrors the CLI flags one-to-one.
struct CommandOptions {
  Strategy strategy = Strategy::hybrid;
  int hybrid_limit = 15;
  int step_limit = 30;
  std::optional<int> minors_count;  // engaged: fixed draw count, 0 disables; empty: auto
  bool assume_dominant = false;
  bool check_birational = true;
  bool quick_rank = true;
  bool saturate_output = true;
  bool verbose = false;
  std::uint64_t seed = 0;
  std::ostream* trace_stream = nullptr;  // verbose trace target; report text when unset
};

// exit_code: 0 success, 1 parse or validation error, 2 negative answer,
// 3 escalation step limit reached.
struct CommandReport {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandReport run_command(const SessionScript& script, const SessionScript::Command& command,
                          const CommandOptions& options);

// Runs every command statement in order.  A hard error (code 1) stops the run;
// negative answers and step-limit failures are reported and the worst code wins.
CommandReport run_script(const SessionScript& script, const CommandOptions& options);

// Builds the degree-d family on P^n over GF(101), times the inverse, and checks
// that the inverse forms have degree d^(n-1) before reporting the timing.
CommandReport bench_gabber(int n, int d, const CommandOptions& options);

}  // namespace birat
