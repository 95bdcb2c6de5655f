#pragma once

#include <optional>
#include <string>

#include "rwg/limits.hpp"
#include "rwg/report.hpp"

namespace rwg {

// Inclusive integer interval.
struct Range {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Range&, const Range&) = default;
};

// "A..B" or "A". MalformedError on anything else, DomainError when B < A.
Range parse_range(const std::string& text);
std::string to_string(const Range& r);

enum class Which { kC1, kC2, kBoth };
Which parse_which(const std::string& name);  // MalformedError

struct RunConfig {
  Format format = Format::kText;
  Limits limits;
  int degree_bound = 2;
  bool strict = false;
  Which which = Which::kBoth;
  std::string kind = "word-graph";  // export target
  std::optional<Range> range;       // r for words, ell otherwise
};

// Merges a JSON object (keys: format, range, degree_bound, strict, which,
// kind, caps{...}) over `base`. MalformedError on unknown keys or types.
RunConfig merge_config_json(const std::string& text, RunConfig base);

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitResource = 3 };

struct CommandResult {
  std::string output;
  std::string error;
  int exit_code = kExitOk;
};

// Report builders. Each throws DomainError when the range is outside what
// the command accepts; per-value resource limits become SKIPPED rows.
Report words_report(const Range& r, const RunConfig& cfg);
Report graph_report(const Range& ell, const RunConfig& cfg);
Report blambda_report(const Range& ell, const RunConfig& cfg);
Report chroma_report(const Range& ell, const RunConfig& cfg);
Report separation_report(const Range& ell, const RunConfig& cfg);
Report identities_report(const Range& ell, const RunConfig& cfg);
Report conjectures_report(const Range& ell, const RunConfig& cfg);
Report verify_all_report(const Range& ell, const RunConfig& cfg);
Report export_report(const Range& ell, const RunConfig& cfg);

// Dispatches by name, renders in cfg.format and maps the outcome onto an
// exit code: 2 usage, 1 invariant failure (or any claim mismatch under
// strict), 3 resource limit, else 0.
CommandResult run_command(const std::string& command, const RunConfig& cfg);

}  // namespace rwg
