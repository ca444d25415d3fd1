#pragma once

#include "dgreen/render.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dgreen {

struct CliConfig {
  std::optional<int> m;
  std::vector<std::string> springer_set;
  Format output_format = Format::Json;
  std::size_t max_candidates = 1000000;
  int max_m = 16;
  bool no_family_filter = false;
  bool emit_certificates = false;
};

/// Reads "key = value" lines (# starts a comment) into cfg. Keys: m, springer,
/// format, max_candidates, max_m, no_family_filter, certificates. Throws
/// ParseError.
void load_config(const std::string& path, CliConfig& cfg);
void load_config_text(const std::string& text, CliConfig& cfg);

/// DGREEN_MAX_CANDIDATES and DGREEN_MAX_M.
void apply_environment(CliConfig& cfg);

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// args excludes the program name. Machine output goes to out, diagnostics
/// to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgreen
