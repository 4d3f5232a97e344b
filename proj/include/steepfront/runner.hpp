#ifndef STEEPFRONT_RUNNER_HPP
#define STEEPFRONT_RUNNER_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steepfront/config.hpp"

namespace steepfront {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitStall = 3;

struct RunOptions {
    std::optional<std::string> out_override; // --out beats STEEPFRONT_OUT beats config
    bool quiet = false;
};

/// Resolve the output directory for a config (flag > environment > config).
std::filesystem::path resolve_out_dir(const RunConfig& cfg, const RunOptions& opt);

/// Execute a configured run, writing profiles.csv, interfaces.csv,
/// rates.csv, the manifest and optional SVG plots into the output
/// directory. Returns a process exit code.
int run_config(const std::filesystem::path& config_path, const RunOptions& opt,
               std::ostream& log);

/// Validate without running; prints the report. Exit code 0 when valid.
int validate_config(const std::filesystem::path& config_path, std::ostream& log);

/// Summarize a finished run directory: fitted exponents against their
/// targets with pass/fail, and a combined interface-funnel/mass SVG.
/// Missing files produce warnings, not errors.
int report_run(const std::filesystem::path& run_dir, std::ostream& log);

/// Run several configs, each into its own output directory. Independent
/// runs execute in parallel.
int run_sweep(const std::vector<std::filesystem::path>& configs, const RunOptions& opt,
              std::ostream& log);

} // namespace steepfront

#endif
