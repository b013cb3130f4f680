// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "urequiv/explorer.hpp"

namespace urequiv {

inline constexpr const char* kToolVersion = "0.1.0";

/// Parsed command line. Exit codes of run(): 0 all checks satisfied,
/// 1 violation or equality residual beyond tolerance, 2 usage/config error
/// (reported by main_with_args via exceptions).
struct RunConfig {
  enum class Command { check, region, minimize, convert, reconstruct };

  Command command = Command::check;
  std::uint64_t seed = 0;
  long n = 10000;
  int dim = 3;
  double theta_deg = 90.0;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  bool alphas_set = false;  // check: force these Renyi indices on every sample
  double value = 0.0;
  std::string direction;               // convert: "v2h" or "h2v"
  std::vector<std::string> relations;  // check: ids, empty or "all" = all
  std::string output_path;             // empty = stdout
  std::string format;                  // "csv" or "json"; per-command default
};

/// Executes the configured command, writes the report, returns 0 or 1.
/// Config problems throw Error (mapped to exit 2 by main_with_args).
int run(const RunConfig& config);

/// Parse argv and run. Returns the process exit code.
int main_with_args(int argc, const char* const* argv);

/// %.17g — every double round-trips exactly.
std::string format_double(double x);

void emit_scan_report(const ScanSummary& summary, const RunConfig& config, std::ostream& out);
void emit_region_report(const RegionSample& region, const RunConfig& config, std::ostream& out);
void emit_minimize_report(const OptimizationResult& result, const std::string& objective,
                          const RunConfig& config, std::ostream& out);

struct ReconstructRow {
  long index = 0;
  double err_theorem = 0.0;    // commutative-set path vs Born
  double err_covariance = 0.0; // Lagrange-covariance path vs Born
};
void emit_reconstruct_report(const std::vector<ReconstructRow>& rows,
                             const RunConfig& config, std::ostream& out);

}  // namespace urequiv
