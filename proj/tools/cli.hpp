#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fanohodge/report.hpp"

namespace fanohodge::cli {

enum class Command { diamond, verify, identity, sweep };
enum class Format { text, json };

// Exit codes.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::sweep;
  // diamond: fano-odd | fano-even | sym | jac
  // verify: odd | lemma-k0 | bgmn | hochschild | euler-even | stacky-length
  // identity: gessel | gessel-series | chu-vandermonde | multiplicity-at-one | q-binomial
  std::string target;
  std::optional<int> g;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> max_g;  // 12 for sweep, 40 for identity multiplicity-at-one
  int max_m = 30;
  int max_a = 60;
  int max_n = 40;
  Format format = Format::text;
  std::optional<std::string> output;
  bool timing = true;
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct ParseResult {
  std::optional<CliConfig> config;  // empty when parsing ended the run
  int exit_code = kExitVerified;
};

/// Parses argv; help and usage errors are written to out / err and reported
/// through exit_code with config left empty.
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a parsed configuration. Returns 0 when every check verified, 1 if
/// any report failed (reports are still emitted), 2 on a usage error.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

int exit_code_for(std::span<const VerificationReport> reports);

/// Runs jobs on up to `threads` workers; results keep the order of `jobs`.
std::vector<VerificationReport> run_jobs(const std::vector<std::function<VerificationReport()>>& jobs,
                                         unsigned threads);

/// The report list produced by `sweep`, in emission order.
std::vector<VerificationReport> sweep_reports(const CliConfig& config);

}  // namespace fanohodge::cli
