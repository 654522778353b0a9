#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sumprod/set_ops.hpp"

namespace sumprod::cli {

enum class Command { Verify, Construct, Subgroup, Bench };
enum class OutputFormat { Json, Csv, Text };

/// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // a check failed or a witness did not verify
  kExitUsage = 2,
  kExitBudget = 3,
};

inline constexpr std::uint64_t kDefaultSeed = 20061127;

struct JobConfig {
  Command command = Command::Verify;
  std::optional<std::uint64_t> p;
  std::optional<std::string> set_literal;
  std::optional<std::string> lemma;
  std::optional<std::string> mode;  // "exhaustive" | "random"
  std::optional<int> n;
  std::optional<double> eps;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::Json;

  // verify-only tuning
  std::optional<std::uint32_t> max_size;
  std::optional<int> max_summands;
  std::optional<int> max_power;
  std::optional<int> max_multiplier;
  unsigned threads = 1;
  bool timing = true;

  SumsetBackend backend = SumsetBackend::DenseShift;
};

/// Empty when the fields present are exactly those `command` accepts, else a
/// message naming the first offending field.
std::string validate(const JobConfig& config);

/// Runs a validated job, writing the report to config.output_path or `out`.
/// Never throws; failures map to ExitCode values with a message on `err`.
int run_job(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) into a JobConfig and runs it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumprod::cli
