#pragma once

// Command-line front end: verification sweeps, operation counting, published
// comparison tables, and accuracy runs.  The heavy lifting lives in
// run_command so tests can drive commands without spawning a process.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "amqft/signal.hpp"

namespace amqft {

enum class Command { Verify, Count, Tables, Accuracy };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  Command command = Command::Verify;
  std::vector<int> variants = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<TransformKind> kinds = {TransformKind::Cdft, TransformKind::Rdft,
                                      TransformKind::Dct, TransformKind::Dst};
  int min_log2 = 2;   // sizes run from 2^min_log2 ...
  int max_log2 = 8;   // ... to 2^max_log2 inclusive
  int trials = 20;
  std::uint64_t seed = 1;
  double tolerance = 1e-6;
  std::string output_path;  // empty: rows go to the out stream
  OutputFormat format = OutputFormat::Csv;
  std::string table_name;   // tables command only
  // Test hook: perturbs every constant table before running, so a verify
  // sweep must fail.
  bool corrupt_constants = false;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // an assertion/tolerance/match failed
inline constexpr int kExitUsage = 2;  // configuration rejected

// Executes one command.  Report rows go to `out` (or to config.output_path
// when set); diagnostics and warnings go to `err`.  Returns the exit code.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

// Flag-parsing helpers shared by the tool and its tests.  All throw
// std::invalid_argument on malformed input.
std::vector<int> parse_variant_set(const std::string& text);          // "1,3" "2-5" "1..8"
std::vector<TransformKind> parse_kind_set(const std::string& text);   // "cdft,dst"
void parse_size_range(const std::string& text, int& min_log2,
                      int& max_log2);                                 // "4..2048" "64"

}  // namespace amqft
