#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nilab {

enum class Command { verify, index, table, decompose, convolution };

struct RunConfig {
  Command command = Command::verify;
  std::string family = "A";
  std::optional<unsigned> rank;
  std::optional<unsigned> n;  // matrix size
  std::optional<std::string> partition;
  std::size_t sample_count = 20;
  std::uint64_t seed = 0;
  std::string format = "json";  // json | csv
  std::optional<std::string> output;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int hypothesis_violated = 2;
inline constexpr int usage = 3;
}  // namespace exit_code

struct ParseResult {
  std::optional<RunConfig> config;
  int exit = exit_code::ok;  // meaningful when config is empty (help or usage error)
};

/// args excludes the program name. Diagnostics go to `err`, help text to `out`.
ParseResult parse_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a command, writing the report to config.output or `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nilab
