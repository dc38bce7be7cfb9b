#pragma once

#include <gencx/io/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gencx::cli {

enum class Status { Pass, Fail, Skip };

const char* to_string(Status s);

struct CheckEntry {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

/// Exit codes: 0 no failing check, 1 a check failed, 2 malformed input,
/// 3 a precondition rejected the input.
struct Report {
  std::string command;
  /// fnv1a64 of the command, positional arguments and input bytes.
  std::string inputs;
  std::uint64_t seed = 42;
  /// Sorted by name.
  std::vector<CheckEntry> checks;
  io::json result = io::json::object();
  std::string error;
  int exit_code = 0;
};

io::json to_json(const Report& r);
std::string to_text(const Report& r, bool quiet = false);

struct Options {
  std::string command;
  std::vector<std::string> positional;
  std::optional<std::string> input;
  std::uint64_t seed = 42;
  bool json = false;
  bool quiet = false;
};

struct Command {
  std::string name;
  std::string summary;
  /// Library operations the command evaluates.
  std::vector<std::string> ops;
};

const std::vector<Command>& commands();

Report run(const Options& opts);

/// Parses args (without the program name). GENCX_SEED overrides --seed.
/// Usage errors yield a report with exit code 2.
Report run(const std::vector<std::string>& args);

/// Entry point of the gencx binary.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace gencx::cli
