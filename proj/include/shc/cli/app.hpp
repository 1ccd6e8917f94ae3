#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shc/exactalg/errors.hpp"

namespace shc::cli {

inline constexpr int kReportVersion = 1;

// Bad flags, spec files or expressions: exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string spec_path;
  std::string preset;
  std::string perturb = "none";
  std::optional<int> shift;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  std::uint32_t p = 3;
  std::size_t n = 3;
  std::uint64_t budget = 100'000'000;
  std::string out;
  std::string cob;
  std::string group = "sl2";
  bool verify_gluing = false;
  // Rational entries ("2", "-1/3") replacing the trace form of bg-sl2.
  std::optional<std::vector<std::vector<std::string>>> gram;
};

struct CommandResult {
  nlohmann::json report;
  bool passed = false;
};

CommandResult cmd_check_symplectic(const RunConfig& c);
CommandResult cmd_check_lagrangian(const RunConfig& c);
CommandResult cmd_fuse(const RunConfig& c);
CommandResult cmd_tft(const RunConfig& c);
CommandResult cmd_cob_parse(const RunConfig& c);
CommandResult cmd_reps_count(const RunConfig& c);

// Envelope shared by every report: schema, version, convention flags, config.
nlohmann::json envelope(const RunConfig& c);

// Parse argv, dispatch, write the report to --out or `out`. Returns the exit
// code: 0 when every verdict passes, 1 when one fails, 2 on bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shc::cli
