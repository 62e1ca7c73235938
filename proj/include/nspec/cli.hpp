#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nspec/polyparse.hpp"

namespace nspec {

enum class Command { spectrum, hodge, zeta, pairs, check, random };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

struct RunConfig {
  Command command = Command::spectrum;
  std::string input;          // inline expression / JSON, or a file path
  bool input_is_path = false;
  bool json = false;
  std::optional<std::uint64_t> seed;  // random only
  std::optional<int> count;           // random only
};

struct RunResult {
  int exit_code = 0;          // 0 ok, 1 hypothesis, 2 parse, 3 invariant
  nlohmann::json report;
  std::string text;           // human readable form of the report
};

/// Executes one command; errors are caught and mapped to exit codes.
RunResult run(const RunConfig& cfg);

enum class CheckStatus { pass, fail, skipped, finding };
std::string status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

/// Runs every invariant that applies to the support. Inapplicable checks are
/// reported as skipped with the failed hypothesis; Jordan count mismatches are
/// reported as findings.
std::vector<CheckResult> run_checks(const Support& s);

nlohmann::json to_json(const CheckResult& c);

}  // namespace nspec
