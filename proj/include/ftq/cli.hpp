#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ftq/errors.hpp"

namespace ftq::cli {

enum ExitCode : int { Ok = 0, Internal = 1, Usage = 2, Mathematical = 3, Resource = 4 };

int exit_code(ErrorCategory category);

struct RunConfig {
  std::string family;
  std::string spec_path;
  std::optional<std::uint32_t> prime;
  std::vector<std::uint32_t> primes;
  std::optional<std::uint32_t> validate;
  unsigned genus = 1;
  std::optional<std::size_t> bound;
  bool oracle = false;
  std::string format = "json";
  std::uint64_t cap_order = 1'000'000;
  std::size_t cap_tensor = 1'000'000;
  std::vector<std::string> generators;
  std::string suite = "paper";
  std::string expression;
};

int cmd_group_info(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_census(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; errors are printed to `err` and mapped to
/// exit codes (2 usage, 3 mathematical, 4 resource).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftq::cli
