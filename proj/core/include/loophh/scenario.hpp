#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loophh/groups.hpp"
#include "loophh/matrix.hpp"

namespace loophh {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInput = 2, kExitGuard = 3 };

struct GroupSpec {
  bool complex = false;
  std::size_t dim = 0;  // real dimension, or number of complex pairs
  std::vector<Matrix> generators;

  CoordinateSpace space() const;
};

struct Scenario {
  std::optional<GroupSpec> group;
  std::optional<CircleAction> circle;
  int kmax = 2;
  int nmax = 4;
  std::vector<std::string> tasks;
  std::string format = "json";
  std::string output = "out";
  std::uint64_t seed = 1;
};

/// Throws Error(ParseError) on malformed documents and Error(InvalidInput) on rejected values.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

struct RunOptions {
  std::optional<std::string> out_dir;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool verify_only = false;
};

/// Runs the tasks in order, writing <out>/<task>.<format>. Returns an ExitCode.
int run_scenario(const Scenario& s, const RunOptions& opts, std::ostream& log, std::ostream& err);
/// Loads and runs; load failures map to kExitInput.
int run_scenario_file(const std::filesystem::path& path, const RunOptions& opts, std::ostream& log, std::ostream& err);

}  // namespace loophh
