#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "levibranch/rootsys.hpp"

namespace lvb {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitValidation = 2, kExitGuard = 3, kExitIo = 4 };

/// Settings shared by every command plus the command-specific parameters.
/// Built from an optional JSON file, then overridden by flags.
struct JobConfig {
  std::optional<Family> family;
  int rank = 0;
  std::vector<int> levi;
  unsigned threads = 1;
  std::optional<std::string> cache_dir;
  std::uint64_t group_guard = 0;       // 0: library default
  std::uint64_t character_budget = 0;  // 0: library default
  std::uint64_t seed = 1;

  std::optional<std::string> lambda, mu, nu;
  std::optional<int> box, bound, size;
  std::optional<std::string> certs, summary, csv, factors;
  bool resume = false, oracle = false, polarisation = false;
};

/// Reads a config object; throws ValidationError on unknown keys or bad types.
JobConfig config_from_json(const nlohmann::json& j);
/// "C:6", "gl:4" or {"family": "C", "rank": 6, "levi": [1, 2]} into `cfg`.
void apply_system(JobConfig& cfg, const nlohmann::json& descriptor);

/// Cache file for the partition function of a Levi, keyed by a hash of (family, rank, S̄).
std::filesystem::path partition_cache_path(const std::filesystem::path& dir, const LeviDatum& levi);

/// Entry point of the levibranch tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lvb
