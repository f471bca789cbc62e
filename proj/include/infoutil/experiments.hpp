#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "infoutil/analysis.hpp"

namespace infoutil {

enum class Experiment { kCoin, kPennies, kVerify };

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Experiment experiment = Experiment::kCoin;
  std::size_t steps = 1000;
  std::uint64_t seed = 1;
  double bias = 0.9;
  double alpha = 4.0;
  /// Empty selects default_output_path(experiment).
  std::string output_path;
  bool summary = false;
};

std::size_t default_steps(Experiment e);
std::string default_output_path(Experiment e);

/// Throws std::invalid_argument naming the offending field.
void validate(const RunConfig& config);

struct EpisodeResult {
  InteractionHistory history;
  EntropyTrace trace;
};

/// Laplace agent against a biased coin.
EpisodeResult simulate_coin(double bias, std::size_t steps, std::uint64_t seed);
/// Matcher (agent seat) against unmatcher (environment seat), both smooth
/// fictitious play with gain alpha.
EpisodeResult simulate_pennies(double alpha, std::size_t steps, std::uint64_t seed);

/// Each command writes its report to `out` and diagnostics to `err`, and
/// returns a process exit code.
int cmd_coin(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pennies(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace infoutil
