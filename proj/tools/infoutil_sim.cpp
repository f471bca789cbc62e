// Command-line driver: `infoutil coin|pennies|verify [options]`.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "infoutil/experiments.hpp"
#include "infoutil/verify.hpp"

namespace {

struct Options {
  std::optional<std::size_t> steps;
  std::uint64_t seed = 1;
  double bias = 0.9;
  double alpha = 4.0;
  std::string output;
  bool summary = false;
};

void add_common_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--steps", o.steps, "Number of interactions")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  cmd.add_option("--bias", o.bias, "Coin probability of heads")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cmd.add_option("--alpha", o.alpha, "Sigmoid gain of the fictitious players")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--output", o.output, "Trace CSV path (default: <experiment>.csv)");
  cmd.add_flag("--summary", o.summary, "Print the exact expected-reward decomposition");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-theoretic rewards and utilities for coupled agent/environment systems"};
  app.require_subcommand(1);

  Options options;
  CLI::App* coin = app.add_subcommand("coin", "Laplace agent against a biased coin");
  CLI::App* pennies = app.add_subcommand("pennies", "Smooth fictitious play in matching pennies");
  CLI::App* verify = app.add_subcommand("verify", "Check every expected-reward and utility identity");
  for (CLI::App* cmd : {coin, pennies, verify}) {
    add_common_options(*cmd, options);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return infoutil::kExitUsage;
  }

  infoutil::RunConfig config;
  if (coin->parsed()) {
    config.experiment = infoutil::Experiment::kCoin;
  } else if (pennies->parsed()) {
    config.experiment = infoutil::Experiment::kPennies;
  } else {
    config.experiment = infoutil::Experiment::kVerify;
  }
  config.steps = options.steps.value_or(infoutil::default_steps(config.experiment));
  config.seed = options.seed;
  config.bias = options.bias;
  config.alpha = options.alpha;
  config.output_path = options.output;
  config.summary = options.summary;

  try {
    switch (config.experiment) {
      case infoutil::Experiment::kCoin:
        return infoutil::cmd_coin(config, std::cout, std::cerr);
      case infoutil::Experiment::kPennies:
        return infoutil::cmd_pennies(config, std::cout, std::cerr);
      case infoutil::Experiment::kVerify:
        return infoutil::cmd_verify(config, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return infoutil::kExitFailure;
  }
  return infoutil::kExitFailure;
}
