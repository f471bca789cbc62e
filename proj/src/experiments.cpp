#include "infoutil/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "infoutil/agents.hpp"
#include "infoutil/trace_csv.hpp"

namespace infoutil {

namespace {

// Largest horizon for the exact report printed with --summary.
constexpr std::size_t kSummaryHorizon = 8;

const char* name_of(Experiment e) {
  switch (e) {
    case Experiment::kCoin:
      return "coin";
    case Experiment::kPennies:
      return "pennies";
    case Experiment::kVerify:
      return "verify";
  }
  return "?";
}

void line(std::ostream& out, const char* label, double value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "  %-34s %.12g\n", label, value);
  out << buf;
}

void print_exact_report(std::ostream& out, const GenerativeCoupling& c, std::size_t steps) {
  const std::size_t horizon = std::min(steps, kSummaryHorizon);
  const ExpectedRewardReport r = expected_rewards_bruteforce(c, horizon);
  const UtilityDecomposition u = expected_utilities(c, horizon);
  out << "exact decomposition over the first " << horizon << " interactions:\n";
  line(out, "E[r_G]", r.e_reward_G);
  line(out, "E[r_P]", r.e_reward_P);
  line(out, "E[r_Q]", r.e_reward_Q);
  line(out, "H[P(a|o)]", r.h_actions);
  line(out, "H[Q(o|a)]", r.h_observations);
  line(out, "D[Q(o|a) || P(o|a)]", r.kl_obs);
  line(out, "D[P(a|o) || Q(a|o)]", r.kl_act);
  line(out, "GU_agent", u.gu_agent);
  line(out, "GU_env", u.gu_env);
  line(out, "PU_agent", u.pu_agent);
  line(out, "PU_env", u.pu_env);
  line(out, "E[U_G]", u.e_utility_G);
  line(out, "E[U_P]", u.e_utility_P);
  line(out, "E[U_Q]", u.e_utility_Q);
}

bool write_trace(const RunConfig& config, const EntropyTrace& trace, std::ostream& err, std::string& path) {
  path = config.output_path.empty() ? default_output_path(config.experiment) : config.output_path;
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  write_trace_csv(file, trace, config.seed);
  file.flush();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

template <typename Simulate, typename Summarize>
int run_experiment(const RunConfig& config, std::ostream& out, std::ostream& err, Simulate simulate,
                   Summarize summarize) {
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const EpisodeResult result = simulate();
  std::string path;
  if (!write_trace(config, result.trace, err, path)) {
    return kExitFailure;
  }
  out << name_of(config.experiment) << ": steps=" << config.steps << " seed=" << config.seed << " trace=" << path
      << '\n';
  summarize(result.trace.rows.back());
  return kExitSuccess;
}

}  // namespace

std::size_t default_steps(Experiment e) { return e == Experiment::kPennies ? 5000 : 1000; }

std::string default_output_path(Experiment e) { return std::string(name_of(e)) + ".csv"; }

void validate(const RunConfig& config) {
  if (config.steps < 1) {
    throw std::invalid_argument("steps must be at least 1");
  }
  if (!(config.bias >= 0.0 && config.bias <= 1.0)) {
    throw std::invalid_argument("bias must lie in [0, 1]");
  }
  if (!(config.alpha > 0.0) || !std::isfinite(config.alpha)) {
    throw std::invalid_argument("alpha must be a positive number");
  }
}

EpisodeResult simulate_coin(double bias, std::size_t steps, std::uint64_t seed) {
  LaplaceAgent agent;
  BiasedCoin coin(bias);
  GenerativeCoupling coupling(agent, coin, InteractionAlphabet::coin());
  UniformSource rng(seed);
  EpisodeResult result;
  result.history = run_episode(coupling, steps, rng);
  result.trace = realized_trace(coupling, result.history);
  return result;
}

EpisodeResult simulate_pennies(double alpha, std::size_t steps, std::uint64_t seed) {
  FictitiousPlayer matcher(alpha, PenniesRole::kMatcher, Seat::kAgent);
  FictitiousPlayer unmatcher(alpha, PenniesRole::kUnmatcher, Seat::kEnvironment);
  GenerativeCoupling coupling(matcher, unmatcher, InteractionAlphabet::coin());
  UniformSource rng(seed);
  EpisodeResult result;
  result.history = run_episode(coupling, steps, rng);
  result.trace = realized_trace(coupling, result.history);
  return result;
}

int cmd_coin(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_experiment(
      config, out, err, [&] { return simulate_coin(config.bias, config.steps, config.seed); },
      [&](const TraceRow& last) {
        out << "bias=" << config.bias << '\n';
        line(out, "kl_obs_cum (coin || agent)", last.kl_obs_cum);
        line(out, "kl_obs_inst", last.kl_obs_inst);
        line(out, "agent cross-entropy rate", last.agent_cross_entropy_cum());
        line(out, "agent action entropy (cum)", last.h_act_agent_cum);
        line(out, "coin observation entropy (cum)", last.h_obs_env_cum);
        line(out, "coin action-expectation entropy", last.h_act_env_cum);
        line(out, "realized u_P_cum", last.u_P_cum);
        if (config.summary) {
          LaplaceAgent agent;
          BiasedCoin coin(config.bias);
          print_exact_report(out, GenerativeCoupling(agent, coin, InteractionAlphabet::coin()), config.steps);
        }
      });
}

int cmd_pennies(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_experiment(
      config, out, err, [&] { return simulate_pennies(config.alpha, config.steps, config.seed); },
      [&](const TraceRow& last) {
        out << "alpha=" << config.alpha << '\n';
        line(out, "player 1 action entropy (cum)", last.h_act_agent_cum);
        line(out, "player 2 action entropy (cum)", last.h_obs_env_cum);
        line(out, "player 1 prediction KL (cum)", last.kl_obs_cum);
        line(out, "player 2 prediction KL (cum)", last.kl_act_cum);
        line(out, "player 1 cross-entropy rate", last.agent_cross_entropy_cum());
        line(out, "player 2 cross-entropy rate", last.env_cross_entropy_cum());
        if (config.summary) {
          FictitiousPlayer matcher(config.alpha, PenniesRole::kMatcher, Seat::kAgent);
          FictitiousPlayer unmatcher(config.alpha, PenniesRole::kUnmatcher, Seat::kEnvironment);
          print_exact_report(out, GenerativeCoupling(matcher, unmatcher, InteractionAlphabet::coin()), config.steps);
        }
      });
}

}  // namespace infoutil
