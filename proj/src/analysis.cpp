#include "infoutil/analysis.hpp"

#include <cmath>
#include <limits>

namespace infoutil {

namespace {

std::size_t required_strings(const InteractionAlphabet& alphabet, std::size_t horizon) {
  const std::size_t branching = alphabet.interaction_count();
  std::size_t count = 1;
  for (std::size_t i = 0; i < horizon; ++i) {
    if (count > std::numeric_limits<std::size_t>::max() / branching) {
      return std::numeric_limits<std::size_t>::max();
    }
    count *= branching;
  }
  return count;
}

void check_budget(const InteractionAlphabet& alphabet, std::size_t horizon, std::size_t budget) {
  const std::size_t required = required_strings(alphabet, horizon);
  if (required > budget) {
    throw EnumerationBudgetExceeded(required, budget);
  }
}

// x - y on extended reals where y may be -inf and x is finite.
double gap(double x, double y) { return y == -kInfinity ? kInfinity : x - y; }

// Per-depth collections of the conditionals reachable under G, with their
// G-weights, in depth-first order.
struct DepthTables {
  std::vector<std::string> labels;
  std::vector<double> weights;
  ConditionalTable generating;
  ConditionalTable reference;
};

double term(const DepthTables& t, bool kl_term) {
  if (t.weights.empty()) {
    return 0.0;
  }
  const JointDistribution joint(FiniteDistribution(t.labels, t.weights), t.generating);
  return kl_term ? conditional_kl(joint, t.reference) : conditional_entropy(joint);
}

}  // namespace

EnumerationBudgetExceeded::EnumerationBudgetExceeded(std::size_t required, std::size_t budget)
    : std::length_error("exact enumeration needs " + std::to_string(required) + " interaction strings, budget is " +
                        std::to_string(budget)),
      required_(required),
      budget_(budget) {}

double ExpectedRewardReport::decomposed_G() const { return -(h_actions + h_observations); }
double ExpectedRewardReport::decomposed_P() const { return decomposed_G() - kl_obs; }
double ExpectedRewardReport::decomposed_Q() const { return decomposed_G() - kl_act; }

ExpectedRewardReport expected_rewards_bruteforce(const GenerativeCoupling& c, std::size_t horizon,
                                                 std::size_t budget) {
  check_budget(c.alphabet(), horizon, budget);
  const IOSystem& agent = c.agent();
  const IOSystem& env = c.environment();

  ExpectedRewardReport report;
  report.horizon = horizon;

  struct Node {
    double g = 1.0;
    double prod_P = 1.0;
    double prod_Q = 1.0;
    double log_P_act = 0.0;
    double log_Q_act = 0.0;
    double log_P_obs = 0.0;
    double log_Q_obs = 0.0;
  };

  auto walk = [&](auto&& self, const InteractionHistory& h, const Node& node) -> void {
    if (h.size() == horizon) {
      const double g = node.g;
      report.total_mass += g;
      ++report.support_size;
      report.e_reward_G += g * std::log(g);
      report.e_reward_P += weighted_log(g, node.prod_P);
      report.e_reward_Q += weighted_log(g, node.prod_Q);
      // G > 0 forces the agent's action factors and the environment's
      // observation factors to be positive, so these logs are finite.
      report.h_actions -= g * node.log_P_act;
      report.h_observations -= g * node.log_Q_obs;
      report.kl_obs += g * gap(node.log_Q_obs, node.log_P_obs);
      report.kl_act += g * gap(node.log_P_act, node.log_Q_act);
      return;
    }
    const FiniteDistribution p_act = agent.action_distribution(h);
    const FiniteDistribution q_act = env.action_distribution(h);
    for (std::size_t a = 0; a < p_act.size(); ++a) {
      if (p_act[a] == 0.0) {
        continue;
      }
      const FiniteDistribution p_obs = agent.observation_prediction(h, a);
      const FiniteDistribution q_obs = env.observation_prediction(h, a);
      for (std::size_t o = 0; o < q_obs.size(); ++o) {
        if (q_obs[o] == 0.0) {
          continue;
        }
        Node child = node;
        child.g *= p_act[a] * q_obs[o];
        child.prod_P *= p_act[a] * p_obs[o];
        child.prod_Q *= q_act[a] * q_obs[o];
        child.log_P_act += std::log(p_act[a]);
        child.log_Q_act += safe_log(q_act[a]);
        child.log_P_obs += safe_log(p_obs[o]);
        child.log_Q_obs += std::log(q_obs[o]);
        if (child.g == 0.0) {
          continue;  // underflow; contributes nothing under G
        }
        self(self, h.extended({a, o}), child);
      }
    }
  };
  walk(walk, InteractionHistory{}, Node{});
  return report;
}

UtilityDecomposition expected_utilities(const GenerativeCoupling& c, std::size_t horizon, std::size_t budget) {
  check_budget(c.alphabet(), horizon, budget);
  const IOSystem& agent = c.agent();
  const IOSystem& env = c.environment();

  // actions[d]: prefixes ao_<d+1 with P(a|.) generating and Q(a|.) as reference.
  // observations[d]: prefixes ao_<d+1 a with Q(o|.) generating and P(o|.) as reference.
  std::vector<DepthTables> actions(horizon);
  std::vector<DepthTables> observations(horizon);

  auto walk = [&](auto&& self, const InteractionHistory& h, double g) -> void {
    const std::size_t depth = h.size();
    if (depth == horizon) {
      return;
    }
    const std::string key = h.key();
    FiniteDistribution p_act = agent.action_distribution(h);
    DepthTables& at = actions[depth];
    at.labels.push_back(key);
    at.weights.push_back(g);
    at.generating.emplace_back(p_act);
    at.reference.emplace_back(env.action_distribution(h));

    for (std::size_t a = 0; a < p_act.size(); ++a) {
      const double ga = g * p_act[a];
      if (ga == 0.0) {
        continue;
      }
      FiniteDistribution q_obs = env.observation_prediction(h, a);
      DepthTables& ot = observations[depth];
      ot.labels.push_back(key + static_cast<char>(a));
      ot.weights.push_back(ga);
      ot.generating.emplace_back(q_obs);
      ot.reference.emplace_back(agent.observation_prediction(h, a));
      for (std::size_t o = 0; o < q_obs.size(); ++o) {
        const double gao = ga * q_obs[o];
        if (gao == 0.0) {
          continue;
        }
        self(self, h.extended({a, o}), gao);
      }
    }
  };
  walk(walk, InteractionHistory{}, 1.0);

  UtilityDecomposition u;
  u.horizon = horizon;
  if (horizon == 0) {
    return u;
  }
  double h_act = 0.0;
  double h_obs = 0.0;
  double kl_obs = 0.0;
  double kl_act = 0.0;
  for (std::size_t d = 0; d < horizon; ++d) {
    h_act += term(actions[d], false);
    kl_act += term(actions[d], true);
    h_obs += term(observations[d], false);
    kl_obs += term(observations[d], true);
  }
  const double t = static_cast<double>(horizon);
  // Adding 0.0 turns -0.0 into 0.0 for deterministic systems.
  u.gu_agent = -h_act / t + 0.0;
  u.gu_env = -h_obs / t + 0.0;
  u.pu_agent = -kl_obs / t + 0.0;
  u.pu_env = -kl_act / t + 0.0;
  u.e_utility_G = u.gu_agent + u.gu_env;
  u.e_utility_P = u.e_utility_G + u.pu_agent;
  u.e_utility_Q = u.e_utility_G + u.pu_env;
  return u;
}

EntropyTrace realized_trace(const GenerativeCoupling& c, const InteractionHistory& h) {
  const IOSystem& agent = c.agent();
  const IOSystem& env = c.environment();

  EntropyTrace trace;
  trace.rows.reserve(h.size());

  TraceRow sums;
  InteractionHistory prefix;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Interaction step = h[i];
    const FiniteDistribution p_act = agent.action_distribution(prefix);
    const FiniteDistribution q_act = env.action_distribution(prefix);
    const FiniteDistribution p_obs = agent.observation_prediction(prefix, step.action);
    const FiniteDistribution q_obs = env.observation_prediction(prefix, step.action);

    TraceRow row;
    row.step = i + 1;
    row.h_act_agent = entropy(p_act);
    row.h_obs_env = entropy(q_obs);
    row.h_obs_agent = entropy(p_obs);
    row.h_act_env = entropy(q_act);
    row.kl_obs_inst = kl(q_obs, p_obs);
    row.kl_act_inst = kl(p_act, q_act);

    const double log_p_a = safe_log(p_act[step.action]);
    const double log_q_a = safe_log(q_act[step.action]);
    const double log_p_o = safe_log(p_obs[step.observation]);
    const double log_q_o = safe_log(q_obs[step.observation]);
    row.r_G = log_p_a + log_q_o;
    row.r_P = log_p_a + log_p_o;
    row.r_Q = log_q_a + log_q_o;

    sums.h_act_agent += row.h_act_agent;
    sums.h_obs_env += row.h_obs_env;
    sums.h_obs_agent += row.h_obs_agent;
    sums.h_act_env += row.h_act_env;
    sums.kl_obs_inst += row.kl_obs_inst;
    sums.kl_act_inst += row.kl_act_inst;
    sums.r_G += row.r_G;
    sums.r_P += row.r_P;
    sums.r_Q += row.r_Q;

    const double n = static_cast<double>(row.step);
    row.h_act_agent_cum = sums.h_act_agent / n;
    row.h_obs_env_cum = sums.h_obs_env / n;
    row.h_obs_agent_cum = sums.h_obs_agent / n;
    row.h_act_env_cum = sums.h_act_env / n;
    row.kl_obs_cum = sums.kl_obs_inst / n;
    row.kl_act_cum = sums.kl_act_inst / n;
    row.u_G_cum = sums.r_G / n;
    row.u_P_cum = sums.r_P / n;
    row.u_Q_cum = sums.r_Q / n;

    trace.rows.push_back(row);
    prefix = std::move(prefix).extended(step);
  }
  return trace;
}

InteractionProcess::InteractionProcess(const IOSystem& sys, const InteractionAlphabet& alphabet)
    : sys_(&sys), alphabet_(alphabet) {
  for (const auto& a : alphabet_.actions()) {
    for (const auto& o : alphabet_.observations()) {
      labels_.push_back(a + ":" + o);
    }
  }
}

InteractionHistory InteractionProcess::to_history(std::span<const std::size_t> symbols) const {
  const std::size_t no = alphabet_.observations().size();
  std::vector<Interaction> steps;
  steps.reserve(symbols.size());
  for (std::size_t z : symbols) {
    steps.push_back({z / no, z % no});
  }
  return InteractionHistory(std::move(steps));
}

FiniteDistribution InteractionProcess::next(std::span<const std::size_t> prefix) const {
  const InteractionHistory h = to_history(prefix);
  const std::size_t no = alphabet_.observations().size();
  const FiniteDistribution p_act = sys_->action_distribution(h);
  std::vector<double> probs(labels_.size(), 0.0);
  for (std::size_t a = 0; a < p_act.size(); ++a) {
    if (p_act[a] == 0.0) {
      continue;
    }
    const FiniteDistribution p_obs = sys_->observation_prediction(h, a);
    for (std::size_t o = 0; o < no; ++o) {
      probs[a * no + o] = p_act[a] * p_obs[o];
    }
  }
  return FiniteDistribution(labels_, std::move(probs));
}

EntropyRateCheck entropy_rate_check(const SequentialProcess& process, std::size_t t, std::size_t budget) {
  if (t == 0) {
    throw std::invalid_argument("entropy_rate_check: horizon must be positive");
  }
  const std::vector<ProcessString> strings = enumerate_strings(process, t, budget);

  EntropyRateCheck out;
  std::vector<std::string> labels;
  std::vector<double> probs;
  labels.reserve(strings.size());
  probs.reserve(strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const ProcessString& s = strings[i];
    double p = 1.0;
    for (double c : s.conditionals) {
      p *= c;
    }
    const double u = utility_of_string(s);
    const double reconstructed = probability_from_utility(u, t);
    if (p > 0.0) {
      out.max_probability_relative_error =
          std::max(out.max_probability_relative_error, std::abs(reconstructed - p) / p);
      out.expected_utility += p * u;
    } else if (reconstructed != 0.0) {
      out.max_probability_relative_error = kInfinity;
    }
    labels.push_back(std::to_string(i));
    probs.push_back(p);
  }
  out.negative_entropy_rate = -entropy(FiniteDistribution(std::move(labels), std::move(probs))) / static_cast<double>(t);
  return out;
}

}  // namespace infoutil
