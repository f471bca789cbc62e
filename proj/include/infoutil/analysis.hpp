#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "infoutil/io_system.hpp"
#include "infoutil/reward.hpp"

namespace infoutil {

/// Default cap on the number of interaction strings an exact enumeration may
/// visit: 4^8.
inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 16;

class EnumerationBudgetExceeded : public std::length_error {
 public:
  EnumerationBudgetExceeded(std::size_t required, std::size_t budget);
  /// (|A| |O|)^t, saturated at SIZE_MAX.
  std::size_t required() const { return required_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

/// Expected rewards of G, P and Q over the first `horizon` interactions,
/// computed twice: directly as E_G[ln X(ao_<=t)] from full-sequence
/// probabilities, and through the entropy / relative-entropy terms built from
/// the separated action and observation factor products.
struct ExpectedRewardReport {
  std::size_t horizon = 0;

  double e_reward_G = 0.0;
  double e_reward_P = 0.0;
  double e_reward_Q = 0.0;

  /// H[P(a_<=t | o_<t)]
  double h_actions = 0.0;
  /// H[Q(o_<=t | a_<=t)]
  double h_observations = 0.0;
  /// D[Q(o_<=t | a_<=t) || P(o_<=t | a_<=t)]
  double kl_obs = 0.0;
  /// D[P(a_<=t | o_<t) || Q(a_<=t | o_<t)]
  double kl_act = 0.0;

  /// Sum of G over the enumerated strings; 1 up to rounding.
  double total_mass = 0.0;
  /// Strings with G > 0.
  std::size_t support_size = 0;

  double decomposed_G() const;
  double decomposed_P() const;
  double decomposed_Q() const;
};

ExpectedRewardReport expected_rewards_bruteforce(const GenerativeCoupling& c, std::size_t horizon,
                                                 std::size_t budget = kDefaultEnumerationBudget);

/// Per-step entropy and relative-entropy rates whose sums give the expected
/// utilities of G, P and Q.
struct UtilityDecomposition {
  std::size_t horizon = 0;

  double gu_agent = 0.0;
  double gu_env = 0.0;
  double pu_agent = 0.0;
  double pu_env = 0.0;

  double e_utility_G = 0.0;
  double e_utility_P = 0.0;
  double e_utility_Q = 0.0;
};

/// Evaluates each per-step term as a conditional entropy or conditional KL
/// over the G-reachable prefixes at that depth, then averages over steps.
UtilityDecomposition expected_utilities(const GenerativeCoupling& c, std::size_t horizon,
                                        std::size_t budget = kDefaultEnumerationBudget);

/// One realized step of an episode. Instantaneous terms are the per-step
/// conditionals of both systems at the realized prefix; *_cum columns are
/// running means over steps 1..step.
struct TraceRow {
  std::size_t step = 0;

  double h_act_agent = 0.0;
  double h_obs_env = 0.0;
  double h_obs_agent = 0.0;
  double h_act_env = 0.0;
  double kl_obs_inst = 0.0;
  double kl_act_inst = 0.0;

  double h_act_agent_cum = 0.0;
  double h_obs_env_cum = 0.0;
  double h_obs_agent_cum = 0.0;
  double h_act_env_cum = 0.0;
  double kl_obs_cum = 0.0;
  double kl_act_cum = 0.0;

  double r_G = 0.0;
  double r_P = 0.0;
  double r_Q = 0.0;
  double u_G_cum = 0.0;
  double u_P_cum = 0.0;
  double u_Q_cum = 0.0;

  /// Running agent cross-entropy rate: action entropy + environment
  /// observation entropy + observation KL, all averaged.
  double agent_cross_entropy_cum() const { return h_act_agent_cum + h_obs_env_cum + kl_obs_cum; }
  double env_cross_entropy_cum() const { return h_act_agent_cum + h_obs_env_cum + kl_act_cum; }
};

struct EntropyTrace {
  std::vector<TraceRow> rows;
};

EntropyTrace realized_trace(const GenerativeCoupling& c, const InteractionHistory& h);

/// A system viewed as a single stochastic process over interactions z = (a, o),
/// with conditionals sys(a | ao_<t) sys(o | ao_<t a). Symbol index is
/// a * |O| + o.
class InteractionProcess final : public SequentialProcess {
 public:
  InteractionProcess(const IOSystem& sys, const InteractionAlphabet& alphabet);

  const std::vector<std::string>& alphabet() const override { return labels_; }
  FiniteDistribution next(std::span<const std::size_t> prefix) const override;

  InteractionHistory to_history(std::span<const std::size_t> symbols) const;

 private:
  const IOSystem* sys_;
  InteractionAlphabet alphabet_;
  std::vector<std::string> labels_;
};

/// Exact expected utility of a process over strings of length t, and its
/// negative entropy rate computed from the full string distribution.
struct EntropyRateCheck {
  double expected_utility = 0.0;
  double negative_entropy_rate = 0.0;
  /// Largest relative gap between P(x_<=t) and exp(t U(x_<=t)) over all strings.
  double max_probability_relative_error = 0.0;
};

EntropyRateCheck entropy_rate_check(const SequentialProcess& process, std::size_t t,
                                    std::size_t budget = kDefaultEnumerationBudget);

}  // namespace infoutil
