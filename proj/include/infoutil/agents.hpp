#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>

#include "infoutil/io_system.hpp"

namespace infoutil {

// Built-in systems use the coin alphabet: index 0 is H, index 1 is T.
inline constexpr std::size_t kHeads = 0;
inline constexpr std::size_t kTails = 1;

/// Non-adaptive environment: emits H with probability `bias` and expects
/// the agent to play H with probability `action_expectation`, regardless of
/// the history.
class BiasedCoin final : public IOSystem {
 public:
  explicit BiasedCoin(double bias, double action_expectation = 0.5);

  double bias() const { return bias_; }
  double action_expectation() const { return action_expectation_; }

  FiniteDistribution action_distribution(const InteractionHistory& h) const override;
  FiniteDistribution observation_prediction(const InteractionHistory& h, std::size_t action) const override;

 private:
  double bias_;
  double action_expectation_;
};

/// (action distribution, observation prediction) of a coin.
std::pair<FiniteDistribution, FiniteDistribution> coin_policy(const BiasedCoin& c);

/// t tosses observed, n of them heads.
struct LaplaceState {
  std::size_t t = 0;
  std::size_t n = 0;

  static LaplaceState replay(const InteractionHistory& h);
  friend bool operator==(LaplaceState, LaplaceState) = default;
};

/// Rule of succession: P(H) = (n + 1) / (t + 2).
FiniteDistribution laplace_predict(const LaplaceState& s);
/// Deterministic threshold on the prediction; an estimate of exactly 1/2 plays H.
FiniteDistribution laplace_act(const LaplaceState& s);

/// Predicts observations with the rule of succession and acts on the more
/// probable outcome.
class LaplaceAgent final : public IOSystem {
 public:
  const LaplaceState& state() const { return state_; }

  FiniteDistribution action_distribution(const InteractionHistory& h) const override;
  FiniteDistribution observation_prediction(const InteractionHistory& h, std::size_t action) const override;
  void observe(const InteractionHistory& before, Interaction step) override;
  void reset() override { state_ = {}; }

 private:
  LaplaceState state_;
};

enum class PenniesRole { kMatcher, kUnmatcher };

/// Which stream of the interaction string a player emits. An agent-seat
/// player emits actions and observes observations; an environment-seat
/// player the reverse.
enum class Seat { kAgent, kEnvironment };

/// Pseudo-counts of the opponent's heads and tails, starting at (1, 1).
struct FictitiousState {
  double kappa_heads = 1.0;
  double kappa_tails = 1.0;

  double gamma() const { return kappa_heads / (kappa_heads + kappa_tails); }
  friend bool operator==(FictitiousState, FictitiousState) = default;
};

double sigmoid(double x);

/// Smooth best response over the player's own symbols: the matcher plays H
/// with sigmoid(alpha (gamma - 1/2)), the unmatcher with sigmoid(alpha (1/2 - gamma)).
FiniteDistribution sfp_policy(const FictitiousState& s, double alpha, PenniesRole role);
/// Empirical-frequency prediction of the opponent: P(H) = gamma.
FiniteDistribution sfp_predict(const FictitiousState& s);

/// Smooth fictitious play for matching pennies.
class FictitiousPlayer final : public IOSystem {
 public:
  static constexpr double kDefaultAlpha = 4.0;

  FictitiousPlayer(double alpha, PenniesRole role, Seat seat);

  double alpha() const { return alpha_; }
  PenniesRole role() const { return role_; }
  Seat seat() const { return seat_; }
  const FictitiousState& state() const { return state_; }

  /// Counts of the opponent's stream in `h`.
  FictitiousState replay(const InteractionHistory& h) const;

  FiniteDistribution action_distribution(const InteractionHistory& h) const override;
  FiniteDistribution observation_prediction(const InteractionHistory& h, std::size_t action) const override;
  void observe(const InteractionHistory& before, Interaction step) override;
  void reset() override { state_ = {}; }

 private:
  double alpha_;
  PenniesRole role_;
  Seat seat_;
  FictitiousState state_;
};

/// System whose conditionals are looked up in explicit tables keyed by
/// history, up to a fixed horizon. Used for randomized couplings.
class TabularSystem final : public IOSystem {
 public:
  TabularSystem(InteractionAlphabet alphabet, std::size_t horizon);

  const InteractionAlphabet& alphabet() const { return alphabet_; }
  std::size_t horizon() const { return horizon_; }

  void set_action(const InteractionHistory& h, std::vector<double> probs);
  void set_observation(const InteractionHistory& h, std::size_t action, std::vector<double> probs);

  FiniteDistribution action_distribution(const InteractionHistory& h) const override;
  FiniteDistribution observation_prediction(const InteractionHistory& h, std::size_t action) const override;

 private:
  InteractionAlphabet alphabet_;
  std::size_t horizon_;
  std::unordered_map<std::string, FiniteDistribution> actions_;
  std::unordered_map<std::string, FiniteDistribution> observations_;
};

/// Fills every conditional of a TabularSystem up to `horizon` with random
/// simplex points. See random_simplex_point for `zero_probability`.
TabularSystem random_tabular_system(const InteractionAlphabet& alphabet, std::size_t horizon, UniformSource& rng,
                                    double zero_probability = 0.0);

}  // namespace infoutil
