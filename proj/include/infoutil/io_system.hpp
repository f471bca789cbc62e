#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infoutil/entropy.hpp"
#include "infoutil/random.hpp"

namespace infoutil {

/// Action set A and observation set O; interactions are pairs in A x O.
class InteractionAlphabet {
 public:
  InteractionAlphabet(std::vector<std::string> actions, std::vector<std::string> observations);

  /// {H, T} for both actions and observations.
  static InteractionAlphabet coin();

  const std::vector<std::string>& actions() const { return actions_; }
  const std::vector<std::string>& observations() const { return observations_; }
  std::size_t interaction_count() const { return actions_.size() * observations_.size(); }

  friend bool operator==(const InteractionAlphabet&, const InteractionAlphabet&) = default;

 private:
  std::vector<std::string> actions_;
  std::vector<std::string> observations_;
};

/// One interaction (a_t, o_t), as indices into the alphabet.
struct Interaction {
  std::size_t action;
  std::size_t observation;

  friend bool operator==(Interaction, Interaction) = default;
};

/// The string ao_{<=t}. A value type: extension returns a new history, and
/// per-symbol tallies are maintained alongside the steps.
class InteractionHistory {
 public:
  InteractionHistory() = default;
  explicit InteractionHistory(std::vector<Interaction> steps);

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const std::vector<Interaction>& steps() const { return steps_; }
  const Interaction& operator[](std::size_t i) const { return steps_[i]; }

  InteractionHistory extended(Interaction step) const&;
  InteractionHistory extended(Interaction step) &&;
  /// The first n interactions.
  InteractionHistory prefix(std::size_t n) const;

  std::size_t action_count(std::size_t action) const;
  std::size_t observation_count(std::size_t observation) const;

  /// Compact byte encoding of the steps; usable as a lookup key.
  std::string key() const;

  friend bool operator==(const InteractionHistory& a, const InteractionHistory& b) { return a.steps_ == b.steps_; }

 private:
  void tally(Interaction step);

  std::vector<Interaction> steps_;
  std::vector<std::size_t> action_counts_;
  std::vector<std::size_t> observation_counts_;
};

/// A system defined by its conditionals P(a_t | ao_<t) and P(o_t | ao_<t a_t).
///
/// Query methods are pure functions of the history passed in, so exact
/// enumeration can evaluate arbitrary counterfactual histories. Systems that
/// keep running state advance it only through observe(); that state must
/// always equal what a replay of the history would produce.
class IOSystem {
 public:
  virtual ~IOSystem() = default;

  virtual FiniteDistribution action_distribution(const InteractionHistory& h) const = 0;
  virtual FiniteDistribution observation_prediction(const InteractionHistory& h, std::size_t action) const = 0;

  /// Called once per realized interaction, with the history before `step`.
  virtual void observe(const InteractionHistory& before, Interaction step) {
    (void)before;
    (void)step;
  }
  /// Returns running state to the empty-history state.
  virtual void reset() {}
};

/// The generative distribution G of an agent P coupled to an environment Q:
/// actions are drawn from P, observations from Q.
class GenerativeCoupling final : public IOSystem {
 public:
  GenerativeCoupling(IOSystem& agent, IOSystem& environment, InteractionAlphabet alphabet);

  IOSystem& agent() const { return *agent_; }
  IOSystem& environment() const { return *environment_; }
  const InteractionAlphabet& alphabet() const { return alphabet_; }

  FiniteDistribution action_distribution(const InteractionHistory& h) const override;
  FiniteDistribution observation_prediction(const InteractionHistory& h, std::size_t action) const override;
  void observe(const InteractionHistory& before, Interaction step) override;
  void reset() override;

 private:
  IOSystem* agent_;
  IOSystem* environment_;
  InteractionAlphabet alphabet_;
};

/// Probability of a history under one system, split into its action factors
/// sys(a_tau | ao_<tau) and observation factors sys(o_tau | ao_<tau a_tau).
struct SequenceProbability {
  double total = 1.0;
  double action_product = 1.0;
  double observation_product = 1.0;
  std::vector<double> action_factors;
  std::vector<double> observation_factors;
};

SequenceProbability sequence_probability(const IOSystem& sys, const InteractionHistory& h);

struct StepOutcome {
  Interaction step;
  InteractionHistory history;
};

/// Samples a ~ P(.|h), then o ~ Q(.|h, a), and advances both systems.
StepOutcome generative_step(GenerativeCoupling& c, InteractionHistory h, UniformSource& rng);

/// Resets both systems and runs `steps` generative steps from the empty history.
InteractionHistory run_episode(GenerativeCoupling& c, std::size_t steps, UniformSource& rng);

}  // namespace infoutil
