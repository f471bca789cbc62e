#include "infoutil/io_system.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "infoutil/agents.hpp"
#include "support/oracle.hpp"

using namespace infoutil;

namespace {

InteractionHistory coin_history(std::initializer_list<std::pair<std::size_t, std::size_t>> steps) {
  std::vector<Interaction> out;
  for (auto [a, o] : steps) {
    out.push_back({a, o});
  }
  return InteractionHistory(std::move(out));
}

// Always plays H, predicts H with certainty; every other outcome is impossible.
class AlwaysHeads final : public IOSystem {
 public:
  FiniteDistribution action_distribution(const InteractionHistory&) const override {
    return FiniteDistribution::point_mass({"H", "T"}, kHeads);
  }
  FiniteDistribution observation_prediction(const InteractionHistory&, std::size_t) const override {
    return FiniteDistribution::point_mass({"H", "T"}, kHeads);
  }
};

// Emits distributions over the wrong symbols.
class WrongAlphabet final : public IOSystem {
 public:
  FiniteDistribution action_distribution(const InteractionHistory&) const override {
    return FiniteDistribution::uniform({"L", "R"});
  }
  FiniteDistribution observation_prediction(const InteractionHistory&, std::size_t) const override {
    return FiniteDistribution::uniform({"L", "R"});
  }
};

}  // namespace

TEST(InteractionAlphabet, Validation) {
  EXPECT_THROW(InteractionAlphabet({}, {"H"}), std::invalid_argument);
  EXPECT_THROW(InteractionAlphabet({"H"}, {}), std::invalid_argument);
  EXPECT_THROW(InteractionAlphabet({"H", "H"}, {"H"}), std::invalid_argument);
  const InteractionAlphabet three({"a", "b", "c"}, {"x", "y"});
  EXPECT_EQ(three.interaction_count(), 6u);
  EXPECT_EQ(InteractionAlphabet::coin().interaction_count(), 4u);
}

TEST(InteractionHistory, ValueSemantics) {
  const InteractionHistory empty;
  const InteractionHistory one = empty.extended({kHeads, kTails});
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(one.size(), 1u);

  const InteractionHistory three = coin_history({{0, 0}, {1, 0}, {1, 1}});
  EXPECT_EQ(three.prefix(0), empty);
  EXPECT_EQ(three.prefix(2), coin_history({{0, 0}, {1, 0}}));
  EXPECT_EQ(three.prefix(3), three);
  EXPECT_THROW(three.prefix(4), std::out_of_range);

  EXPECT_EQ(three.action_count(kHeads), 1u);
  EXPECT_EQ(three.action_count(kTails), 2u);
  EXPECT_EQ(three.observation_count(kHeads), 2u);
  EXPECT_EQ(three.observation_count(kTails), 1u);
  EXPECT_EQ(three.observation_count(7), 0u);

  EXPECT_NE(coin_history({{0, 1}}).key(), coin_history({{1, 0}}).key());
  EXPECT_EQ(three.key().size(), 6u);
}

TEST(InteractionHistory, MoveExtensionKeepsTallies) {
  InteractionHistory h;
  for (int i = 0; i < 10; ++i) {
    h = std::move(h).extended({static_cast<std::size_t>(i % 2), 0});
  }
  EXPECT_EQ(h.size(), 10u);
  EXPECT_EQ(h.action_count(0), 5u);
  EXPECT_EQ(h.observation_count(0), 10u);
}

TEST(SequenceProbability, EmptyHistoryHasProbabilityOne) {
  BiasedCoin coin(0.9);
  EXPECT_EQ(sequence_probability(coin, InteractionHistory{}).total, 1.0);
}

TEST(SequenceProbability, Examples) {
  LaplaceAgent agent;
  BiasedCoin coin(0.9);
  const GenerativeCoupling g(agent, coin, InteractionAlphabet::coin());
  // Laplace plays H at t=1 with certainty, the coin shows H with 0.9.
  EXPECT_NEAR(sequence_probability(g, coin_history({{0, 0}})).total, 0.9, 1e-15);
  EXPECT_EQ(sequence_probability(g, coin_history({{1, 0}})).total, 0.0);

  const auto p = sequence_probability(agent, coin_history({{0, 0}, {0, 1}}));
  EXPECT_NEAR(p.observation_product, 0.5 * (1.0 / 3.0), 1e-15);
  EXPECT_EQ(p.action_product, 1.0);
  ASSERT_EQ(p.observation_factors.size(), 2u);
  EXPECT_NEAR(p.observation_factors[1], 1.0 / 3.0, 1e-15);
}

TEST(SequenceProbability, FactorsAndNormalizesOnRandomSystems) {
  UniformSource rng(31);
  const InteractionAlphabet alphabet({"a", "b", "c"}, {"x", "y"});
  for (std::size_t t = 1; t <= 4; ++t) {
    const TabularSystem sys = random_tabular_system(alphabet, t, rng, 0.2);
    long double total = 0;
    const auto histories = oracle::all_histories(alphabet, t);
    ASSERT_LE(histories.size(), 4096u);
    for (const auto& h : histories) {
      const auto p = sequence_probability(sys, h);
      EXPECT_NEAR(p.total, p.action_product * p.observation_product, 1e-15);
      double product = 1.0;
      for (std::size_t i = 0; i < h.size(); ++i) {
        product *= p.action_factors[i] * p.observation_factors[i];
      }
      EXPECT_NEAR(p.total, product, 1e-15);
      total += p.total;
    }
    EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-12);
  }
}

TEST(GenerativeCoupling, DrawsActionsFromAgentAndObservationsFromEnvironment) {
  UniformSource rng(32);
  const InteractionAlphabet alphabet = InteractionAlphabet::coin();
  const TabularSystem agent = random_tabular_system(alphabet, 2, rng);
  const TabularSystem env = random_tabular_system(alphabet, 2, rng);
  TabularSystem agent_copy = agent;
  TabularSystem env_copy = env;
  const GenerativeCoupling g(agent_copy, env_copy, alphabet);
  for (const auto& h : oracle::all_histories(alphabet, 1)) {
    EXPECT_EQ(g.action_distribution(h).probs(), agent.action_distribution(h).probs());
    for (std::size_t a = 0; a < 2; ++a) {
      EXPECT_EQ(g.observation_prediction(h, a).probs(), env.observation_prediction(h, a).probs());
    }
  }
}

TEST(GenerativeStep, DeterministicSystemsProduceTheirOnlyOutcome) {
  AlwaysHeads agent;
  AlwaysHeads env;
  GenerativeCoupling g(agent, env, InteractionAlphabet::coin());
  UniformSource rng(33);
  const StepOutcome out = generative_step(g, InteractionHistory{}, rng);
  EXPECT_EQ(out.step, (Interaction{kHeads, kHeads}));
  EXPECT_EQ(out.history.size(), 1u);
  const InteractionHistory h = run_episode(g, 50, rng);
  EXPECT_EQ(h.action_count(kHeads), 50u);
  EXPECT_EQ(h.observation_count(kHeads), 50u);
}

TEST(GenerativeStep, RejectsDistributionsOverAnotherAlphabet) {
  WrongAlphabet agent;
  BiasedCoin coin(0.5);
  GenerativeCoupling g(agent, coin, InteractionAlphabet::coin());
  UniformSource rng(34);
  EXPECT_THROW(generative_step(g, InteractionHistory{}, rng), SupportMismatch);
}

TEST(RunEpisode, SameSeedSameHistory) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    LaplaceAgent a1;
    LaplaceAgent a2;
    BiasedCoin coin(0.7);
    GenerativeCoupling g1(a1, coin, InteractionAlphabet::coin());
    GenerativeCoupling g2(a2, coin, InteractionAlphabet::coin());
    UniformSource r1(seed);
    UniformSource r2(seed);
    EXPECT_EQ(run_episode(g1, 300, r1), run_episode(g2, 300, r2));
  }
}

TEST(RunEpisode, ResetsRunningState) {
  LaplaceAgent agent;
  BiasedCoin coin(0.9);
  GenerativeCoupling g(agent, coin, InteractionAlphabet::coin());
  UniformSource rng(35);
  run_episode(g, 40, rng);
  const InteractionHistory h = run_episode(g, 10, rng);
  EXPECT_EQ(agent.state(), LaplaceState::replay(h));
}

TEST(RunEpisode, EmpiricalFrequencyMatchesBias) {
  LaplaceAgent agent;
  BiasedCoin coin(0.9);
  GenerativeCoupling g(agent, coin, InteractionAlphabet::coin());
  UniformSource rng(36);
  const InteractionHistory h = run_episode(g, 100000, rng);
  EXPECT_NEAR(static_cast<double>(h.observation_count(kHeads)) / 1e5, 0.9, 0.01);
}

TEST(IOSystem, QueriesArePureFunctionsOfTheHistory) {
  LaplaceAgent agent;
  const InteractionHistory h = coin_history({{0, 0}, {0, 1}, {0, 0}});
  const auto before = agent.observation_prediction(h, kHeads).probs();
  agent.observe(InteractionHistory{}, {kHeads, kTails});
  agent.observe(InteractionHistory{}, {kHeads, kTails});
  EXPECT_EQ(agent.observation_prediction(h, kHeads).probs(), before);
  EXPECT_EQ(agent.observation_prediction(h, kHeads).probs(), agent.observation_prediction(h, kHeads).probs());
}

TEST(SampleIndex, InverseCdf) {
  const FiniteDistribution d({"a", "b", "c"}, {0.2, 0.0, 0.8});
  EXPECT_EQ(sample_index(d, 0.0), 0u);
  EXPECT_EQ(sample_index(d, 0.1999), 0u);
  EXPECT_EQ(sample_index(d, 0.2), 2u);
  EXPECT_EQ(sample_index(d, 0.9999999999999999), 2u);

  const FiniteDistribution trailing_zero({"a", "b"}, {1.0, 0.0});
  EXPECT_EQ(sample_index(trailing_zero, 0.9999999999999999), 0u);
}

TEST(SampleIndex, NeverSelectsZeroProbabilitySymbols) {
  UniformSource rng(37);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + i % 6;
    std::vector<std::string> support;
    for (std::size_t k = 0; k < n; ++k) {
      support.push_back(std::to_string(k));
    }
    const FiniteDistribution d(std::move(support), random_simplex_point(n, rng, 0.4));
    for (double u : {0.0, rng.next(), 1.0 - 0x1.0p-53}) {
      EXPECT_GT(d[sample_index(d, u)], 0.0);
    }
  }
}
