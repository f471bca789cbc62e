#include "infoutil/reward.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "infoutil/random.hpp"
#include "support/oracle.hpp"

using namespace infoutil;

namespace {

constexpr double kLn2 = std::numbers::ln2;
// e / (e + 1) at 40 digits.
constexpr double kLogistic1 = 0.7310585786300048792511592418218362743651;

double uniform(UniformSource& rng, double lo, double hi) { return lo + (hi - lo) * rng.next(); }

TabularProcess random_process(std::size_t n, std::size_t t, UniformSource& rng, double zeros) {
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < n; ++i) {
    alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  TabularProcess process(alphabet, t);
  for (std::size_t depth = 0; depth < t; ++depth) {
    for (const auto& prefix : oracle::all_strings(n, depth)) {
      process.set(prefix, random_simplex_point(n, rng, zeros));
    }
  }
  return process;
}

}  // namespace

TEST(Reward, Examples) {
  EXPECT_EQ(reward(1.0).value(), 0.0);
  EXPECT_TRUE(reward(0.0).is_impossible());
  EXPECT_NEAR(reward(std::exp(-1.0)).value(), -1.0, 1e-15);
}

TEST(Reward, ScaleConstantSetsUnits) {
  const RewardFunction bits(1.0 / kLn2);
  EXPECT_NEAR(reward(bits, 0.25).value(), -2.0, 1e-15);
  EXPECT_THROW(RewardFunction(0.0), std::domain_error);
  EXPECT_THROW(RewardFunction(-1.0), std::domain_error);
}

TEST(Reward, RejectsNonProbabilities) {
  EXPECT_THROW(reward(1.5), std::domain_error);
  EXPECT_THROW(reward(-0.1), std::domain_error);
  EXPECT_THROW(reward(NAN), std::domain_error);
  EXPECT_THROW(Reward(0.1), std::domain_error);
}

TEST(RewardComplement, Examples) {
  EXPECT_NEAR(reward_complement(reward(0.5)).value(), std::log(0.5), 1e-15);
  EXPECT_TRUE(reward_complement(Reward::certain()).is_impossible());
  EXPECT_EQ(reward_complement(Reward::impossible()).value(), 0.0);
  EXPECT_NEAR(reward_complement(reward(0.9)).value(), std::log(0.1), 1e-14);
}

TEST(RewardUnion, Examples) {
  const std::vector<Reward> pair = {reward(0.3), reward(0.2)};
  EXPECT_NEAR(reward_union(pair).value(), std::log(0.5), 1e-15);

  const std::vector<Reward> with_null = {reward(0.37), Reward::impossible()};
  EXPECT_EQ(reward_union(with_null).value(), reward(0.37).value());

  const std::vector<Reward> atoms = {reward(0.1), reward(0.2), reward(0.3), reward(0.4)};
  EXPECT_NEAR(reward_union(atoms).value(), 0.0, 1e-15);

  EXPECT_TRUE(reward_union(std::vector<Reward>{}).is_impossible());
}

TEST(RewardUnion, RejectsOverlappingEvents) {
  const std::vector<Reward> overlapping = {reward(0.6), reward(0.5)};
  EXPECT_THROW(reward_union(overlapping), DisjointnessViolation);
  const std::vector<Reward> barely = {reward(0.5), reward(0.5 + 1e-13)};
  EXPECT_NO_THROW(reward_union(barely));
}

TEST(GibbsTransform, Examples) {
  const GibbsResult flat = gibbs_transform({{"a", "b", "c", "d"}, {3.0, 3.0, 3.0, 3.0}}, 2.5);
  for (double p : flat.distribution.probs()) {
    EXPECT_NEAR(p, 0.25, 1e-15);
  }

  const GibbsResult two = gibbs_transform({{"w1", "w2"}, {1.0, 0.0}}, 1.0);
  EXPECT_NEAR(two.distribution.prob("w1"), kLogistic1, 1e-15);
  EXPECT_NEAR(two.beta, -std::log(std::exp(1.0) + 1.0), 1e-15);
  EXPECT_DOUBLE_EQ(two.temperature(), 1.0);

  const GibbsResult cold = gibbs_transform({{"a", "b", "c"}, {0.0, 2.0, 1.0}}, 100.0);
  EXPECT_GT(cold.distribution.prob("b"), 1.0 - 1e-10);
}

TEST(GibbsTransform, RejectsBadInput) {
  EXPECT_THROW(gibbs_transform({{"a"}, {1.0}}, 0.0), std::domain_error);
  EXPECT_THROW(gibbs_transform({{"a"}, {1.0}}, -1.0), std::domain_error);
  EXPECT_THROW(gibbs_transform({{}, {}}, 1.0), std::domain_error);
  EXPECT_THROW(gibbs_transform({{"a"}, {INFINITY}}, 1.0), std::domain_error);
}

TEST(GibbsTransform, PropertiesOnRandomMaps) {
  UniformSource rng(21);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 9;
    DesirabilityMap dm;
    for (std::size_t k = 0; k < n; ++k) {
      dm.outcomes.push_back(std::to_string(k));
      dm.values.push_back(i % 3 == 0 ? std::round(uniform(rng, -3, 3)) : uniform(rng, -20, 4));
    }
    const double alpha = uniform(rng, 0.01, 20.0);
    const GibbsResult g = gibbs_transform(dm, alpha);

    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      total += g.distribution[k];
      EXPECT_NEAR(g.rewards[k].value(), std::log(g.distribution[k]), 1e-12);
      EXPECT_NEAR(g.rewards[k].value(), alpha * dm.values[k] + g.beta, 1e-12);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        EXPECT_EQ(dm.values[a] > dm.values[b], g.rewards[a] > g.rewards[b]);
        EXPECT_EQ(dm.values[a] == dm.values[b], g.rewards[a] == g.rewards[b]);
      }
    }

    DesirabilityMap shifted = dm;
    const double c = uniform(rng, -100, 100);
    for (double& d : shifted.values) {
      d += c;
    }
    const GibbsResult gs = gibbs_transform(shifted, alpha);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(gs.distribution[k], g.distribution[k], 1e-12);
    }
  }
}

TEST(Utility, Examples) {
  EXPECT_EQ(utility_of_string({{0, 1, 0}, {1.0, 1.0, 1.0}}), 0.0);
  EXPECT_EQ(utility_of_string({{0, 1, 0}, {0.5, 0.0, 1.0}}), -kInfinity);
  EXPECT_NEAR(utility_of_string({{0, 0, 0}, {0.5, 0.5, 0.5}}), std::log(0.5), 1e-15);
  EXPECT_THROW(utility_of_string({}), std::invalid_argument);
  EXPECT_THROW(utility_of_string({{0, 1}, {0.5}}), std::invalid_argument);
}

TEST(ProbabilityFromUtility, Examples) {
  EXPECT_EQ(probability_from_utility(0.0, 7), 1.0);
  EXPECT_NEAR(probability_from_utility(std::log(0.5), 3), 0.125, 1e-15);
  EXPECT_EQ(probability_from_utility(-kInfinity, 3), 0.0);
  EXPECT_THROW(probability_from_utility(0.1, 3), std::domain_error);
  EXPECT_THROW(probability_from_utility(-1.0, 0), std::domain_error);
}

TEST(RewardProperties, AdditivityAndConsistency) {
  UniformSource rng(22);
  for (int i = 0; i < 10000; ++i) {
    const double p = 1.0 - rng.next();  // (0, 1]
    const double q = 1.0 - rng.next();
    EXPECT_NEAR(reward(p * q).value(), reward(p).value() + reward(q).value(), 1e-12);
    if (p != q) {
      EXPECT_EQ(p > q, reward(p) > reward(q));
    }
  }
}

TEST(RewardProperties, ComplementIsAnInvolution) {
  UniformSource rng(23);
  for (int i = 0; i < 10000; ++i) {
    const double r = i % 2 ? uniform(rng, -60.0, 0.0) : std::log(1.0 - rng.next());
    if (r == 0.0) {
      continue;
    }
    EXPECT_NEAR(reward_complement(reward_complement(Reward(r))).value(), r, 1e-12) << "r=" << r;
  }
}

TEST(RewardProperties, UnionOfDisjointEvents) {
  UniformSource rng(24);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + i % 8;
    const std::vector<double> atoms = random_simplex_point(n, rng, 0.2);
    std::vector<Reward> chosen;
    long double mass = 0;
    for (double p : atoms) {
      if (rng.next() < 0.5) {
        chosen.push_back(reward(p));
        mass += p;
      }
    }
    const double expected = mass == 0 ? -kInfinity : static_cast<double>(std::log(mass));
    const double got = reward_union(chosen).value();
    if (expected == -kInfinity) {
      EXPECT_EQ(got, expected);
    } else {
      EXPECT_NEAR(got, expected, 1e-12);
    }
  }
}

// Expected utility of strings of length t equals -(1/t) H[P(x_<=t)],
// checked against a long-double enumeration.
TEST(ProcessProperties, ExpectedUtilityIsNegativeEntropyRate) {
  UniformSource rng(25);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t t = 1; t <= 6; ++t) {
      const TabularProcess process = random_process(n, t, rng, t % 2 ? 0.0 : 0.2);
      long double expected_utility = 0;
      std::vector<long double> probs;
      for (const ProcessString& s : enumerate_strings(process, t)) {
        const long double p = oracle::string_probability(process, s.symbols);
        probs.push_back(p);
        const double u = utility_of_string(s);
        if (p > 0) {
          expected_utility += p * u;
          EXPECT_NEAR(probability_from_utility(u, t) / static_cast<double>(p), 1.0, 1e-12);
        } else {
          EXPECT_EQ(u, -kInfinity);
        }
      }
      const long double rate = -oracle::entropy_of(probs) / static_cast<long double>(t);
      EXPECT_NEAR(static_cast<double>(expected_utility), static_cast<double>(rate), 1e-10) << "n=" << n << " t=" << t;
    }
  }
}

TEST(EnumerateStrings, OrderAndBudget) {
  UniformSource rng(26);
  const TabularProcess process = random_process(3, 2, rng, 0.0);
  const auto strings = enumerate_strings(process, 2);
  ASSERT_EQ(strings.size(), 9u);
  EXPECT_EQ(strings[0].symbols, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(strings[5].symbols, (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(enumerate_strings(process, 2, 8), std::length_error);
  EXPECT_THROW(process.next(std::vector<std::size_t>{0, 0}), std::out_of_range);
}
