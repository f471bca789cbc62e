#include "infoutil/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "infoutil/agents.hpp"
#include "infoutil/random.hpp"

namespace infoutil {

namespace {

constexpr double kDecompositionTolerance = 1e-9;
constexpr double kChainRuleTolerance = 1e-10;
constexpr double kDominanceSlack = 1e-12;
constexpr double kNormalizationSlack = 1e-10;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kEntropyRateTolerance = 1e-10;

double uniform(UniformSource& rng, double lo, double hi) { return lo + (hi - lo) * rng.next(); }

std::size_t uniform_index(UniformSource& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(rng.next() * static_cast<double>(n)));
}

std::string describe(const std::string& context, std::size_t horizon) {
  return context + " t=" + std::to_string(horizon);
}

void check_processes(CheckLedger& ledger, UniformSource& rng) {
  for (std::size_t alphabet_size = 1; alphabet_size <= 3; ++alphabet_size) {
    for (std::size_t t = 1; t <= 6; ++t) {
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<std::string> alphabet;
        for (std::size_t i = 0; i < alphabet_size; ++i) {
          alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
        }
        TabularProcess process(alphabet, t);
        const double zeros = rep == 2 ? 0.25 : 0.0;
        auto fill = [&](auto&& self, std::vector<std::size_t>& prefix) -> void {
          if (prefix.size() == t) {
            return;
          }
          process.set(prefix, random_simplex_point(alphabet_size, rng, zeros));
          for (std::size_t x = 0; x < alphabet_size; ++x) {
            prefix.push_back(x);
            self(self, prefix);
            prefix.pop_back();
          }
        };
        std::vector<std::size_t> prefix;
        fill(fill, prefix);

        const std::string context =
            "process |X|=" + std::to_string(alphabet_size) + " t=" + std::to_string(t) + " rep=" + std::to_string(rep);
        for (const ProcessString& s : enumerate_strings(process, t)) {
          double p = 1.0;
          for (double c : s.conditionals) {
            p *= c;
          }
          ledger.record("probability_from_utility", Comparison::kRelative, kIdentityTolerance,
                        probability_from_utility(utility_of_string(s), t), p, context);
        }
        const EntropyRateCheck rate = entropy_rate_check(process, t);
        ledger.record("negative_entropy_rate", Comparison::kAbsolute, kEntropyRateTolerance,
                      rate.expected_utility, rate.negative_entropy_rate, context);
      }
    }
  }
}

void check_rewards(CheckLedger& ledger, UniformSource& rng) {
  for (int i = 0; i < 10000; ++i) {
    const double r = i % 2 == 0 ? std::log(rng.next() + 0x1.0p-60) : uniform(rng, -40.0, 0.0);
    const Reward once = reward_complement(Reward(std::min(r, 0.0)));
    ledger.record("complement_involution", Comparison::kAbsolute, kIdentityTolerance,
                  reward_complement(once).value(), r, "r=" + std::to_string(r));

    const std::size_t n = 1 + uniform_index(rng, 8);
    const std::vector<double> atoms = random_simplex_point(n, rng, 0.2);
    std::vector<Reward> chosen;
    double mass = 0.0;
    for (double p : atoms) {
      if (rng.next() < 0.5) {
        chosen.push_back(reward(p));
        mass += p;
      }
    }
    ledger.record("disjoint_union", Comparison::kAbsolute, kIdentityTolerance, reward_union(chosen).value(),
                  safe_log(mass), "atoms=" + std::to_string(n));

    std::vector<Reward> all;
    for (double p : atoms) {
      all.push_back(reward(p));
    }
    ledger.record("union_of_atoms_is_certain", Comparison::kAbsolute, kIdentityTolerance,
                  reward_union(all).value(), 0.0, "atoms=" + std::to_string(n));
  }
}

void check_gibbs(CheckLedger& ledger, UniformSource& rng) {
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + uniform_index(rng, 10);
    DesirabilityMap dm;
    for (std::size_t k = 0; k < n; ++k) {
      dm.outcomes.push_back("w" + std::to_string(k));
      double d = uniform(rng, -10.0, 5.0);
      if (i % 4 == 0) {
        d = std::round(d);  // force ties
      }
      dm.values.push_back(d);
    }
    const double alpha = uniform(rng, 0.05, 10.0);
    const GibbsResult g = gibbs_transform(dm, alpha);
    const std::string context = "map " + std::to_string(i) + " alpha=" + std::to_string(alpha);

    double total = 0.0;
    double worst_log_gap = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      total += g.distribution[k];
      worst_log_gap = std::max(worst_log_gap, std::abs(g.rewards[k].value() - std::log(g.distribution[k])));
    }
    ledger.record("gibbs_normalization", Comparison::kAbsolute, kIdentityTolerance, total, 1.0, context);
    ledger.record("gibbs_reward_is_log_probability", Comparison::kAbsolute, kIdentityTolerance, worst_log_gap, 0.0,
                  context);

    double order_violations = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const int sd = (dm.values[a] > dm.values[b]) - (dm.values[a] < dm.values[b]);
        const int sr = (g.rewards[a] > g.rewards[b]) - (g.rewards[a] < g.rewards[b]);
        if (sd != sr) {
          order_violations += 1.0;
        }
      }
    }
    ledger.record("gibbs_order_preservation", Comparison::kAbsolute, 0.0, order_violations, 0.0, context);

    DesirabilityMap shifted = dm;
    const double c = uniform(rng, -50.0, 50.0);
    for (double& d : shifted.values) {
      d += c;
    }
    const GibbsResult gs = gibbs_transform(shifted, alpha);
    double worst_shift = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      worst_shift = std::max(worst_shift, std::abs(gs.distribution[k] - g.distribution[k]));
    }
    ledger.record("gibbs_shift_invariance", Comparison::kAbsolute, kIdentityTolerance, worst_shift, 0.0, context);
  }
}

}  // namespace

double comparison_gap(Comparison comparison, double lhs, double rhs) {
  if (std::isnan(lhs) || std::isnan(rhs)) {
    return kInfinity;
  }
  switch (comparison) {
    case Comparison::kAtLeast:
      if (lhs >= rhs) {
        return 0.0;
      }
      return std::isinf(lhs) || std::isinf(rhs) ? kInfinity : rhs - lhs;
    case Comparison::kAbsolute:
    case Comparison::kRelative:
      if (lhs == rhs) {
        return 0.0;
      }
      if (std::isinf(lhs) || std::isinf(rhs)) {
        return kInfinity;
      }
      if (comparison == Comparison::kRelative) {
        return rhs == 0.0 ? kInfinity : std::abs(lhs - rhs) / std::abs(rhs);
      }
      return std::abs(lhs - rhs);
  }
  return kInfinity;
}

void CheckLedger::record(const std::string& name, Comparison comparison, double tolerance, double lhs, double rhs,
                         const std::string& context) {
  auto [it, inserted] = checks_.try_emplace(name);
  IdentityCheck& check = it->second;
  if (inserted) {
    order_.push_back(name);
    check.name = name;
    check.comparison = comparison;
    check.tolerance = tolerance;
  }
  const double g = comparison_gap(comparison, lhs, rhs);
  const bool failed = !(g <= tolerance);
  ++check.cases;
  if (failed) {
    ++check.failures;
  }
  if (check.cases == 1 || g > check.worst_gap) {
    check.worst_gap = g;
    check.worst_lhs = lhs;
    check.worst_rhs = rhs;
    check.worst_context = context;
  }
}

std::vector<IdentityCheck> CheckLedger::checks() const {
  std::vector<IdentityCheck> out;
  out.reserve(order_.size());
  for (const auto& name : order_) {
    out.push_back(checks_.at(name));
  }
  return out;
}

bool CheckLedger::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const auto& kv) { return kv.second.passed(); });
}

void check_coupling(CheckLedger& ledger, const GenerativeCoupling& c, std::size_t horizon, const std::string& context,
                    VerifyFault fault) {
  ExpectedRewardReport r = expected_rewards_bruteforce(c, horizon);
  if (fault == VerifyFault::kFlipKlObsSign) {
    r.kl_obs = -r.kl_obs;
  }
  const UtilityDecomposition u = expected_utilities(c, horizon);
  const std::string where = describe(context, horizon);
  const double t = static_cast<double>(horizon);

  ledger.record("normalization", Comparison::kAbsolute, kNormalizationSlack, r.total_mass, 1.0, where);
  ledger.record("generative_reward_decomposition", Comparison::kAbsolute, kDecompositionTolerance, r.e_reward_G,
                r.decomposed_G(), where);
  ledger.record("agent_reward_decomposition", Comparison::kAbsolute, kDecompositionTolerance, r.e_reward_P,
                r.decomposed_P(), where);
  ledger.record("environment_reward_decomposition", Comparison::kAbsolute, kDecompositionTolerance, r.e_reward_Q,
                r.decomposed_Q(), where);
  ledger.record("dominance_agent", Comparison::kAtLeast, kDominanceSlack, r.e_reward_G, r.e_reward_P, where);
  ledger.record("dominance_environment", Comparison::kAtLeast, kDominanceSlack, r.e_reward_G, r.e_reward_Q, where);
  ledger.record("kl_obs_nonnegative", Comparison::kAtLeast, 0.0, r.kl_obs, 0.0, where);
  ledger.record("kl_act_nonnegative", Comparison::kAtLeast, 0.0, r.kl_act, 0.0, where);

  ledger.record("per_step_gu_agent", Comparison::kAbsolute, kChainRuleTolerance, u.gu_agent, -r.h_actions / t, where);
  ledger.record("per_step_gu_env", Comparison::kAbsolute, kChainRuleTolerance, u.gu_env, -r.h_observations / t,
                where);
  ledger.record("per_step_pu_agent", Comparison::kAbsolute, kChainRuleTolerance, u.pu_agent, -r.kl_obs / t, where);
  ledger.record("per_step_pu_env", Comparison::kAbsolute, kChainRuleTolerance, u.pu_env, -r.kl_act / t, where);
  ledger.record("per_step_utility_G", Comparison::kAbsolute, kChainRuleTolerance, u.e_utility_G, r.e_reward_G / t,
                where);
  ledger.record("per_step_utility_P", Comparison::kAbsolute, kChainRuleTolerance, u.e_utility_P, r.e_reward_P / t,
                where);
  ledger.record("per_step_utility_Q", Comparison::kAbsolute, kChainRuleTolerance, u.e_utility_Q, r.e_reward_Q / t,
                where);

  const EntropyRateCheck rate = entropy_rate_check(InteractionProcess(c, c.alphabet()), horizon);
  ledger.record("interaction_entropy_rate", Comparison::kAbsolute, kDecompositionTolerance, rate.expected_utility,
                rate.negative_entropy_rate, where);
}

CheckLedger run_verification(const VerifyOptions& options) {
  CheckLedger ledger;
  UniformSource rng(options.seed);

  {
    LaplaceAgent agent;
    BiasedCoin coin(options.bias);
    const GenerativeCoupling c(agent, coin, InteractionAlphabet::coin());
    for (std::size_t t = 1; t <= 8; ++t) {
      check_coupling(ledger, c, t, "coin", options.fault);
    }
  }
  {
    FictitiousPlayer matcher(options.alpha, PenniesRole::kMatcher, Seat::kAgent);
    FictitiousPlayer unmatcher(options.alpha, PenniesRole::kUnmatcher, Seat::kEnvironment);
    const GenerativeCoupling c(matcher, unmatcher, InteractionAlphabet::coin());
    for (std::size_t t = 1; t <= 6; ++t) {
      check_coupling(ledger, c, t, "pennies", options.fault);
    }
  }

  const InteractionAlphabet binary = InteractionAlphabet::coin();
  const InteractionAlphabet wide({"x", "y", "z"}, {"H", "T"});
  for (std::size_t i = 0; i < options.random_couplings; ++i) {
    const bool use_wide = i % 6 == 5;
    const InteractionAlphabet& alphabet = use_wide ? wide : binary;
    const std::size_t horizon = use_wide ? 1 + i % 4 : 1 + i % 5;
    const double zeros = i % 4 == 3 ? 0.3 : 0.0;
    TabularSystem agent = random_tabular_system(alphabet, horizon, rng, zeros);
    TabularSystem env = random_tabular_system(alphabet, horizon, rng, zeros);
    const GenerativeCoupling c(agent, env, alphabet);
    check_coupling(ledger, c, horizon, "random#" + std::to_string(i), options.fault);
  }

  check_processes(ledger, rng);
  check_rewards(ledger, rng);
  check_gibbs(ledger, rng);
  return ledger;
}

void print_checks(std::ostream& out, const CheckLedger& ledger) {
  for (const IdentityCheck& c : ledger.checks()) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s %-36s cases=%-6zu lhs=%.15g rhs=%.15g gap=%.3g tol=%.0e  worst: %s\n",
                  c.passed() ? "PASS" : "FAIL", c.name.c_str(), c.cases, c.worst_lhs, c.worst_rhs, c.worst_gap,
                  c.tolerance, c.worst_context.c_str());
    out << buf;
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err, VerifyFault fault) {
  VerifyOptions options;
  options.seed = config.seed;
  options.bias = config.bias;
  options.alpha = config.alpha;
  options.fault = fault;
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const CheckLedger ledger = run_verification(options);
  print_checks(out, ledger);
  if (ledger.all_passed()) {
    out << "all checks passed\n";
    return kExitSuccess;
  }
  for (const IdentityCheck& c : ledger.checks()) {
    if (!c.passed()) {
      err << "check failed: " << c.name << " (" << c.failures << " of " << c.cases << " cases)\n";
    }
  }
  return kExitFailure;
}

}  // namespace infoutil
