#include "infoutil/reward.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace infoutil {

namespace {

constexpr double kDisjointnessTolerance = 1e-12;

// ln(1 - e^r) for r <= 0, switching formulas at -ln 2 to keep precision at
// both ends of the range.
double log1m_exp(double r) {
  if (r == 0.0) {
    return -kInfinity;
  }
  if (r > -std::numbers::ln2) {
    return std::log(-std::expm1(r));
  }
  return std::log1p(-std::exp(r));
}

}  // namespace

Reward::Reward(double value) : value_(value) {
  if (std::isnan(value) || value > 0.0) {
    throw std::domain_error("Reward: value must lie in [-inf, 0]");
  }
}

RewardFunction::RewardFunction(double k) : k_(k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::domain_error("RewardFunction: k must be a positive finite constant");
  }
}

Reward reward(const RewardFunction& rf, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("reward: probability outside [0, 1]");
  }
  if (p == 0.0) {
    return Reward::impossible();
  }
  return Reward(rf.k() * std::log(p));
}

Reward reward_complement(Reward r) { return Reward(log1m_exp(r.value())); }

Reward reward_union(std::span<const Reward> rewards) {
  std::vector<double> values;
  values.reserve(rewards.size());
  for (const Reward& r : rewards) {
    values.push_back(r.value());
  }
  const double total = log_sum_exp(values);
  if (total > std::log1p(kDisjointnessTolerance)) {
    throw DisjointnessViolation("reward_union: probabilities sum to " + std::to_string(std::exp(total)) +
                                ", events cannot be disjoint");
  }
  return Reward(std::min(total, 0.0));
}

GibbsResult gibbs_transform(const DesirabilityMap& dm, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("gibbs_transform: alpha must be positive");
  }
  if (dm.outcomes.empty()) {
    throw std::domain_error("gibbs_transform: empty outcome set");
  }
  if (dm.outcomes.size() != dm.values.size()) {
    throw std::invalid_argument("gibbs_transform: outcomes and desirabilities differ in length");
  }
  std::vector<double> energies;
  energies.reserve(dm.values.size());
  for (double d : dm.values) {
    if (!std::isfinite(d)) {
      throw std::domain_error("gibbs_transform: desirabilities must be finite");
    }
    energies.push_back(alpha * d);
  }
  const double beta = -log_sum_exp(energies);

  std::vector<Reward> rewards;
  std::vector<double> probs;
  rewards.reserve(energies.size());
  probs.reserve(energies.size());
  for (double e : energies) {
    const double r = std::min(e + beta, 0.0);
    rewards.emplace_back(r);
    probs.push_back(std::exp(r));
  }
  return GibbsResult{FiniteDistribution(dm.outcomes, std::move(probs)), std::move(rewards), alpha, beta};
}

double utility_of_string(const ProcessString& s) {
  if (s.symbols.empty()) {
    throw std::invalid_argument("utility_of_string: empty string has no reward rate");
  }
  if (s.symbols.size() != s.conditionals.size()) {
    throw std::invalid_argument("utility_of_string: one conditional per symbol required");
  }
  double total = 0.0;
  for (double p : s.conditionals) {
    const Reward r = reward(p);
    if (r.is_impossible()) {
      return -kInfinity;
    }
    total += r.value();
  }
  return total / static_cast<double>(s.symbols.size());
}

double probability_from_utility(double u, std::size_t t) {
  if (t == 0) {
    throw std::domain_error("probability_from_utility: t must be positive");
  }
  if (std::isnan(u) || u > 0.0) {
    throw std::domain_error("probability_from_utility: utility must be <= 0");
  }
  if (u == -kInfinity) {
    return 0.0;
  }
  return std::exp(static_cast<double>(t) * u);
}

ProcessString trace_string(const SequentialProcess& process, std::span<const std::size_t> symbols) {
  ProcessString s;
  s.symbols.assign(symbols.begin(), symbols.end());
  s.conditionals.reserve(symbols.size());
  for (std::size_t tau = 0; tau < symbols.size(); ++tau) {
    s.conditionals.push_back(process.next(symbols.first(tau))[symbols[tau]]);
  }
  return s;
}

std::vector<ProcessString> enumerate_strings(const SequentialProcess& process, std::size_t t, std::size_t budget) {
  const std::size_t n = process.alphabet().size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < t; ++i) {
    if (count > budget / n) {
      throw std::length_error("enumerate_strings: |X|^t exceeds the enumeration budget");
    }
    count *= n;
  }
  if (count > budget) {
    throw std::length_error("enumerate_strings: |X|^t exceeds the enumeration budget");
  }

  std::vector<ProcessString> out;
  out.reserve(count);
  std::vector<std::size_t> symbols(t, 0);
  std::vector<double> conditionals(t, 0.0);

  // Depth-first walk; conditionals of a shared prefix are computed once.
  auto walk = [&](auto&& self, std::size_t depth) -> void {
    if (depth == t) {
      out.push_back(ProcessString{symbols, conditionals});
      return;
    }
    const FiniteDistribution next = process.next(std::span<const std::size_t>(symbols).first(depth));
    for (std::size_t x = 0; x < n; ++x) {
      symbols[depth] = x;
      conditionals[depth] = next[x];
      self(self, depth + 1);
    }
  };
  walk(walk, 0);
  return out;
}

TabularProcess::TabularProcess(std::vector<std::string> alphabet, std::size_t horizon)
    : alphabet_(std::move(alphabet)), horizon_(horizon) {
  if (alphabet_.empty()) {
    throw std::invalid_argument("TabularProcess: empty alphabet");
  }
  std::size_t nodes = 0;
  std::size_t level = 1;
  for (std::size_t depth = 0; depth < horizon_; ++depth) {
    nodes += level;
    level *= alphabet_.size();
  }
  table_.resize(nodes);
}

std::size_t TabularProcess::slot(std::span<const std::size_t> prefix) const {
  if (prefix.size() >= horizon_) {
    throw std::out_of_range("TabularProcess: prefix beyond the tabulated horizon");
  }
  const std::size_t n = alphabet_.size();
  std::size_t offset = 0;
  std::size_t level = 1;
  for (std::size_t depth = 0; depth < prefix.size(); ++depth) {
    offset += level;
    level *= n;
  }
  std::size_t index = 0;
  for (std::size_t x : prefix) {
    if (x >= n) {
      throw std::out_of_range("TabularProcess: symbol outside the alphabet");
    }
    index = index * n + x;
  }
  return offset + index;
}

void TabularProcess::set(std::span<const std::size_t> prefix, std::vector<double> probs) {
  table_[slot(prefix)] = FiniteDistribution(alphabet_, std::move(probs));
}

FiniteDistribution TabularProcess::next(std::span<const std::size_t> prefix) const {
  const auto& entry = table_[slot(prefix)];
  if (!entry) {
    throw std::out_of_range("TabularProcess: no conditional tabulated for this prefix");
  }
  return *entry;
}

}  // namespace infoutil
