#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "infoutil/entropy.hpp"

namespace infoutil {

/// Raised by reward_union when the supplied events cannot be disjoint.
class DisjointnessViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A reward in nats: an extended real in [-infinity, 0].
class Reward {
 public:
  explicit Reward(double value);

  static Reward certain() { return Reward(0.0); }
  static Reward impossible() { return Reward(-kInfinity); }

  double value() const { return value_; }
  bool is_impossible() const { return value_ == -kInfinity; }

  friend bool operator==(Reward, Reward) = default;
  friend auto operator<=>(Reward a, Reward b) { return a.value_ <=> b.value_; }

 private:
  double value_;
};

/// r(x|y) = k ln p(x|y). k only sets the unit; k = 1 gives nats.
class RewardFunction {
 public:
  explicit RewardFunction(double k = 1.0);
  double k() const { return k_; }

 private:
  double k_;
};

Reward reward(const RewardFunction& rf, double p);
inline Reward reward(double p) { return reward(RewardFunction{}, p); }

/// Reward of the complementary event: ln(1 - e^r).
Reward reward_complement(Reward r);

/// Reward of a union of disjoint events: ln sum e^{r_i}. Throws
/// DisjointnessViolation when sum e^{r_i} exceeds 1 + 1e-12.
Reward reward_union(std::span<const Reward> rewards);

/// Finite desirabilities d(omega) for a finite outcome set.
struct DesirabilityMap {
  std::vector<std::string> outcomes;
  std::vector<double> values;
};

struct GibbsResult {
  FiniteDistribution distribution;
  std::vector<Reward> rewards;
  double alpha;
  /// Negated log-normalizer: beta = -ln sum exp(alpha d).
  double beta;

  double temperature() const { return 1.0 / alpha; }
};

/// Converts desirabilities into rewards r(omega) = alpha d(omega) + beta and
/// the Gibbs distribution they induce.
GibbsResult gibbs_transform(const DesirabilityMap& dm, double alpha);

/// A realized string x_1..x_t with the process's conditionals p(x_tau | x_<tau).
struct ProcessString {
  std::vector<std::size_t> symbols;
  std::vector<double> conditionals;

  std::size_t length() const { return symbols.size(); }
};

/// Reward rate (1/t) sum ln p(x_tau | x_<tau). Throws std::invalid_argument on
/// the empty string; -infinity when any conditional is zero.
double utility_of_string(const ProcessString& s);

/// exp(t u). Throws std::domain_error for u > 0 or t == 0.
double probability_from_utility(double u, std::size_t t);

/// A stochastic process over a finite alphabet, specified by its conditionals.
class SequentialProcess {
 public:
  virtual ~SequentialProcess() = default;
  virtual const std::vector<std::string>& alphabet() const = 0;
  virtual FiniteDistribution next(std::span<const std::size_t> prefix) const = 0;
};

/// Builds the ProcessString for `symbols` by querying the process.
ProcessString trace_string(const SequentialProcess& process, std::span<const std::size_t> symbols);

/// Every string of length t with its conditionals, in lexicographic order.
/// Throws std::length_error when |X|^t exceeds `budget`.
std::vector<ProcessString> enumerate_strings(const SequentialProcess& process, std::size_t t,
                                             std::size_t budget = std::size_t{1} << 16);

/// Process whose conditionals are read from a table keyed by the prefix.
class TabularProcess final : public SequentialProcess {
 public:
  TabularProcess(std::vector<std::string> alphabet, std::size_t horizon);

  const std::vector<std::string>& alphabet() const override { return alphabet_; }
  FiniteDistribution next(std::span<const std::size_t> prefix) const override;

  void set(std::span<const std::size_t> prefix, std::vector<double> probs);
  std::size_t horizon() const { return horizon_; }

 private:
  std::size_t slot(std::span<const std::size_t> prefix) const;

  std::vector<std::string> alphabet_;
  std::size_t horizon_;
  std::vector<std::optional<FiniteDistribution>> table_;
};

}  // namespace infoutil
