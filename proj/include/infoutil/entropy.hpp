#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace infoutil {

/// Positive infinity in nats. Extended-real results (KL divergences, rewards
/// of impossible events) use IEEE infinities, which saturate under addition
/// with finite values.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Tolerance for the sum-to-one check on constructed distributions.
inline constexpr double kNormalizationTolerance = 1e-12;

/// Raised when two distributions that must share a support do not. This is
/// a caller bug, never a data condition.
class SupportMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Probabilities over an ordered, finite list of distinct symbols.
class FiniteDistribution {
 public:
  /// Throws std::invalid_argument unless the probabilities are nonnegative,
  /// sum to one within kNormalizationTolerance, and the symbols are distinct.
  FiniteDistribution(std::vector<std::string> support, std::vector<double> probs);

  static FiniteDistribution uniform(std::vector<std::string> support);
  static FiniteDistribution point_mass(std::vector<std::string> support, std::size_t index);
  /// Two-symbol distribution with probability `p` on the first symbol.
  static FiniteDistribution bernoulli(double p, std::string first = "H", std::string second = "T");

  const std::vector<std::string>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Probability of a symbol by name; throws std::out_of_range if absent.
  double prob(const std::string& symbol) const;
  std::size_t index_of(const std::string& symbol) const;

  bool same_support(const FiniteDistribution& other) const { return support_ == other.support_; }

 private:
  std::vector<std::string> support_;
  std::vector<double> probs_;
};

/// Per-outer-symbol conditional distributions, aligned positionally with the
/// outer support. Entries may be empty only where the outer probability is 0.
using ConditionalTable = std::vector<std::optional<FiniteDistribution>>;

/// p(x, y) = outer(y) * conditional(x | y).
class JointDistribution {
 public:
  JointDistribution(FiniteDistribution outer, ConditionalTable conditionals);

  const FiniteDistribution& outer() const { return outer_; }
  const ConditionalTable& conditionals() const { return conditionals_; }
  const std::vector<std::string>& inner_support() const { return inner_support_; }

  /// Flattened joint over "y,x" labels, skipping outer symbols with zero mass.
  FiniteDistribution flatten() const;

 private:
  FiniteDistribution outer_;
  ConditionalTable conditionals_;
  std::vector<std::string> inner_support_;
};

/// -sum p ln p, in nats.
double entropy(const FiniteDistribution& d);

/// -sum_{x,y} p(x,y) ln p(x|y).
double conditional_entropy(const JointDistribution& j);

/// sum p ln(p/q). +infinity when p is not absolutely continuous w.r.t. q.
double kl(const FiniteDistribution& p, const FiniteDistribution& q);

/// sum_{x,y} p1(x,y) ln(p1(x|y) / p2(x|y)), weighted by j1's joint.
double conditional_kl(const JointDistribution& j1, const ConditionalTable& q_conditionals);

/// ln p with ln 0 = -infinity handled explicitly.
double safe_log(double p);

/// p * ln q with the 0 * ln(anything) = 0 convention.
double weighted_log(double p, double q);

/// Max-shifted log-sum-exp; -infinity for an empty input or all -infinity.
double log_sum_exp(std::span<const double> values);

}  // namespace infoutil
