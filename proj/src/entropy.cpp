#include "infoutil/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace infoutil {

FiniteDistribution::FiniteDistribution(std::vector<std::string> support, std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.empty()) {
    throw std::invalid_argument("FiniteDistribution: empty support");
  }
  if (support_.size() != probs_.size()) {
    throw std::invalid_argument("FiniteDistribution: support and probabilities differ in length");
  }
  const std::set<std::string> distinct(support_.begin(), support_.end());
  if (distinct.size() != support_.size()) {
    throw std::invalid_argument("FiniteDistribution: duplicate support symbol");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("FiniteDistribution: probability outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("FiniteDistribution: probabilities sum to " + std::to_string(total));
  }
}

FiniteDistribution FiniteDistribution::uniform(std::vector<std::string> support) {
  const std::size_t n = support.size();
  return FiniteDistribution(std::move(support), std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n)));
}

FiniteDistribution FiniteDistribution::point_mass(std::vector<std::string> support, std::size_t index) {
  std::vector<double> probs(support.size(), 0.0);
  probs.at(index) = 1.0;
  return FiniteDistribution(std::move(support), std::move(probs));
}

FiniteDistribution FiniteDistribution::bernoulli(double p, std::string first, std::string second) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bernoulli: p outside [0, 1]");
  }
  return FiniteDistribution({std::move(first), std::move(second)}, {p, 1.0 - p});
}

std::size_t FiniteDistribution::index_of(const std::string& symbol) const {
  const auto it = std::find(support_.begin(), support_.end(), symbol);
  if (it == support_.end()) {
    throw std::out_of_range("FiniteDistribution: unknown symbol '" + symbol + "'");
  }
  return static_cast<std::size_t>(it - support_.begin());
}

double FiniteDistribution::prob(const std::string& symbol) const { return probs_[index_of(symbol)]; }

JointDistribution::JointDistribution(FiniteDistribution outer, ConditionalTable conditionals)
    : outer_(std::move(outer)), conditionals_(std::move(conditionals)) {
  if (conditionals_.size() != outer_.size()) {
    throw std::invalid_argument("JointDistribution: conditional table not aligned with outer support");
  }
  for (std::size_t y = 0; y < outer_.size(); ++y) {
    const auto& c = conditionals_[y];
    if (!c) {
      if (outer_[y] > 0.0) {
        throw std::invalid_argument("JointDistribution: missing conditional for '" + outer_.support()[y] + "'");
      }
      continue;
    }
    if (inner_support_.empty()) {
      inner_support_ = c->support();
    } else if (c->support() != inner_support_) {
      throw SupportMismatch("JointDistribution: conditionals over different supports");
    }
  }
}

FiniteDistribution JointDistribution::flatten() const {
  std::vector<std::string> labels;
  std::vector<double> probs;
  for (std::size_t y = 0; y < outer_.size(); ++y) {
    if (outer_[y] == 0.0) {
      continue;
    }
    const auto& c = *conditionals_[y];
    for (std::size_t x = 0; x < c.size(); ++x) {
      labels.push_back(outer_.support()[y] + "," + c.support()[x]);
      probs.push_back(outer_[y] * c[x]);
    }
  }
  return FiniteDistribution(std::move(labels), std::move(probs));
}

double safe_log(double p) {
  if (p == 0.0) {
    return -kInfinity;
  }
  return std::log(p);
}

double weighted_log(double p, double q) {
  if (p == 0.0) {
    return 0.0;
  }
  return p * safe_log(q);
}

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) {
    return -kInfinity;
  }
  const double shift = *std::max_element(values.begin(), values.end());
  if (shift == -kInfinity) {
    return -kInfinity;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += std::exp(v - shift);
  }
  return shift + std::log(sum);
}

double entropy(const FiniteDistribution& d) {
  double h = 0.0;
  for (double p : d.probs()) {
    h -= weighted_log(p, p);
  }
  return h;
}

double conditional_entropy(const JointDistribution& j) {
  double h = 0.0;
  for (std::size_t y = 0; y < j.outer().size(); ++y) {
    const double weight = j.outer()[y];
    if (weight == 0.0) {
      continue;
    }
    h += weight * entropy(*j.conditionals()[y]);
  }
  return h;
}

double kl(const FiniteDistribution& p, const FiniteDistribution& q) {
  if (!p.same_support(q)) {
    throw SupportMismatch("kl: distributions over different supports");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) {
      continue;
    }
    if (q[i] == 0.0) {
      return kInfinity;
    }
    d += p[i] * std::log(p[i] / q[i]);
  }
  // Rounding can leave a tiny negative value when p and q nearly coincide.
  return std::max(d, 0.0);
}

double conditional_kl(const JointDistribution& j1, const ConditionalTable& q_conditionals) {
  if (q_conditionals.size() != j1.outer().size()) {
    throw SupportMismatch("conditional_kl: conditional tables not aligned");
  }
  double d = 0.0;
  for (std::size_t y = 0; y < j1.outer().size(); ++y) {
    const double weight = j1.outer()[y];
    if (weight == 0.0) {
      continue;
    }
    if (!q_conditionals[y]) {
      throw SupportMismatch("conditional_kl: missing reference conditional for '" + j1.outer().support()[y] + "'");
    }
    d += weight * kl(*j1.conditionals()[y], *q_conditionals[y]);
  }
  return d;
}

}  // namespace infoutil
