#include "infoutil/io_system.hpp"

#include <set>
#include <stdexcept>

namespace infoutil {

namespace {

void require_distinct(const std::vector<std::string>& symbols, const char* what) {
  if (symbols.empty()) {
    throw std::invalid_argument(std::string("InteractionAlphabet: empty ") + what + " set");
  }
  if (std::set<std::string>(symbols.begin(), symbols.end()).size() != symbols.size()) {
    throw std::invalid_argument(std::string("InteractionAlphabet: duplicate ") + what);
  }
}

void require_support(const FiniteDistribution& d, const std::vector<std::string>& expected, const char* what) {
  if (d.support() != expected) {
    throw SupportMismatch(std::string("GenerativeCoupling: ") + what + " distribution is not over the alphabet");
  }
}

void bump(std::vector<std::size_t>& counts, std::size_t index) {
  if (index >= counts.size()) {
    counts.resize(index + 1, 0);
  }
  ++counts[index];
}

}  // namespace

InteractionAlphabet::InteractionAlphabet(std::vector<std::string> actions, std::vector<std::string> observations)
    : actions_(std::move(actions)), observations_(std::move(observations)) {
  require_distinct(actions_, "action");
  require_distinct(observations_, "observation");
}

InteractionAlphabet InteractionAlphabet::coin() { return InteractionAlphabet({"H", "T"}, {"H", "T"}); }

InteractionHistory::InteractionHistory(std::vector<Interaction> steps) {
  steps_.reserve(steps.size());
  for (const Interaction& s : steps) {
    tally(s);
    steps_.push_back(s);
  }
}

void InteractionHistory::tally(Interaction step) {
  bump(action_counts_, step.action);
  bump(observation_counts_, step.observation);
}

InteractionHistory InteractionHistory::extended(Interaction step) const& {
  InteractionHistory copy = *this;
  return std::move(copy).extended(step);
}

InteractionHistory InteractionHistory::extended(Interaction step) && {
  tally(step);
  steps_.push_back(step);
  return std::move(*this);
}

InteractionHistory InteractionHistory::prefix(std::size_t n) const {
  if (n > steps_.size()) {
    throw std::out_of_range("InteractionHistory::prefix: longer than the history");
  }
  return InteractionHistory(std::vector<Interaction>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::size_t InteractionHistory::action_count(std::size_t action) const {
  return action < action_counts_.size() ? action_counts_[action] : 0;
}

std::size_t InteractionHistory::observation_count(std::size_t observation) const {
  return observation < observation_counts_.size() ? observation_counts_[observation] : 0;
}

std::string InteractionHistory::key() const {
  std::string k;
  k.reserve(2 * steps_.size());
  for (const Interaction& s : steps_) {
    if (s.action > 255 || s.observation > 255) {
      throw std::out_of_range("InteractionHistory::key: symbol index exceeds one byte");
    }
    k.push_back(static_cast<char>(s.action));
    k.push_back(static_cast<char>(s.observation));
  }
  return k;
}

GenerativeCoupling::GenerativeCoupling(IOSystem& agent, IOSystem& environment, InteractionAlphabet alphabet)
    : agent_(&agent), environment_(&environment), alphabet_(std::move(alphabet)) {}

FiniteDistribution GenerativeCoupling::action_distribution(const InteractionHistory& h) const {
  return agent_->action_distribution(h);
}

FiniteDistribution GenerativeCoupling::observation_prediction(const InteractionHistory& h, std::size_t action) const {
  return environment_->observation_prediction(h, action);
}

void GenerativeCoupling::observe(const InteractionHistory& before, Interaction step) {
  agent_->observe(before, step);
  environment_->observe(before, step);
}

void GenerativeCoupling::reset() {
  agent_->reset();
  environment_->reset();
}

SequenceProbability sequence_probability(const IOSystem& sys, const InteractionHistory& h) {
  SequenceProbability out;
  out.action_factors.reserve(h.size());
  out.observation_factors.reserve(h.size());
  InteractionHistory prefix;
  for (const Interaction& step : h.steps()) {
    const double pa = sys.action_distribution(prefix)[step.action];
    const double po = sys.observation_prediction(prefix, step.action)[step.observation];
    out.action_factors.push_back(pa);
    out.observation_factors.push_back(po);
    out.action_product *= pa;
    out.observation_product *= po;
    prefix = std::move(prefix).extended(step);
  }
  out.total = out.action_product * out.observation_product;
  return out;
}

StepOutcome generative_step(GenerativeCoupling& c, InteractionHistory h, UniformSource& rng) {
  const FiniteDistribution actions = c.agent().action_distribution(h);
  require_support(actions, c.alphabet().actions(), "agent action");
  const std::size_t a = sample_index(actions, rng.next());

  const FiniteDistribution observations = c.environment().observation_prediction(h, a);
  require_support(observations, c.alphabet().observations(), "environment observation");
  const std::size_t o = sample_index(observations, rng.next());

  const Interaction step{a, o};
  c.observe(h, step);
  return StepOutcome{step, std::move(h).extended(step)};
}

InteractionHistory run_episode(GenerativeCoupling& c, std::size_t steps, UniformSource& rng) {
  c.reset();
  InteractionHistory h;
  for (std::size_t t = 0; t < steps; ++t) {
    h = generative_step(c, std::move(h), rng).history;
  }
  return h;
}

}  // namespace infoutil
