#include "infoutil/agents.hpp"

#include <cmath>
#include <stdexcept>

namespace infoutil {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

void require_coin_symbol(std::size_t symbol) {
  if (symbol > kTails) {
    throw std::out_of_range("coin alphabet has two symbols");
  }
}

}  // namespace

BiasedCoin::BiasedCoin(double bias, double action_expectation)
    : bias_(bias), action_expectation_(action_expectation) {
  require_probability(bias, "BiasedCoin bias");
  require_probability(action_expectation, "BiasedCoin action expectation");
}

FiniteDistribution BiasedCoin::action_distribution(const InteractionHistory&) const {
  return FiniteDistribution::bernoulli(action_expectation_);
}

FiniteDistribution BiasedCoin::observation_prediction(const InteractionHistory&, std::size_t action) const {
  require_coin_symbol(action);
  return FiniteDistribution::bernoulli(bias_);
}

std::pair<FiniteDistribution, FiniteDistribution> coin_policy(const BiasedCoin& c) {
  const InteractionHistory empty;
  return {c.action_distribution(empty), c.observation_prediction(empty, kHeads)};
}

LaplaceState LaplaceState::replay(const InteractionHistory& h) { return {h.size(), h.observation_count(kHeads)}; }

FiniteDistribution laplace_predict(const LaplaceState& s) {
  return FiniteDistribution::bernoulli(static_cast<double>(s.n + 1) / static_cast<double>(s.t + 2));
}

FiniteDistribution laplace_act(const LaplaceState& s) {
  // (n + 1) / (t + 2) >= 1/2  <=>  2n >= t, compared exactly in integers.
  return FiniteDistribution::point_mass({"H", "T"}, 2 * s.n >= s.t ? kHeads : kTails);
}

FiniteDistribution LaplaceAgent::action_distribution(const InteractionHistory& h) const {
  return laplace_act(LaplaceState::replay(h));
}

FiniteDistribution LaplaceAgent::observation_prediction(const InteractionHistory& h, std::size_t action) const {
  require_coin_symbol(action);
  return laplace_predict(LaplaceState::replay(h));
}

void LaplaceAgent::observe(const InteractionHistory&, Interaction step) {
  require_coin_symbol(step.observation);
  ++state_.t;
  if (step.observation == kHeads) {
    ++state_.n;
  }
}

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

FiniteDistribution sfp_policy(const FictitiousState& s, double alpha, PenniesRole role) {
  const double drive = role == PenniesRole::kMatcher ? s.gamma() - 0.5 : 0.5 - s.gamma();
  const double heads = sigmoid(alpha * drive);
  const double tails = sigmoid(-alpha * drive);
  return FiniteDistribution({"H", "T"}, {heads, tails});
}

FiniteDistribution sfp_predict(const FictitiousState& s) {
  const double total = s.kappa_heads + s.kappa_tails;
  return FiniteDistribution({"H", "T"}, {s.kappa_heads / total, s.kappa_tails / total});
}

FictitiousPlayer::FictitiousPlayer(double alpha, PenniesRole role, Seat seat)
    : alpha_(alpha), role_(role), seat_(seat) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("FictitiousPlayer: alpha must be positive");
  }
}

FictitiousState FictitiousPlayer::replay(const InteractionHistory& h) const {
  FictitiousState s;
  const bool watches_observations = seat_ == Seat::kAgent;
  const std::size_t heads = watches_observations ? h.observation_count(kHeads) : h.action_count(kHeads);
  s.kappa_heads += static_cast<double>(heads);
  s.kappa_tails += static_cast<double>(h.size() - heads);
  return s;
}

FiniteDistribution FictitiousPlayer::action_distribution(const InteractionHistory& h) const {
  const FictitiousState s = replay(h);
  return seat_ == Seat::kAgent ? sfp_policy(s, alpha_, role_) : sfp_predict(s);
}

FiniteDistribution FictitiousPlayer::observation_prediction(const InteractionHistory& h, std::size_t action) const {
  require_coin_symbol(action);
  const FictitiousState s = replay(h);
  return seat_ == Seat::kAgent ? sfp_predict(s) : sfp_policy(s, alpha_, role_);
}

void FictitiousPlayer::observe(const InteractionHistory&, Interaction step) {
  const std::size_t opponent = seat_ == Seat::kAgent ? step.observation : step.action;
  require_coin_symbol(opponent);
  if (opponent == kHeads) {
    state_.kappa_heads += 1.0;
  } else {
    state_.kappa_tails += 1.0;
  }
}

TabularSystem::TabularSystem(InteractionAlphabet alphabet, std::size_t horizon)
    : alphabet_(std::move(alphabet)), horizon_(horizon) {}

void TabularSystem::set_action(const InteractionHistory& h, std::vector<double> probs) {
  actions_.insert_or_assign(h.key(), FiniteDistribution(alphabet_.actions(), std::move(probs)));
}

void TabularSystem::set_observation(const InteractionHistory& h, std::size_t action, std::vector<double> probs) {
  std::string key = h.key();
  key.push_back(static_cast<char>(action));
  observations_.insert_or_assign(std::move(key), FiniteDistribution(alphabet_.observations(), std::move(probs)));
}

FiniteDistribution TabularSystem::action_distribution(const InteractionHistory& h) const {
  const auto it = actions_.find(h.key());
  if (it == actions_.end()) {
    throw std::out_of_range("TabularSystem: no action conditional for this history");
  }
  return it->second;
}

FiniteDistribution TabularSystem::observation_prediction(const InteractionHistory& h, std::size_t action) const {
  std::string key = h.key();
  key.push_back(static_cast<char>(action));
  const auto it = observations_.find(key);
  if (it == observations_.end()) {
    throw std::out_of_range("TabularSystem: no observation conditional for this history");
  }
  return it->second;
}

TabularSystem random_tabular_system(const InteractionAlphabet& alphabet, std::size_t horizon, UniformSource& rng,
                                    double zero_probability) {
  TabularSystem sys(alphabet, horizon);
  const std::size_t na = alphabet.actions().size();
  const std::size_t no = alphabet.observations().size();
  auto fill = [&](auto&& self, const InteractionHistory& h) -> void {
    if (h.size() == horizon) {
      return;
    }
    sys.set_action(h, random_simplex_point(na, rng, zero_probability));
    for (std::size_t a = 0; a < na; ++a) {
      sys.set_observation(h, a, random_simplex_point(no, rng, zero_probability));
      for (std::size_t o = 0; o < no; ++o) {
        self(self, h.extended({a, o}));
      }
    }
  };
  fill(fill, InteractionHistory{});
  return sys;
}

}  // namespace infoutil
