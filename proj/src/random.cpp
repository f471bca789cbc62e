#include "infoutil/random.hpp"

#include <cmath>
#include <stdexcept>

namespace infoutil {

std::size_t sample_index(const FiniteDistribution& d, double u) {
  double cumulative = 0.0;
  std::size_t last_positive = d.size();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0.0) {
      continue;
    }
    last_positive = i;
    cumulative += d[i];
    if (u < cumulative) {
      return i;
    }
  }
  if (last_positive == d.size()) {
    throw std::logic_error("sample_index: distribution has no mass");
  }
  return last_positive;
}

std::vector<double> random_simplex_point(std::size_t n, UniformSource& rng, double zero_probability) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    // Exponential(1) weights normalize to a uniform point on the simplex.
    x = -std::log1p(-rng.next());
    if (zero_probability > 0.0 && rng.next() < zero_probability) {
      x = 0.0;
    }
    total += x;
  }
  if (total == 0.0) {
    const std::size_t keep = static_cast<std::size_t>(rng.next() * static_cast<double>(n));
    w[keep < n ? keep : n - 1] = 1.0;
    total = 1.0;
  }
  for (auto& x : w) {
    x /= total;
  }
  return w;
}

}  // namespace infoutil
