#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "infoutil/entropy.hpp"

namespace infoutil {

/// Seedable stream of uniform reals in [0, 1).
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard,
/// and converted with the top 53 bits so the stream does not depend on the
/// standard library's distribution implementations.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Inverse-CDF draw over the ordered support. Never returns a zero-probability
/// symbol, even when rounding leaves the cumulative sum just below `u`.
std::size_t sample_index(const FiniteDistribution& d, double u);

/// Draws a probability vector of length n, uniform on the simplex. When
/// `zero_probability` > 0 each entry is independently zeroed with that chance
/// (at least one entry always survives).
std::vector<double> random_simplex_point(std::size_t n, UniformSource& rng, double zero_probability = 0.0);

}  // namespace infoutil
