#pragma once

#include <random>
#include <vector>

#include "avc.hpp"
#include "channel.hpp"

// Shared helpers for randomized tests. Everything is seeded explicitly so
// failures reproduce.

namespace testutil {

inline avck::ProbVector random_prob(std::mt19937_64& rng, std::size_t size) {
  std::exponential_distribution<double> exp(1.0);
  std::vector<double> v(size);
  double sum = 0.0;
  for (double& x : v) {
    x = exp(rng) + 1e-9;
    sum += x;
  }
  for (double& x : v) x /= sum;
  // repair rounding so the sum is exactly 1
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < size; ++i) acc += v[i];
  v[size - 1] = 1.0 - acc;
  return avck::ProbVector(v);
}

inline avck::Channel random_channel(std::mt19937_64& rng, std::size_t inputs,
                                    std::size_t outputs) {
  std::vector<double> m(inputs * outputs);
  for (std::size_t x = 0; x < inputs; ++x) {
    avck::ProbVector col = random_prob(rng, outputs);
    for (std::size_t y = 0; y < outputs; ++y) m[y * inputs + x] = col[y];
  }
  return avck::Channel(inputs, outputs, m);
}

inline double binary_entropy(double p) {
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

}  // namespace testutil
