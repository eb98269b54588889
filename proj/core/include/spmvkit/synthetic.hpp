#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// Seeded generators for tests and benchmarks. All draws go through
/// std::mt19937_64 with explicit bit manipulation, so the same seed produces
/// the same matrix on every platform.

struct RandomMatrixSpec {
  std::size_t rows = 8;
  std::size_t cols = 8;
  double density = 0.2;        // per-cell Bernoulli probability
  int value_min = -8;
  int value_max = 8;
  bool integer_values = true;  // otherwise uniform reals in [value_min, value_max]
  bool allow_zero_values = true;
};

/// Uniform double in [0, 1) from the generator's top 53 bits.
double unit_real(std::mt19937_64& rng);

TripletMatrix random_matrix(const RandomMatrixSpec& spec, std::uint64_t seed);

/// Square matrix with a dense diagonal band of the given half width and
/// random values in [-1, 1].
TripletMatrix banded_matrix(std::size_t n, std::size_t half_bandwidth, std::uint64_t seed);

/// Uniform reals in [-1, 1].
std::vector<double> random_vector(std::size_t n, std::uint64_t seed);

}  // namespace spmvkit
