#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "spmvkit/synthetic.hpp"
#include "spmvkit/triplet.hpp"

namespace spmvkit::testing {

/// 8x8, 13 nonzeros valued 1..13. Reproduces the hand-checkable counts used
/// throughout the tests: CSR row pointers [0,2,3,4,5,6,8,11,13], 3 stored 4x4
/// blocks (48 slots, 35 pad zeros), ELLPACK width 3 (11 pad zeros), and
/// row-grouped storage with groups of 4 (7 pad zeros).
inline TripletMatrix example_8x8() {
  return TripletMatrix(8, 8,
                       {{0, 0, 1.0},
                        {0, 3, 2.0},
                        {1, 1, 3.0},
                        {2, 2, 4.0},
                        {3, 0, 5.0},
                        {4, 4, 6.0},
                        {5, 0, 7.0},
                        {5, 5, 8.0},
                        {6, 1, 9.0},
                        {6, 4, 10.0},
                        {6, 6, 11.0},
                        {7, 2, 12.0},
                        {7, 7, 13.0}});
}

inline TripletMatrix identity(std::size_t n) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    entries.push_back({static_cast<index_t>(i), static_cast<index_t>(i), 1.0});
  }
  return TripletMatrix(n, n, std::move(entries));
}

inline std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

inline bool close(double a, double b, double rel = 1e-12) {
  return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

/// Random matrix in the shape the randomized suites use: up to 64 rows and
/// columns, density up to 0.3, integer values in [-8, 8].
inline TripletMatrix random_small(std::uint64_t seed, bool allow_zero_values = true,
                                  bool integer_values = true) {
  std::mt19937_64 rng(seed);
  RandomMatrixSpec spec;
  spec.rows = 1 + rng() % 64;
  spec.cols = 1 + rng() % 64;
  spec.density = 0.05 + 0.25 * unit_real(rng);
  spec.integer_values = integer_values;
  spec.allow_zero_values = allow_zero_values;
  return random_matrix(spec, rng());
}

}  // namespace spmvkit::testing
