#include "spmvkit/synthetic.hpp"

#include <stdexcept>

namespace spmvkit {

double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

double draw_value(const RandomMatrixSpec& spec, std::mt19937_64& rng) {
  for (;;) {
    double v;
    if (spec.integer_values) {
      const std::uint64_t span = static_cast<std::uint64_t>(spec.value_max - spec.value_min) + 1;
      v = static_cast<double>(spec.value_min + static_cast<int>(rng() % span));
    } else {
      v = spec.value_min + unit_real(rng) * (spec.value_max - spec.value_min);
    }
    if (spec.allow_zero_values || v != 0.0) return v;
  }
}

}  // namespace

TripletMatrix random_matrix(const RandomMatrixSpec& spec, std::uint64_t seed) {
  if (spec.value_min > spec.value_max) {
    throw std::invalid_argument("random_matrix: empty value range");
  }
  if (!spec.allow_zero_values && spec.value_min == 0 && spec.value_max == 0) {
    throw std::invalid_argument("random_matrix: no nonzero value available");
  }
  std::mt19937_64 rng(seed);
  std::vector<Entry> entries;
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.cols; ++c) {
      if (unit_real(rng) < spec.density) {
        entries.push_back(
            {static_cast<index_t>(r), static_cast<index_t>(c), draw_value(spec, rng)});
      }
    }
  }
  return TripletMatrix(spec.rows, spec.cols, std::move(entries));
}

TripletMatrix banded_matrix(std::size_t n, std::size_t half_bandwidth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Entry> entries;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t lo = r >= half_bandwidth ? r - half_bandwidth : 0;
    const std::size_t hi = std::min(n - 1, r + half_bandwidth);
    for (std::size_t c = lo; c <= hi; ++c) {
      entries.push_back(
          {static_cast<index_t>(r), static_cast<index_t>(c), 2.0 * unit_real(rng) - 1.0});
    }
  }
  return TripletMatrix(n, n, std::move(entries));
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> x(n);
  for (double& v : x) v = 2.0 * unit_real(rng) - 1.0;
  return x;
}

}  // namespace spmvkit
