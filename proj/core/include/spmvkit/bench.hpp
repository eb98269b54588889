#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "spmvkit/format_kind.hpp"
#include "spmvkit/memsim.hpp"
#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// One benchmark result row. gflops is always 2 * nnz / median_seconds / 1e9
/// and bytes is the storage footprint at the record's precision.
struct BenchRecord {
  std::string matrix_name;
  std::string format_name;
  std::optional<std::size_t> group_size;  // set for rgcsr only
  Precision precision = Precision::Double;
  std::size_t repetitions = 0;
  std::size_t nnz = 0;
  double median_seconds = 0.0;
  double gflops = 0.0;
  double fill_percent = 0.0;
  std::size_t artificial_zeros = 0;
  std::size_t bytes = 0;
  double checksum = 0.0;
};

/// Raised when a format's output disagrees with the reference oracle;
/// correctness precedes any timing.
class ChecksumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchOptions {
  std::size_t repetitions = 20;
  bool x_ones = false;       // force the all-ones input vector
  std::uint64_t seed = 1;    // seeds the pseudo-random x
  double target_rep_seconds = 2e-4;  // each repetition times a calibrated inner loop
};

/// Builds the format, verifies its output checksum against the reference
/// oracle (throws ChecksumError on disagreement), then times
/// options.repetitions runs and reports the median. group_size applies to
/// rgcsr and is the explicit ELLPACK width for hybrid when given.
BenchRecord run_spmv_bench(const TripletMatrix& m, const std::string& matrix_name, FormatKind kind,
                           std::optional<std::size_t> group_size, Precision precision,
                           const BenchOptions& options);

}  // namespace spmvkit
