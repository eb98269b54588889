#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spmvkit {

/// Row/column index type. All stored index arrays use 4-byte indices, which is
/// also what the memory footprint accounting assumes.
using index_t = std::uint32_t;

struct Entry {
  index_t row = 0;
  index_t col = 0;
  double value = 0.0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Canonical coordinate representation: entries sorted by (row, col) with no
/// duplicates. Every storage format is built from this and converts back to it.
/// Explicitly stored zeros are kept as entries; they occupy slots like any
/// other entry. Immutable after construction.
class TripletMatrix {
 public:
  TripletMatrix() = default;

  /// Requires entries already canonical (in bounds, strictly increasing in
  /// (row, col)); throws std::invalid_argument otherwise.
  TripletMatrix(std::size_t num_rows, std::size_t num_cols, std::vector<Entry> entries);

  std::size_t num_rows() const noexcept { return num_rows_; }
  std::size_t num_cols() const noexcept { return num_cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  friend bool operator==(const TripletMatrix&, const TripletMatrix&) = default;

 private:
  std::size_t num_rows_ = 0;
  std::size_t num_cols_ = 0;
  std::vector<Entry> entries_;
};

/// Sorts by (row, col) and sums duplicate coordinates. Explicit zeros are
/// retained. Throws std::invalid_argument on an out-of-bounds index.
TripletMatrix canonicalize(std::vector<Entry> raw, std::size_t num_rows, std::size_t num_cols);

/// Number of stored entries per row; sums to nnz().
std::vector<std::size_t> row_lengths(const TripletMatrix& m);

struct MatrixStats {
  std::size_t num_rows = 0;
  std::size_t nnz = 0;
  std::size_t row_len_max = 0;
  double row_len_mean = 0.0;
  std::size_t row_len_min = 0;
  double density_percent = 0.0;  // 100 * nnz / (rows * cols)
};

/// Throws std::invalid_argument for a matrix with zero rows.
MatrixStats matrix_stats(const TripletMatrix& m);

/// Reference y = Ax. Accumulates in sorted entry order, so results are
/// deterministic; every format kernel is tested against this.
std::vector<double> spmv_reference(const TripletMatrix& m, std::span<const double> x);

}  // namespace spmvkit
