#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// Blocked CSR: the matrix itself (not the compressed rows) is tiled into
/// block_rows x block_cols dense blocks anchored at (0, 0); a block is stored
/// iff it contains at least one source entry. Block values are row-major
/// within the block. Trailing partial tiles are conceptually zero-padded.
template <class Scalar = double>
struct BcsrMatrix {
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::size_t block_rows = 4;
  std::size_t block_cols = 4;
  std::vector<index_t> block_row_pointers;  // over the block-row grid
  std::vector<index_t> block_column_index;  // per stored block
  std::vector<Scalar> block_values;         // block_rows * block_cols per stored block

  std::size_t num_blocks() const noexcept { return block_column_index.size(); }
  std::size_t slot_count() const noexcept { return block_values.size(); }
  std::size_t grid_rows() const noexcept {
    return block_rows == 0 ? 0 : (num_rows + block_rows - 1) / block_rows;
  }
};

template <class Scalar = double>
BcsrMatrix<Scalar> build_bcsr(const TripletMatrix& m, std::size_t block_rows = 4,
                              std::size_t block_cols = 4) {
  if (block_rows == 0 || block_cols == 0) {
    throw std::invalid_argument("build_bcsr: block dimensions must be nonzero");
  }
  BcsrMatrix<Scalar> a;
  a.num_rows = m.num_rows();
  a.num_cols = m.num_cols();
  a.block_rows = block_rows;
  a.block_cols = block_cols;

  // (block row, block col) -> slot offset of the stored block; map order is
  // already the row-major block order build needs.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> blocks;
  for (const Entry& e : m.entries()) {
    blocks.emplace(std::make_pair(e.row / block_rows, e.col / block_cols), 0);
  }
  const std::size_t per_block = block_rows * block_cols;
  a.block_values.assign(blocks.size() * per_block, Scalar{0});
  a.block_column_index.reserve(blocks.size());
  a.block_row_pointers.assign(a.grid_rows() + 1, 0);

  std::size_t offset = 0;
  for (auto& [pos, slot] : blocks) {
    slot = offset;
    offset += per_block;
    a.block_column_index.push_back(static_cast<index_t>(pos.second));
    ++a.block_row_pointers[pos.first + 1];
  }
  for (std::size_t i = 0; i < a.grid_rows(); ++i) {
    a.block_row_pointers[i + 1] += a.block_row_pointers[i];
  }
  for (const Entry& e : m.entries()) {
    const std::size_t slot = blocks.at({e.row / block_rows, e.col / block_cols});
    const std::size_t local = (e.row % block_rows) * block_cols + (e.col % block_cols);
    a.block_values[slot + local] = static_cast<Scalar>(e.value);
  }
  return a;
}

template <class Scalar>
void spmv_bcsr(const BcsrMatrix<Scalar>& a, std::span<const Scalar> x, std::span<Scalar> y) {
  if (x.size() != a.num_cols || y.size() != a.num_rows) {
    throw std::invalid_argument("spmv_bcsr: dimension mismatch");
  }
  std::fill(y.begin(), y.end(), Scalar{0});
  const std::size_t per_block = a.block_rows * a.block_cols;
  for (std::size_t br = 0; br < a.grid_rows(); ++br) {
    for (index_t b = a.block_row_pointers[br]; b < a.block_row_pointers[br + 1]; ++b) {
      const std::size_t col_base = a.block_column_index[b] * a.block_cols;
      const Scalar* block = a.block_values.data() + static_cast<std::size_t>(b) * per_block;
      for (std::size_t i = 0; i < a.block_rows; ++i) {
        const std::size_t row = br * a.block_rows + i;
        if (row >= a.num_rows) break;
        Scalar acc = 0;
        for (std::size_t j = 0; j < a.block_cols && col_base + j < a.num_cols; ++j) {
          acc += block[i * a.block_cols + j] * x[col_base + j];
        }
        y[row] += acc;
      }
    }
  }
}

template <class Scalar>
std::vector<Scalar> spmv_bcsr(const BcsrMatrix<Scalar>& a, const std::vector<Scalar>& x) {
  std::vector<Scalar> y(a.num_rows);
  spmv_bcsr(a, std::span<const Scalar>(x), std::span<Scalar>(y));
  return y;
}

/// Pad slots hold zero, so zero-valued slots are skipped; an explicitly
/// stored zero inside a stored block does not survive the round trip.
template <class Scalar>
TripletMatrix to_triplets(const BcsrMatrix<Scalar>& a) {
  std::vector<Entry> entries;
  const std::size_t per_block = a.block_rows * a.block_cols;
  for (std::size_t br = 0; br < a.grid_rows(); ++br) {
    for (index_t b = a.block_row_pointers[br]; b < a.block_row_pointers[br + 1]; ++b) {
      const Scalar* block = a.block_values.data() + static_cast<std::size_t>(b) * per_block;
      for (std::size_t i = 0; i < a.block_rows; ++i) {
        for (std::size_t j = 0; j < a.block_cols; ++j) {
          if (block[i * a.block_cols + j] == Scalar{0}) continue;
          entries.push_back({static_cast<index_t>(br * a.block_rows + i),
                             static_cast<index_t>(a.block_column_index[b] * a.block_cols + j),
                             static_cast<double>(block[i * a.block_cols + j])});
        }
      }
    }
  }
  return canonicalize(std::move(entries), a.num_rows, a.num_cols);
}

}  // namespace spmvkit
