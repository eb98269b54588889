#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// Row-grouped CSR: rows are partitioned into groups of group_size (the last
/// group may be smaller). Within a group of s rows with slot width K = the
/// group's maximum row length, entry j of local row t lives at
/// group_pointers[g] + t + j * s, i.e. slot-major so that consecutive rows'
/// same-slot entries are adjacent. Pad slots carry value 0 and column 0 and
/// are never read by the kernel: row_lengths bounds each row's loop.
template <class Scalar = double>
struct RgcsrMatrix {
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::size_t group_size = 0;
  std::vector<Scalar> values;
  std::vector<index_t> columns;
  std::vector<index_t> group_pointers;  // size num_groups + 1, last = total slots
  std::vector<index_t> row_lengths;     // size num_rows

  std::size_t num_groups() const noexcept {
    return group_size == 0 ? 0 : (num_rows + group_size - 1) / group_size;
  }
  std::size_t rows_in_group(std::size_t g) const noexcept {
    return std::min(group_size, num_rows - g * group_size);
  }
  std::size_t slot_count() const noexcept { return values.size(); }
};

template <class Scalar = double>
RgcsrMatrix<Scalar> build_rgcsr(const TripletMatrix& m, std::size_t group_size) {
  if (group_size == 0) throw std::invalid_argument("build_rgcsr: group size must be nonzero");

  RgcsrMatrix<Scalar> a;
  a.num_rows = m.num_rows();
  a.num_cols = m.num_cols();
  a.group_size = group_size;

  const auto lens = row_lengths(m);
  a.row_lengths.assign(lens.begin(), lens.end());

  const std::size_t groups = a.num_groups();
  a.group_pointers.assign(groups + 1, 0);
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t s = a.rows_in_group(g);
    std::size_t width = 0;
    for (std::size_t t = 0; t < s; ++t) width = std::max(width, lens[g * group_size + t]);
    a.group_pointers[g + 1] = a.group_pointers[g] + static_cast<index_t>(s * width);
  }

  a.values.assign(a.group_pointers[groups], Scalar{0});
  a.columns.assign(a.group_pointers[groups], 0);
  std::vector<std::size_t> filled(m.num_rows(), 0);
  for (const Entry& e : m.entries()) {
    const std::size_t g = e.row / group_size;
    const std::size_t local = e.row % group_size;
    const std::size_t idx = a.group_pointers[g] + local + filled[e.row]++ * a.rows_in_group(g);
    a.values[idx] = static_cast<Scalar>(e.value);
    a.columns[idx] = e.col;
  }
  return a;
}

/// If multiply_add_count is given it receives the number of multiply-add
/// pairs executed, which is exactly the number of stored nonzeros: pad slots
/// are skipped, unlike a sliced-ELLPACK kernel that pads arithmetic too.
template <class Scalar>
void spmv_rgcsr(const RgcsrMatrix<Scalar>& a, std::span<const Scalar> x, std::span<Scalar> y,
                std::uint64_t* multiply_add_count = nullptr) {
  if (x.size() != a.num_cols || y.size() != a.num_rows) {
    throw std::invalid_argument("spmv_rgcsr: dimension mismatch");
  }
  std::uint64_t madds = 0;
  for (std::size_t g = 0; g < a.num_groups(); ++g) {
    const std::size_t s = a.rows_in_group(g);
    const std::size_t base = a.group_pointers[g];
    for (std::size_t t = 0; t < s; ++t) {
      const std::size_t row = g * a.group_size + t;
      Scalar acc = 0;
      std::size_t idx = base + t;
      for (index_t j = 0; j < a.row_lengths[row]; ++j, idx += s) {
        acc += a.values[idx] * x[a.columns[idx]];
        ++madds;
      }
      y[row] = acc;
    }
  }
  if (multiply_add_count != nullptr) *multiply_add_count = madds;
}

template <class Scalar>
std::vector<Scalar> spmv_rgcsr(const RgcsrMatrix<Scalar>& a, const std::vector<Scalar>& x,
                               std::uint64_t* multiply_add_count = nullptr) {
  std::vector<Scalar> y(a.num_rows);
  spmv_rgcsr(a, std::span<const Scalar>(x), std::span<Scalar>(y), multiply_add_count);
  return y;
}

template <class Scalar>
TripletMatrix to_triplets(const RgcsrMatrix<Scalar>& a) {
  std::vector<Entry> entries;
  entries.reserve(a.slot_count());
  for (std::size_t g = 0; g < a.num_groups(); ++g) {
    const std::size_t s = a.rows_in_group(g);
    for (std::size_t t = 0; t < s; ++t) {
      const std::size_t row = g * a.group_size + t;
      std::size_t idx = a.group_pointers[g] + t;
      for (index_t j = 0; j < a.row_lengths[row]; ++j, idx += s) {
        entries.push_back(
            {static_cast<index_t>(row), a.columns[idx], static_cast<double>(a.values[idx])});
      }
    }
  }
  return TripletMatrix(a.num_rows, a.num_cols, std::move(entries));
}

}  // namespace spmvkit
