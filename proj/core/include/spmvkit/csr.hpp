#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// Compressed sparse rows: values and column indices packed row by row,
/// row_pointers[i] giving the offset of row i's first entry.
template <class Scalar = double>
struct CsrMatrix {
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::vector<Scalar> values;
  std::vector<index_t> columns;
  std::vector<index_t> row_pointers;  // size num_rows + 1, last element = nnz

  std::size_t nnz() const noexcept { return values.size(); }
};

template <class Scalar = double>
CsrMatrix<Scalar> build_csr(const TripletMatrix& m) {
  CsrMatrix<Scalar> a;
  a.num_rows = m.num_rows();
  a.num_cols = m.num_cols();
  a.values.reserve(m.nnz());
  a.columns.reserve(m.nnz());
  a.row_pointers.assign(m.num_rows() + 1, 0);
  for (const Entry& e : m.entries()) ++a.row_pointers[e.row + 1];
  for (std::size_t i = 0; i < m.num_rows(); ++i) a.row_pointers[i + 1] += a.row_pointers[i];
  for (const Entry& e : m.entries()) {
    a.values.push_back(static_cast<Scalar>(e.value));
    a.columns.push_back(e.col);
  }
  return a;
}

template <class Scalar>
void spmv_csr(const CsrMatrix<Scalar>& a, std::span<const Scalar> x, std::span<Scalar> y) {
  if (x.size() != a.num_cols || y.size() != a.num_rows) {
    throw std::invalid_argument("spmv_csr: dimension mismatch");
  }
  for (std::size_t i = 0; i < a.num_rows; ++i) {
    Scalar acc = 0;
    for (index_t j = a.row_pointers[i]; j < a.row_pointers[i + 1]; ++j) {
      acc += a.values[j] * x[a.columns[j]];
    }
    y[i] = acc;
  }
}

template <class Scalar>
std::vector<Scalar> spmv_csr(const CsrMatrix<Scalar>& a, const std::vector<Scalar>& x) {
  std::vector<Scalar> y(a.num_rows);
  spmv_csr(a, std::span<const Scalar>(x), std::span<Scalar>(y));
  return y;
}

template <class Scalar>
TripletMatrix to_triplets(const CsrMatrix<Scalar>& a) {
  std::vector<Entry> entries;
  entries.reserve(a.nnz());
  for (std::size_t i = 0; i < a.num_rows; ++i) {
    for (index_t j = a.row_pointers[i]; j < a.row_pointers[i + 1]; ++j) {
      entries.push_back({static_cast<index_t>(i), a.columns[j], static_cast<double>(a.values[j])});
    }
  }
  return TripletMatrix(a.num_rows, a.num_cols, std::move(entries));
}

}  // namespace spmvkit
