#include "spmvkit/triplet.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace spmvkit {

namespace {

void check_bounds(const Entry& e, std::size_t num_rows, std::size_t num_cols) {
  if (e.row >= num_rows || e.col >= num_cols) {
    throw std::invalid_argument("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                                ") outside " + std::to_string(num_rows) + "x" +
                                std::to_string(num_cols) + " matrix");
  }
}

}  // namespace

TripletMatrix::TripletMatrix(std::size_t num_rows, std::size_t num_cols, std::vector<Entry> entries)
    : num_rows_(num_rows), num_cols_(num_cols), entries_(std::move(entries)) {
  const Entry* prev = nullptr;
  for (const Entry& e : entries_) {
    check_bounds(e, num_rows_, num_cols_);
    if (prev != nullptr && !(prev->row < e.row || (prev->row == e.row && prev->col < e.col))) {
      throw std::invalid_argument("entries not strictly increasing in (row, col)");
    }
    prev = &e;
  }
}

TripletMatrix canonicalize(std::vector<Entry> raw, std::size_t num_rows, std::size_t num_cols) {
  for (const Entry& e : raw) check_bounds(e, num_rows, num_cols);
  std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) {
    return a.row < b.row || (a.row == b.row && a.col < b.col);
  });
  std::vector<Entry> merged;
  merged.reserve(raw.size());
  for (const Entry& e : raw) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  return TripletMatrix(num_rows, num_cols, std::move(merged));
}

std::vector<std::size_t> row_lengths(const TripletMatrix& m) {
  std::vector<std::size_t> lens(m.num_rows(), 0);
  for (const Entry& e : m.entries()) ++lens[e.row];
  return lens;
}

MatrixStats matrix_stats(const TripletMatrix& m) {
  if (m.num_rows() == 0) throw std::invalid_argument("matrix_stats: matrix has zero rows");
  const auto lens = row_lengths(m);
  MatrixStats s;
  s.num_rows = m.num_rows();
  s.nnz = m.nnz();
  s.row_len_max = *std::max_element(lens.begin(), lens.end());
  s.row_len_min = *std::min_element(lens.begin(), lens.end());
  s.row_len_mean = static_cast<double>(m.nnz()) / static_cast<double>(m.num_rows());
  const double cells = static_cast<double>(m.num_rows()) * static_cast<double>(m.num_cols());
  s.density_percent = cells > 0.0 ? 100.0 * static_cast<double>(m.nnz()) / cells : 0.0;
  return s;
}

std::vector<double> spmv_reference(const TripletMatrix& m, std::span<const double> x) {
  if (x.size() != m.num_cols()) {
    throw std::invalid_argument("spmv_reference: x has length " + std::to_string(x.size()) +
                                ", expected " + std::to_string(m.num_cols()));
  }
  std::vector<double> y(m.num_rows(), 0.0);
  for (const Entry& e : m.entries()) y[e.row] += e.value * x[e.col];
  return y;
}

}  // namespace spmvkit
