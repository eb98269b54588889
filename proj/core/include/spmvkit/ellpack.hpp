#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// ELLPACK: an N x K slot grid, K = maximum row length. Slots are stored
/// slot-major (all slot-0 entries for rows 0..N-1, then all slot-1 entries,
/// ...) so that consecutive rows' same-slot entries are adjacent in memory.
/// Pad slots carry value 0 and column 0.
template <class Scalar = double>
struct EllpackMatrix {
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::size_t slots_per_row = 0;  // K
  std::vector<Scalar> values;     // size num_rows * slots_per_row
  std::vector<index_t> columns;

  std::size_t slot_count() const noexcept { return values.size(); }
  std::size_t slot_index(std::size_t row, std::size_t slot) const noexcept {
    return slot * num_rows + row;
  }
};

/// Parallel coordinate arrays sorted by (row, col). Used standalone and as
/// the overflow part of the hybrid format.
template <class Scalar = double>
struct CooArrays {
  std::vector<index_t> rows;
  std::vector<index_t> columns;
  std::vector<Scalar> values;

  std::size_t nnz() const noexcept { return values.size(); }
};

/// ELLPACK of width K1 plus coordinate overflow for entries beyond the first
/// K1 of a row. Each source entry lives in exactly one part.
template <class Scalar = double>
struct HybridMatrix {
  EllpackMatrix<Scalar> ell;
  CooArrays<Scalar> coo;
};

/// Number of real (non-pad) slots in a row. Real entries fill slots 0..len-1
/// with strictly increasing columns; pads carry column 0, so the first
/// non-increasing column starts the pad region. A row whose only entry is an
/// explicitly stored zero at column 0 is indistinguishable from an empty row
/// and counts as empty, the same information loss the physical layout has.
template <class Scalar>
std::size_t ell_row_length(const EllpackMatrix<Scalar>& a, std::size_t row) {
  std::size_t len = 0;
  index_t prev_col = 0;
  for (std::size_t slot = 0; slot < a.slots_per_row; ++slot) {
    const std::size_t idx = a.slot_index(row, slot);
    const index_t col = a.columns[idx];
    if (slot > 0 && col <= prev_col) break;
    if (slot == 0 && col == 0 && a.values[idx] == Scalar{0}) {
      const bool real_successor = a.slots_per_row > 1 && a.columns[a.slot_index(row, 1)] > 0;
      if (!real_successor) break;
    }
    ++len;
    prev_col = col;
  }
  return len;
}

template <class Scalar>
std::size_t ell_nnz(const EllpackMatrix<Scalar>& a) {
  std::size_t total = 0;
  for (std::size_t row = 0; row < a.num_rows; ++row) total += ell_row_length(a, row);
  return total;
}

inline constexpr std::size_t kDefaultEllSlotBudget = std::size_t{1} << 31;

/// Guards the diagonal-plus-full-row blowup: a matrix that is nearly diagonal
/// with one dense row would allocate N^2 slots.
template <class Scalar = double>
EllpackMatrix<Scalar> build_ellpack(const TripletMatrix& m,
                                    std::size_t slot_budget = kDefaultEllSlotBudget) {
  const auto lens = row_lengths(m);
  std::size_t k = 0;
  for (std::size_t len : lens) k = std::max(k, len);
  if (k != 0 && m.num_rows() > slot_budget / k) {
    throw std::runtime_error("build_ellpack: " + std::to_string(m.num_rows()) + " rows x width " +
                             std::to_string(k) + " exceeds the slot budget of " +
                             std::to_string(slot_budget));
  }
  EllpackMatrix<Scalar> a;
  a.num_rows = m.num_rows();
  a.num_cols = m.num_cols();
  a.slots_per_row = k;
  a.values.assign(a.num_rows * k, Scalar{0});
  a.columns.assign(a.num_rows * k, 0);
  std::vector<std::size_t> filled(m.num_rows(), 0);
  for (const Entry& e : m.entries()) {
    const std::size_t idx = a.slot_index(e.row, filled[e.row]++);
    a.values[idx] = static_cast<Scalar>(e.value);
    a.columns[idx] = e.col;
  }
  return a;
}

template <class Scalar>
void spmv_ellpack(const EllpackMatrix<Scalar>& a, std::span<const Scalar> x, std::span<Scalar> y) {
  if (x.size() != a.num_cols || y.size() != a.num_rows) {
    throw std::invalid_argument("spmv_ellpack: dimension mismatch");
  }
  std::fill(y.begin(), y.end(), Scalar{0});
  // Pad slots contribute 0 * x[0]; the kernel walks every slot.
  for (std::size_t slot = 0; slot < a.slots_per_row; ++slot) {
    const std::size_t base = slot * a.num_rows;
    for (std::size_t row = 0; row < a.num_rows; ++row) {
      y[row] += a.values[base + row] * x[a.columns[base + row]];
    }
  }
}

template <class Scalar>
std::vector<Scalar> spmv_ellpack(const EllpackMatrix<Scalar>& a, const std::vector<Scalar>& x) {
  std::vector<Scalar> y(a.num_rows);
  spmv_ellpack(a, std::span<const Scalar>(x), std::span<Scalar>(y));
  return y;
}

/// Accumulates v * x[col] into y[row] for each triplet, in array order.
template <class Scalar>
void spmv_coo(const CooArrays<Scalar>& a, std::span<const Scalar> x, std::span<Scalar> y) {
  for (std::size_t i = 0; i < a.nnz(); ++i) {
    if (a.rows[i] >= y.size() || a.columns[i] >= x.size()) {
      throw std::invalid_argument("spmv_coo: entry outside x/y dimensions");
    }
    y[a.rows[i]] += a.values[i] * x[a.columns[i]];
  }
}

/// Storage-word cost of a hybrid split at ELLPACK width k: an ELLPACK slot is
/// two words (value + column), a coordinate entry three (value + row + column).
inline std::size_t hybrid_split_cost(std::span<const std::size_t> row_lens, std::size_t k) {
  std::size_t overflow = 0;
  for (std::size_t len : row_lens) overflow += len > k ? len - k : 0;
  return 2 * row_lens.size() * k + 3 * overflow;
}

/// Width minimizing hybrid_split_cost over k in [0, max row length];
/// the smallest k wins ties.
inline std::size_t choose_ell_width(std::span<const std::size_t> row_lens) {
  std::size_t max_len = 0;
  for (std::size_t len : row_lens) max_len = std::max(max_len, len);
  std::size_t best_k = 0;
  std::size_t best_cost = hybrid_split_cost(row_lens, 0);
  for (std::size_t k = 1; k <= max_len; ++k) {
    const std::size_t cost = hybrid_split_cost(row_lens, k);
    if (cost < best_cost) {
      best_cost = cost;
      best_k = k;
    }
  }
  return best_k;
}

/// The ELLPACK part takes each row's first min(len, k1) entries in column
/// order; the rest spill to coordinates. Defaults k1 to choose_ell_width.
template <class Scalar = double>
HybridMatrix<Scalar> build_hybrid(const TripletMatrix& m,
                                  std::optional<std::size_t> k1 = std::nullopt) {
  const auto lens = row_lengths(m);
  std::size_t max_len = 0;
  for (std::size_t len : lens) max_len = std::max(max_len, len);
  const std::size_t width = k1.value_or(choose_ell_width(lens));
  if (width > max_len) {
    throw std::invalid_argument("build_hybrid: k1 " + std::to_string(width) +
                                " exceeds the maximum row length " + std::to_string(max_len));
  }

  HybridMatrix<Scalar> h;
  h.ell.num_rows = m.num_rows();
  h.ell.num_cols = m.num_cols();
  h.ell.slots_per_row = width;
  h.ell.values.assign(m.num_rows() * width, Scalar{0});
  h.ell.columns.assign(m.num_rows() * width, 0);

  std::vector<std::size_t> filled(m.num_rows(), 0);
  for (const Entry& e : m.entries()) {
    const std::size_t pos = filled[e.row]++;
    if (pos < width) {
      const std::size_t idx = h.ell.slot_index(e.row, pos);
      h.ell.values[idx] = static_cast<Scalar>(e.value);
      h.ell.columns[idx] = e.col;
    } else {
      h.coo.rows.push_back(e.row);
      h.coo.columns.push_back(e.col);
      h.coo.values.push_back(static_cast<Scalar>(e.value));
    }
  }
  return h;
}

/// ELLPACK phase writes y, coordinate phase accumulates the overflow.
template <class Scalar>
void spmv_hybrid(const HybridMatrix<Scalar>& h, std::span<const Scalar> x, std::span<Scalar> y) {
  spmv_ellpack(h.ell, x, y);
  spmv_coo(h.coo, x, y);
}

template <class Scalar>
std::vector<Scalar> spmv_hybrid(const HybridMatrix<Scalar>& h, const std::vector<Scalar>& x) {
  std::vector<Scalar> y(h.ell.num_rows);
  spmv_hybrid(h, std::span<const Scalar>(x), std::span<Scalar>(y));
  return y;
}

template <class Scalar>
TripletMatrix to_triplets(const EllpackMatrix<Scalar>& a) {
  std::vector<Entry> entries;
  for (std::size_t row = 0; row < a.num_rows; ++row) {
    const std::size_t len = ell_row_length(a, row);
    for (std::size_t slot = 0; slot < len; ++slot) {
      const std::size_t idx = a.slot_index(row, slot);
      entries.push_back(
          {static_cast<index_t>(row), a.columns[idx], static_cast<double>(a.values[idx])});
    }
  }
  return TripletMatrix(a.num_rows, a.num_cols, std::move(entries));
}

template <class Scalar>
TripletMatrix to_triplets(const HybridMatrix<Scalar>& h) {
  std::vector<Entry> entries = to_triplets(h.ell).entries();
  for (std::size_t i = 0; i < h.coo.nnz(); ++i) {
    entries.push_back({h.coo.rows[i], h.coo.columns[i], static_cast<double>(h.coo.values[i])});
  }
  return canonicalize(std::move(entries), h.ell.num_rows, h.ell.num_cols);
}

}  // namespace spmvkit
