#pragma once

#include <string>

#include "spmvkit/bcsr.hpp"
#include "spmvkit/csr.hpp"
#include "spmvkit/ellpack.hpp"
#include "spmvkit/rgcsr.hpp"
#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// Storage accounting for one format instance. artificial_zeros counts pad
/// slots (zero for CSR and coordinate storage, which store nothing extra);
/// fill_percent is 100 * artificial_zeros / nnz, so 100% filling means as
/// many pad zeros as real entries. Byte footprints include every index and
/// pointer array at 4 bytes per index, with 4- or 8-byte scalars.
struct FillReport {
  std::string format_name;
  std::size_t stored_slots = 0;
  std::size_t nnz = 0;
  std::size_t artificial_zeros = 0;
  double fill_percent = 0.0;
  std::size_t bytes_single = 0;
  std::size_t bytes_double = 0;
};

namespace detail {

constexpr std::size_t kIndexBytes = 4;

inline double fill_percent(std::size_t artificial_zeros, std::size_t nnz) {
  if (nnz == 0) return 0.0;
  return 100.0 * static_cast<double>(artificial_zeros) / static_cast<double>(nnz);
}

inline FillReport make_report(std::string name, std::size_t slots, std::size_t nnz,
                              std::size_t index_words) {
  FillReport r;
  r.format_name = std::move(name);
  r.stored_slots = slots;
  r.nnz = nnz;
  r.artificial_zeros = slots - nnz;
  r.fill_percent = fill_percent(r.artificial_zeros, nnz);
  r.bytes_single = slots * 4 + index_words * kIndexBytes;
  r.bytes_double = slots * 8 + index_words * kIndexBytes;
  return r;
}

}  // namespace detail

template <class Scalar>
FillReport fill_report(const CsrMatrix<Scalar>& a) {
  return detail::make_report("csr", a.nnz(), a.nnz(), a.nnz() + a.row_pointers.size());
}

template <class Scalar>
FillReport fill_report(const CooArrays<Scalar>& a) {
  return detail::make_report("coo", a.nnz(), a.nnz(), 2 * a.nnz());
}

template <class Scalar>
FillReport fill_report(const EllpackMatrix<Scalar>& a) {
  return detail::make_report("ellpack", a.slot_count(), ell_nnz(a), a.slot_count());
}

template <class Scalar>
FillReport fill_report(const HybridMatrix<Scalar>& h) {
  const std::size_t slots = h.ell.slot_count() + h.coo.nnz();
  const std::size_t nnz = ell_nnz(h.ell) + h.coo.nnz();
  return detail::make_report("hybrid", slots, nnz, h.ell.slot_count() + 2 * h.coo.nnz());
}

template <class Scalar>
FillReport fill_report(const BcsrMatrix<Scalar>& a, std::size_t nnz) {
  return detail::make_report("bcsr", a.slot_count(), nnz,
                             a.num_blocks() + a.block_row_pointers.size());
}

/// Blocked storage cannot tell stored zeros from padding, so the source nnz
/// must be supplied; this overload recounts nonzero slots instead.
template <class Scalar>
FillReport fill_report(const BcsrMatrix<Scalar>& a) {
  std::size_t nnz = 0;
  for (const Scalar& v : a.block_values) nnz += v != Scalar{0} ? 1 : 0;
  return fill_report(a, nnz);
}

template <class Scalar>
FillReport fill_report(const RgcsrMatrix<Scalar>& a) {
  std::size_t nnz = 0;
  for (index_t len : a.row_lengths) nnz += len;
  return detail::make_report("rgcsr", a.slot_count(), nnz,
                             a.slot_count() + a.group_pointers.size() + a.row_lengths.size());
}

}  // namespace spmvkit
