#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// Row reordering: new row i is old row map[i]. The map is validated to be a
/// bijection on construction.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless map is a bijection on 0..n-1.
  explicit Permutation(std::vector<index_t> map);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  index_t operator[](std::size_t i) const noexcept { return map_[i]; }
  const std::vector<index_t>& map() const noexcept { return map_; }

  /// inverse()[old] = new.
  std::vector<index_t> inverse() const;

 private:
  std::vector<index_t> map_;
};

/// Rows sorted by decreasing nonzero count, ties broken by original index
/// (stable), so the output is deterministic.
Permutation descending_row_permutation(const TripletMatrix& m);

enum class PermutationMode {
  RowsOnly,   // only rows move: spmv(P*m, x)[i] == spmv(m, x)[map[i]]
  Symmetric,  // columns permuted by the same map (the usual AMD application)
};

/// Throws on a length mismatch, or on symmetric mode for a rectangular matrix.
TripletMatrix apply_permutation(const TripletMatrix& m, const Permutation& p, PermutationMode mode);

/// Reads one 0-based index per line and validates the bijection.
Permutation parse_permutation(std::istream& in);

Permutation load_permutation(const std::filesystem::path& path);

}  // namespace spmvkit
