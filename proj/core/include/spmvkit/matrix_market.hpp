#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "spmvkit/triplet.hpp"

namespace spmvkit {

/// Parse failure with the 1-based line number of the offending input line.
class MatrixMarketError : public std::runtime_error {
 public:
  MatrixMarketError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads the coordinate Matrix Market variant. Accepted banner:
///   %%MatrixMarket matrix coordinate {real|integer|pattern} {general|symmetric}
/// Pattern entries get value 1.0; symmetric storage is expanded (an
/// off-diagonal entry also emits its mirror); indices are converted to
/// 0-based. The result is canonical: sorted and duplicate coordinates summed.
TripletMatrix parse_matrix_market(std::istream& in);

TripletMatrix load_matrix_market(const std::filesystem::path& path);

/// Writes a `real general` coordinate file that parses back to `m` exactly.
void write_matrix_market(std::ostream& out, const TripletMatrix& m);

void save_matrix_market(const std::filesystem::path& path, const TripletMatrix& m);

}  // namespace spmvkit
