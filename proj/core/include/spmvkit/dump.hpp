#pragma once

#include <string>

#include "spmvkit/bcsr.hpp"
#include "spmvkit/csr.hpp"
#include "spmvkit/ellpack.hpp"
#include "spmvkit/rgcsr.hpp"

namespace spmvkit {

/// JSON debug form of a format instance for golden-file tests: every array is
/// listed verbatim under the field names values, columns, rowPointers,
/// groupPointers, rowLengths (plus rows for coordinate storage).
std::string debug_json(const CsrMatrix<double>& a);
std::string debug_json(const EllpackMatrix<double>& a);
std::string debug_json(const CooArrays<double>& a);
std::string debug_json(const HybridMatrix<double>& a);
std::string debug_json(const BcsrMatrix<double>& a);
std::string debug_json(const RgcsrMatrix<double>& a);

}  // namespace spmvkit
