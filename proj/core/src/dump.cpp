#include "spmvkit/dump.hpp"

#include <json.hpp>

namespace spmvkit {

namespace {

using nlohmann::json;

json base(const char* format, std::size_t rows, std::size_t cols) {
  return json{{"format", format}, {"numRows", rows}, {"numCols", cols}};
}

json coo_json(const CooArrays<double>& a) {
  json j{{"format", "coo"}};
  j["rows"] = a.rows;
  j["columns"] = a.columns;
  j["values"] = a.values;
  return j;
}

}  // namespace

std::string debug_json(const CsrMatrix<double>& a) {
  json j = base("csr", a.num_rows, a.num_cols);
  j["values"] = a.values;
  j["columns"] = a.columns;
  j["rowPointers"] = a.row_pointers;
  return j.dump(2);
}

std::string debug_json(const EllpackMatrix<double>& a) {
  json j = base("ellpack", a.num_rows, a.num_cols);
  j["slotsPerRow"] = a.slots_per_row;
  j["values"] = a.values;
  j["columns"] = a.columns;
  return j.dump(2);
}

std::string debug_json(const CooArrays<double>& a) { return coo_json(a).dump(2); }

std::string debug_json(const HybridMatrix<double>& a) {
  json j = base("hybrid", a.ell.num_rows, a.ell.num_cols);
  j["ell"] = json::parse(debug_json(a.ell));
  j["coo"] = coo_json(a.coo);
  return j.dump(2);
}

std::string debug_json(const BcsrMatrix<double>& a) {
  json j = base("bcsr", a.num_rows, a.num_cols);
  j["blockRows"] = a.block_rows;
  j["blockCols"] = a.block_cols;
  j["values"] = a.block_values;
  j["columns"] = a.block_column_index;
  j["rowPointers"] = a.block_row_pointers;
  return j.dump(2);
}

std::string debug_json(const RgcsrMatrix<double>& a) {
  json j = base("rgcsr", a.num_rows, a.num_cols);
  j["groupSize"] = a.group_size;
  j["values"] = a.values;
  j["columns"] = a.columns;
  j["groupPointers"] = a.group_pointers;
  j["rowLengths"] = a.row_lengths;
  return j.dump(2);
}

}  // namespace spmvkit
