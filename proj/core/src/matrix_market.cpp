#include "spmvkit/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace spmvkit {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

void strip_cr(std::string& s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

// Parses "row col [value]" from one entry line using strtol/strtod so that
// trailing garbage and missing fields are detected.
struct EntryLine {
  long row = 0;
  long col = 0;
  double value = 1.0;
};

EntryLine parse_entry_line(const std::string& line, bool has_value, std::size_t line_no) {
  EntryLine e;
  const char* p = line.c_str();
  char* end = nullptr;
  e.row = std::strtol(p, &end, 10);
  if (end == p) throw MatrixMarketError(line_no, "expected row index");
  p = end;
  e.col = std::strtol(p, &end, 10);
  if (end == p) throw MatrixMarketError(line_no, "expected column index");
  p = end;
  if (has_value) {
    e.value = std::strtod(p, &end);
    if (end == p) throw MatrixMarketError(line_no, "expected value");
    p = end;
  }
  while (*p == ' ' || *p == '\t') ++p;
  if (*p != '\0') throw MatrixMarketError(line_no, "trailing characters after entry");
  return e;
}

}  // namespace

TripletMatrix parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw MatrixMarketError(1, "empty input");
  ++line_no;
  strip_cr(line);

  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket") throw MatrixMarketError(line_no, "malformed banner: " + line);
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (object != "matrix") throw MatrixMarketError(line_no, "unsupported object '" + object + "'");
  if (format != "coordinate") {
    throw MatrixMarketError(line_no, "unsupported format '" + format + "' (only coordinate)");
  }
  if (field != "real" && field != "integer" && field != "pattern") {
    throw MatrixMarketError(line_no, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw MatrixMarketError(line_no, "unsupported symmetry '" + symmetry + "'");
  }
  const bool has_value = field != "pattern";
  const bool symmetric = symmetry == "symmetric";

  // Comment and blank lines, then the size line.
  std::size_t rows = 0, cols = 0, declared = 0;
  for (;;) {
    if (!std::getline(in, line)) throw MatrixMarketError(line_no + 1, "missing size line");
    ++line_no;
    strip_cr(line);
    if (!line.empty() && line[0] == '%') continue;
    if (blank(line)) continue;
    std::istringstream size_line(line);
    long long r = -1, c = -1, n = -1;
    size_line >> r >> c >> n;
    if (size_line.fail() || r < 0 || c < 0 || n < 0) {
      throw MatrixMarketError(line_no, "malformed size line: " + line);
    }
    rows = static_cast<std::size_t>(r);
    cols = static_cast<std::size_t>(c);
    declared = static_cast<std::size_t>(n);
    break;
  }
  if (symmetric && rows != cols) {
    throw MatrixMarketError(line_no, "symmetric matrix must be square");
  }

  std::vector<Entry> raw;
  raw.reserve(symmetric ? 2 * declared : declared);
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (!line.empty() && line[0] == '%') continue;
    if (blank(line)) continue;
    if (seen == declared) throw MatrixMarketError(line_no, "more entries than declared");
    const EntryLine e = parse_entry_line(line, has_value, line_no);
    if (e.row < 1 || static_cast<std::size_t>(e.row) > rows || e.col < 1 ||
        static_cast<std::size_t>(e.col) > cols) {
      throw MatrixMarketError(line_no, "index out of declared bounds");
    }
    const auto r = static_cast<index_t>(e.row - 1);
    const auto c = static_cast<index_t>(e.col - 1);
    raw.push_back({r, c, e.value});
    if (symmetric && r != c) raw.push_back({c, r, e.value});
    ++seen;
  }
  if (seen != declared) {
    throw MatrixMarketError(line_no, "declared " + std::to_string(declared) + " entries, found " +
                                         std::to_string(seen));
  }
  return canonicalize(std::move(raw), rows, cols);
}

TripletMatrix load_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_matrix_market(in);
  } catch (const MatrixMarketError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_matrix_market(std::ostream& out, const TripletMatrix& m) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.num_rows() << ' ' << m.num_cols() << ' ' << m.nnz() << '\n';
  char buf[64];
  for (const Entry& e : m.entries()) {
    std::snprintf(buf, sizeof buf, "%.17g", e.value);
    out << (e.row + 1) << ' ' << (e.col + 1) << ' ' << buf << '\n';
  }
}

void save_matrix_market(const std::filesystem::path& path, const TripletMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_matrix_market(out, m);
}

}  // namespace spmvkit
