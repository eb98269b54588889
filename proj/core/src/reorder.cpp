#include "spmvkit/reorder.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spmvkit {

Permutation::Permutation(std::vector<index_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (index_t v : map_) {
    if (v >= map_.size() || seen[v]) {
      throw std::invalid_argument("permutation is not a bijection on 0.." +
                                  std::to_string(map_.size() ? map_.size() - 1 : 0));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<index_t> map(n);
  std::iota(map.begin(), map.end(), index_t{0});
  return Permutation(std::move(map));
}

std::vector<index_t> Permutation::inverse() const {
  std::vector<index_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<index_t>(i);
  return inv;
}

Permutation descending_row_permutation(const TripletMatrix& m) {
  const auto lens = row_lengths(m);
  std::vector<index_t> map(m.num_rows());
  std::iota(map.begin(), map.end(), index_t{0});
  std::stable_sort(map.begin(), map.end(),
                   [&lens](index_t a, index_t b) { return lens[a] > lens[b]; });
  return Permutation(std::move(map));
}

TripletMatrix apply_permutation(const TripletMatrix& m, const Permutation& p,
                                PermutationMode mode) {
  if (p.size() != m.num_rows()) {
    throw std::invalid_argument("apply_permutation: permutation length " +
                                std::to_string(p.size()) + " does not match " +
                                std::to_string(m.num_rows()) + " rows");
  }
  if (mode == PermutationMode::Symmetric && m.num_rows() != m.num_cols()) {
    throw std::invalid_argument("apply_permutation: symmetric mode needs a square matrix");
  }
  const std::vector<index_t> inv = p.inverse();
  std::vector<Entry> entries = m.entries();
  for (Entry& e : entries) {
    e.row = inv[e.row];
    if (mode == PermutationMode::Symmetric) e.col = inv[e.col];
  }
  return canonicalize(std::move(entries), m.num_rows(), m.num_cols());
}

Permutation parse_permutation(std::istream& in) {
  std::vector<index_t> map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t pos = 0;
    long long v = -1;
    try {
      v = std::stoll(line, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("permutation line " + std::to_string(line_no) +
                                  ": expected an index, got '" + line + "'");
    }
    if (v < 0 || line.find_first_not_of(" \t", pos) != std::string::npos) {
      throw std::invalid_argument("permutation line " + std::to_string(line_no) +
                                  ": expected a single 0-based index, got '" + line + "'");
    }
    map.push_back(static_cast<index_t>(v));
  }
  return Permutation(std::move(map));
}

Permutation load_permutation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_permutation(in);
}

}  // namespace spmvkit
