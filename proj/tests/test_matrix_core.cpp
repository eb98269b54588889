#include <doctest.h>

#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "spmvkit/matrix_market.hpp"
#include "spmvkit/triplet.hpp"

using namespace spmvkit;
using namespace spmvkit::testing;

TEST_SUITE_BEGIN("matrix_core");

TEST_CASE("canonicalize sorts entries") {
  const TripletMatrix m = canonicalize({{1, 0, 2.0}, {0, 0, 1.0}}, 2, 2);
  CHECK(m.entries() == std::vector<Entry>{{0, 0, 1.0}, {1, 0, 2.0}});
}

TEST_CASE("canonicalize sums duplicates") {
  const TripletMatrix m = canonicalize({{0, 0, 1.0}, {0, 0, 2.0}}, 1, 1);
  CHECK(m.entries() == std::vector<Entry>{{0, 0, 3.0}});
}

TEST_CASE("canonicalize keeps explicitly stored zeros") {
  const TripletMatrix m = canonicalize({{0, 1, 0.0}}, 1, 2);
  CHECK(m.nnz() == 1);
  CHECK(m.entries() == std::vector<Entry>{{0, 1, 0.0}});
}

TEST_CASE("canonicalize rejects out-of-bounds indices") {
  CHECK_THROWS_AS(canonicalize({{2, 0, 1.0}}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({{0, 2, 1.0}}, 2, 2), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TripletMatrix m = random_small(seed);
    const TripletMatrix again = canonicalize(m.entries(), m.num_rows(), m.num_cols());
    CHECK(again == m);
  }
}

TEST_CASE("TripletMatrix rejects non-canonical input") {
  CHECK_THROWS_AS(TripletMatrix(2, 2, {{1, 0, 1.0}, {0, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(TripletMatrix(2, 2, {{0, 0, 1.0}, {0, 0, 2.0}}), std::invalid_argument);
}

TEST_CASE("row_lengths") {
  CHECK(row_lengths(example_8x8()) == std::vector<std::size_t>{2, 1, 1, 1, 1, 2, 3, 2});
  CHECK(row_lengths(TripletMatrix(3, 3, {})) == std::vector<std::size_t>{0, 0, 0});
  const TripletMatrix dense =
      canonicalize({{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 1.0}}, 2, 2);
  CHECK(row_lengths(dense) == std::vector<std::size_t>{2, 2});
}

TEST_CASE("row_lengths sums to nnz") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const TripletMatrix m = random_small(seed);
    std::size_t total = 0;
    for (std::size_t len : row_lengths(m)) total += len;
    CHECK(total == m.nnz());
  }
}

TEST_CASE("matrix_stats on the example matrix") {
  const MatrixStats s = matrix_stats(example_8x8());
  CHECK(s.num_rows == 8);
  CHECK(s.nnz == 13);
  CHECK(s.row_len_max == 3);
  CHECK(s.row_len_mean == doctest::Approx(1.625));
  CHECK(s.row_len_min == 1);
  CHECK(s.density_percent == doctest::Approx(20.3125));
}

TEST_CASE("matrix_stats on the identity") {
  const MatrixStats s = matrix_stats(identity(4));
  CHECK(s.row_len_max == 1);
  CHECK(s.row_len_mean == doctest::Approx(1.0));
  CHECK(s.row_len_min == 1);
  CHECK(s.density_percent == doctest::Approx(25.0));
}

TEST_CASE("matrix_stats rejects a zero-row matrix") {
  CHECK_THROWS_AS(matrix_stats(TripletMatrix(0, 0, {})), std::invalid_argument);
}

TEST_CASE("spmv_reference on the example matrix") {
  const auto y = spmv_reference(example_8x8(), ones(8));
  CHECK(y == std::vector<double>{3, 3, 4, 5, 6, 15, 30, 25});
}

TEST_CASE("spmv_reference basics") {
  const std::vector<double> zero(8, 0.0);
  CHECK(spmv_reference(example_8x8(), zero) == std::vector<double>(8, 0.0));
  const std::vector<double> x{4, 5, 6};
  CHECK(spmv_reference(identity(3), x) == x);
  CHECK_THROWS_AS(spmv_reference(identity(3), ones(4)), std::invalid_argument);
}

TEST_CASE("spmv_reference is linear") {
  for (std::uint64_t seed = 40; seed < 50; ++seed) {
    const TripletMatrix m = random_small(seed);
    const auto x = random_vector(m.num_cols(), seed);
    const auto z = random_vector(m.num_cols(), seed + 1000);
    std::vector<double> combo(m.num_cols());
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = 2.0 * x[i] + 3.0 * z[i];
    const auto lhs = spmv_reference(m, combo);
    const auto yx = spmv_reference(m, x);
    const auto yz = spmv_reference(m, z);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      CHECK(close(lhs[i], 2.0 * yx[i] + 3.0 * yz[i]));
    }
  }
}

namespace {

TripletMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_market(in);
}

}  // namespace

TEST_CASE("parser reads a general real file") {
  const TripletMatrix m = parse(
      "%%MatrixMarket matrix coordinate real general\n"
      "2 2 2\n"
      "1 1 5.0\n"
      "2 2 7.0\n");
  CHECK(m.num_rows() == 2);
  CHECK(m.num_cols() == 2);
  CHECK(m.entries() == std::vector<Entry>{{0, 0, 5.0}, {1, 1, 7.0}});
}

TEST_CASE("parser expands symmetric storage") {
  const TripletMatrix m = parse(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "2 2 1\n"
      "2 1 3.0\n");
  CHECK(m.entries() == std::vector<Entry>{{0, 1, 3.0}, {1, 0, 3.0}});
}

TEST_CASE("parser gives pattern entries value one") {
  const TripletMatrix m = parse(
      "%%MatrixMarket matrix coordinate pattern general\n"
      "2 2 1\n"
      "1 2\n");
  CHECK(m.entries() == std::vector<Entry>{{0, 1, 1.0}});
}

TEST_CASE("parser handles comments, blank lines and integer field") {
  const TripletMatrix m = parse(
      "%%MatrixMarket matrix coordinate integer general\n"
      "% a comment\n"
      "\n"
      "2 2 1\n"
      "% another\n"
      "2 1 -3\n");
  CHECK(m.entries() == std::vector<Entry>{{1, 0, -3.0}});
}

TEST_CASE("parser keeps a symmetric diagonal entry single") {
  const TripletMatrix m = parse(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "2 2 2\n"
      "1 1 4.0\n"
      "2 1 3.0\n");
  CHECK(m.entries() == std::vector<Entry>{{0, 0, 4.0}, {0, 1, 3.0}, {1, 0, 3.0}});
}

TEST_CASE("symmetric file equals its hand-expanded general form") {
  const TripletMatrix sym = parse(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "3 3 3\n"
      "1 1 2.0\n"
      "3 1 5.0\n"
      "3 3 6.0\n");
  const TripletMatrix general = parse(
      "%%MatrixMarket matrix coordinate real general\n"
      "3 3 5\n"
      "1 1 2.0\n"
      "1 3 5.0\n"
      "3 1 5.0\n"
      "3 3 6.0\n"
      "2 2 0.0\n");
  // the explicit zero makes the general file differ; drop it for comparison
  const TripletMatrix general_min = parse(
      "%%MatrixMarket matrix coordinate real general\n"
      "3 3 4\n"
      "1 1 2.0\n"
      "1 3 5.0\n"
      "3 1 5.0\n"
      "3 3 6.0\n");
  CHECK(sym == general_min);
  CHECK(general.nnz() == 5);
}

TEST_CASE("parser rejections carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_matrix_market(in);
    } catch (const MatrixMarketError& e) {
      return e.line();
    }
    return 0;
  };

  CHECK(line_of("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n") == 1);
  CHECK(line_of("%%MatrixMarket matrix coordinate real hermitian\n1 1 1\n1 1 1\n") == 1);
  CHECK(line_of("%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 1\n") == 1);
  CHECK(line_of("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n") == 1);
  CHECK(line_of("%%MatrixMarket vector coordinate real general\n1 1 1\n1 1 1\n") == 1);
  CHECK(line_of("not a banner\n") == 1);
  // out-of-bounds index on entry line 3
  CHECK(line_of("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n") == 3);
  // missing value field
  CHECK(line_of("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1\n") == 3);
}

TEST_CASE("parser rejects entry count mismatches") {
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n"),
                  MatrixMarketError);
  CHECK_THROWS_AS(
      parse("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 1.0\n2 2 1.0\n"),
      MatrixMarketError);
}

TEST_CASE("parser rejects a rectangular symmetric header") {
  CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real symmetric\n2 3 1\n1 1 1.0\n"),
                  MatrixMarketError);
}

TEST_CASE("parser accepts CRLF input") {
  const TripletMatrix m = parse(
      "%%MatrixMarket matrix coordinate real general\r\n"
      "1 1 1\r\n"
      "1 1 9.5\r\n");
  CHECK(m.entries() == std::vector<Entry>{{0, 0, 9.5}});
}

TEST_CASE("writer output parses back to the same matrix") {
  for (std::uint64_t seed = 7; seed < 17; ++seed) {
    const TripletMatrix m = random_small(seed, /*allow_zero_values=*/true,
                                         /*integer_values=*/false);
    std::ostringstream out;
    write_matrix_market(out, m);
    CHECK(parse(out.str()) == m);
  }
}

TEST_SUITE_END();
