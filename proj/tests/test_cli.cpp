#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "spmvkit/fill.hpp"
#include "spmvkit/matrix_market.hpp"
#include "spmvkit/reorder.hpp"
#include "spmvkit/rgcsr.hpp"

using namespace spmvkit;
using namespace spmvkit::testing;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* cli_binary() { return std::getenv("SPMVKIT_CLI_BIN"); }

fs::path scratch_dir() {
  const fs::path dir =
      fs::temp_directory_path() / ("spmvkit_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path dir = scratch_dir();
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + cli_binary() + "\" " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_example_file() {
  const fs::path path = scratch_dir() / "example8.mtx";
  save_matrix_market(path, example_8x8());
  return path;
}

}  // namespace

#define REQUIRE_CLI()                                        \
  if (cli_binary() == nullptr) {                             \
    MESSAGE("SPMVKIT_CLI_BIN not set; skipping CLI checks"); \
    return;                                                  \
  }

TEST_SUITE_BEGIN("cli");

TEST_CASE("inspect reports stats and fills") {
  REQUIRE_CLI();
  const fs::path mtx = write_example_file();
  const RunResult r =
      run_cli("inspect " + mtx.string() + " --format rgcsr,ellpack,bcsr --group-size 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("8 x 8, 13 nonzeros") != std::string::npos);
  CHECK(r.out.find("max 3  mean 1.625  min 1") != std::string::npos);
  CHECK(std::regex_search(r.out, std::regex(R"(rgcsr\(g=4\)\s+slots\s+20\s+artificial zeros\s+7)")));
  CHECK(std::regex_search(r.out, std::regex(R"(ellpack\s+slots\s+24\s+artificial zeros\s+11)")));
  CHECK(std::regex_search(r.out, std::regex(R"(bcsr\s+slots\s+48\s+artificial zeros\s+35)")));
}

TEST_CASE("inspect of the identity reports zero fill for the row formats") {
  REQUIRE_CLI();
  const fs::path path = scratch_dir() / "identity.mtx";
  save_matrix_market(path, identity(8));
  const RunResult r = run_cli("inspect " + path.string() +
                              " --format csr,ellpack,coo,hybrid,rgcsr --group-size 2,4,8");
  CHECK(r.exit_code == 0);
  CHECK(!std::regex_search(r.out, std::regex(R"(artificial zeros\s+[1-9])")));
}

TEST_CASE("bench emits matching csv and json with the oracle checksum") {
  REQUIRE_CLI();
  const fs::path mtx = write_example_file();
  const fs::path base = scratch_dir() / "bench_out";
  const RunResult r = run_cli("bench " + mtx.string() +
                              " --format csr,rgcsr --group-size 4 --precision double"
                              " --reps 3 --x ones --out " + base.string());
  REQUIRE(r.exit_code == 0);

  const std::string csv = slurp(base.string() + ".csv");
  CHECK(csv.starts_with(
      "matrix,format,group_size,precision,repetitions,nnz,median_seconds,gflops,"
      "fill_percent,artificial_zeros,bytes,checksum\n"));

  const json records = json::parse(slurp(base.string() + ".json"));
  REQUIRE(records.size() == 2);
  std::size_t csv_rows = 0;
  for (std::size_t pos = csv.find('\n'); pos != std::string::npos; pos = csv.find('\n', pos + 1)) {
    ++csv_rows;
  }
  CHECK(csv_rows == records.size() + 1);

  for (const json& rec : records) {
    CHECK(rec["matrix"] == "example8");
    CHECK(rec["nnz"] == 13);
    CHECK(rec["repetitions"] == 3);
    // sum of [3,3,4,5,6,15,30,25] under the all-ones x
    CHECK(rec["checksum"].get<double>() == 91.0);
    // the gflops column is recomputable from the record
    const double expected = 2.0 * 13.0 / rec["median_seconds"].get<double>() / 1e9;
    CHECK(rec["gflops"].get<double>() == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(records[1]["format"] == "rgcsr");
  CHECK(records[1]["group_size"] == 4);
  CHECK(records[1]["artificial_zeros"] == 7);
  CHECK(records[0]["group_size"].is_null());
}

TEST_CASE("bench checksums are repetition independent") {
  REQUIRE_CLI();
  const fs::path mtx = write_example_file();
  const fs::path a = scratch_dir() / "reps1";
  const fs::path b = scratch_dir() / "reps20";
  CHECK(run_cli("bench " + mtx.string() + " --format csr --reps 1 --x ones --out " + a.string())
            .exit_code == 0);
  CHECK(run_cli("bench " + mtx.string() + " --format csr --reps 20 --x ones --out " + b.string())
            .exit_code == 0);
  const json ra = json::parse(slurp(a.string() + ".json"));
  const json rb = json::parse(slurp(b.string() + ".json"));
  CHECK(ra[0]["checksum"] == rb[0]["checksum"]);
}

TEST_CASE("simulate writes the report schema and is deterministic") {
  REQUIRE_CLI();
  const fs::path path = scratch_dir() / "identity32.mtx";
  save_matrix_market(path, identity(32));
  const fs::path out1 = scratch_dir() / "sim1.json";
  const fs::path out2 = scratch_dir() / "sim2.json";
  const std::string args = "simulate " + path.string() +
                           " --format rgcsr --group-size 32 --precision single --out ";
  CHECK(run_cli(args + out1.string()).exit_code == 0);
  CHECK(run_cli(args + out2.string()).exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));

  const json doc = json::parse(slurp(out1));
  CHECK(doc["transactions"]["values"] == 2);
  CHECK(doc["transactions"].contains("columns"));
  CHECK(doc["transactions"].contains("x"));
  CHECK(doc["transactions"].contains("output"));
  CHECK(doc["efficiency"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["min_possible"] == doc["transactions"]["values"].get<int>() +
                                   doc["transactions"]["columns"].get<int>() +
                                   doc["transactions"]["x"].get<int>() +
                                   doc["transactions"]["output"].get<int>());
  CHECK(doc["cache"].contains("hits"));
  CHECK(doc["cache"].contains("misses"));
  CHECK(doc["peak"]["bytes_per_nnz"] == 8);
  CHECK(doc["peak"]["gflops"].get<double>() == 35.25);
}

TEST_CASE("simulate reports the example matrix padding") {
  REQUIRE_CLI();
  const fs::path mtx = write_example_file();
  const fs::path rg = scratch_dir() / "rg.json";
  CHECK(run_cli("simulate " + mtx.string() + " --format rgcsr --group-size 4 --out " + rg.string())
            .exit_code == 0);
  CHECK(json::parse(slurp(rg))["artificial_zeros"] == 7);
}

TEST_CASE("simulated rgcsr traffic never exceeds csr at deployment group sizes") {
  REQUIRE_CLI();
  const fs::path rg = scratch_dir() / "rg64.json";
  const fs::path cs = scratch_dir() / "cs64.json";
  CHECK(run_cli("simulate synth:banded:64:2 --format rgcsr --group-size 32 --seed 3 --out " +
                rg.string())
            .exit_code == 0);
  CHECK(run_cli("simulate synth:banded:64:2 --format csr --seed 3 --out " + cs.string())
            .exit_code == 0);
  const json a = json::parse(slurp(rg));
  const json b = json::parse(slurp(cs));
  CHECK(a["transactions"]["values"].get<std::uint64_t>() <=
        b["transactions"]["values"].get<std::uint64_t>());
}

TEST_CASE("simulate rejects unsupported formats") {
  REQUIRE_CLI();
  const fs::path mtx = write_example_file();
  const RunResult r = run_cli("simulate " + mtx.string() + " --format bcsr");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("simulate supports") != std::string::npos);
}

TEST_CASE("reorder writes a permuted file and prints the fill delta") {
  REQUIRE_CLI();
  const fs::path mtx = write_example_file();
  const fs::path out = scratch_dir() / "sorted.mtx";
  const RunResult r = run_cli("reorder " + mtx.string() + " --ordering descending --out " +
                              out.string() + " --group-size 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("g=4: artificial zeros 7 -> 3") != std::string::npos);

  const TripletMatrix reparsed = load_matrix_market(out);
  const TripletMatrix m = example_8x8();
  CHECK(reparsed ==
        apply_permutation(m, descending_row_permutation(m), PermutationMode::RowsOnly));
}

TEST_CASE("reorder with an identity permutation file changes nothing") {
  REQUIRE_CLI();
  const fs::path mtx = write_example_file();
  const fs::path perm = scratch_dir() / "identity.perm";
  {
    std::ofstream p(perm);
    for (int i = 0; i < 8; ++i) p << i << '\n';
  }
  const fs::path out = scratch_dir() / "same.mtx";
  const RunResult r = run_cli("reorder " + mtx.string() + " --ordering file:" + perm.string() +
                              " --out " + out.string() + " --group-size 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("g=4: artificial zeros 7 -> 7") != std::string::npos);
  CHECK(load_matrix_market(out) == example_8x8());
}

TEST_CASE("parse failures exit nonzero with file context") {
  REQUIRE_CLI();
  const fs::path bad = scratch_dir() / "bad.mtx";
  {
    std::ofstream out(bad);
    out << "%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n";
  }
  const RunResult r = run_cli("inspect " + bad.string());
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("bad.mtx") != std::string::npos);
  CHECK(r.err.find("line 1") != std::string::npos);

  const RunResult missing = run_cli("inspect /nonexistent/no.mtx");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("bench accepts synthetic inputs") {
  REQUIRE_CLI();
  const RunResult r =
      run_cli("bench synth:banded:64:2 --format csr,hybrid --reps 2 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("synth:banded:64:2") != std::string::npos);
  CHECK(r.out.find("hybrid") != std::string::npos);
}

TEST_SUITE_END();
