// spmvkit command line driver: inspect | bench | simulate | reorder.
//
// Exit code 0 on success, 1 on any parse, configuration or checksum failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "spmvkit/spmvkit.hpp"

namespace {

using nlohmann::json;
using namespace spmvkit;

struct MatrixInput {
  std::string name;
  TripletMatrix matrix;
};

// Inputs are Matrix Market paths or seeded synthetic specs:
//   synth:random:<rows>x<cols>:<density>
//   synth:banded:<rows>:<half bandwidth>
MatrixInput load_input(const std::string& spec, std::uint64_t seed) {
  if (spec.starts_with("synth:")) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos != std::string::npos) {
      const std::size_t next = spec.find(':', pos);
      parts.push_back(spec.substr(pos, next == std::string::npos ? next : next - pos));
      pos = next == std::string::npos ? next : next + 1;
    }
    if (parts.size() == 4 && parts[1] == "random") {
      const std::size_t cross = parts[2].find('x');
      if (cross == std::string::npos) throw std::runtime_error("bad synth spec: " + spec);
      RandomMatrixSpec rm;
      rm.rows = std::stoul(parts[2].substr(0, cross));
      rm.cols = std::stoul(parts[2].substr(cross + 1));
      rm.density = std::stod(parts[3]);
      rm.integer_values = false;
      rm.value_min = -1;
      rm.value_max = 1;
      return {spec, random_matrix(rm, seed)};
    }
    if (parts.size() == 4 && parts[1] == "banded") {
      return {spec, banded_matrix(std::stoul(parts[2]), std::stoul(parts[3]), seed)};
    }
    throw std::runtime_error("bad synth spec: " + spec +
                             " (use synth:random:RxC:density or synth:banded:N:B)");
  }
  return {std::filesystem::path(spec).stem().string(), load_matrix_market(spec)};
}

TripletMatrix drop_stored_zeros(const TripletMatrix& m) {
  std::vector<Entry> kept;
  kept.reserve(m.nnz());
  for (const Entry& e : m.entries()) {
    if (e.value != 0.0) kept.push_back(e);
  }
  return TripletMatrix(m.num_rows(), m.num_cols(), std::move(kept));
}

// --ordering {none, descending, file:PATH}
TripletMatrix apply_ordering(const TripletMatrix& m, const std::string& ordering) {
  if (ordering == "none") return m;
  if (ordering == "descending") {
    return apply_permutation(m, descending_row_permutation(m), PermutationMode::RowsOnly);
  }
  if (ordering.starts_with("file:")) {
    return apply_permutation(m, load_permutation(ordering.substr(5)), PermutationMode::RowsOnly);
  }
  throw std::runtime_error("bad ordering '" + ordering + "' (none, descending or file:PATH)");
}

std::vector<FormatKind> parse_formats(const std::vector<std::string>& names) {
  std::vector<FormatKind> kinds;
  for (const std::string& name : names) {
    const auto kind = parse_format(name);
    if (!kind) throw std::runtime_error("unknown format '" + name + "'");
    kinds.push_back(*kind);
  }
  return kinds;
}

Precision parse_precision(const std::string& name) {
  if (name == "single") return Precision::Single;
  if (name == "double") return Precision::Double;
  throw std::runtime_error("bad precision '" + name + "' (single or double)");
}

const char* precision_name(Precision p) { return p == Precision::Single ? "single" : "double"; }

void print_fill(const FillReport& fill, std::optional<std::size_t> group) {
  std::string label = fill.format_name;
  if (group) label += "(g=" + std::to_string(*group) + ")";
  std::printf("  %-12s slots %8zu  artificial zeros %8zu  fill %8.2f%%  bytes %zu/%zu\n",
              label.c_str(), fill.stored_slots, fill.artificial_zeros, fill.fill_percent,
              fill.bytes_single, fill.bytes_double);
}

// ---------------------------------------------------------------- inspect

struct InspectArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> formats{"csr", "ellpack", "coo", "hybrid", "bcsr", "rgcsr"};
  std::vector<std::size_t> group_sizes{32, 64, 128, 256};
  std::string ordering = "none";
  std::uint64_t seed = 1;
  bool drop_zeros = false;
};

int run_inspect(const InspectArgs& args) {
  for (const std::string& input : args.inputs) {
    MatrixInput in = load_input(input, args.seed);
    if (args.drop_zeros) in.matrix = drop_stored_zeros(in.matrix);
    in.matrix = apply_ordering(in.matrix, args.ordering);
    const MatrixStats stats = matrix_stats(in.matrix);
    std::printf("%s: %zu x %zu, %zu nonzeros, density %.4f%%\n", in.name.c_str(), stats.num_rows,
                in.matrix.num_cols(), stats.nnz, stats.density_percent);
    std::printf("  row lengths: max %zu  mean %.3f  min %zu\n", stats.row_len_max,
                stats.row_len_mean, stats.row_len_min);
    for (const FormatKind kind : parse_formats(args.formats)) {
      switch (kind) {
        case FormatKind::Csr:
          print_fill(fill_report(build_csr(in.matrix)), std::nullopt);
          break;
        case FormatKind::Ellpack:
          print_fill(fill_report(build_ellpack(in.matrix)), std::nullopt);
          break;
        case FormatKind::Coo: {
          CooArrays<double> coo;
          for (const Entry& e : in.matrix.entries()) {
            coo.rows.push_back(e.row);
            coo.columns.push_back(e.col);
            coo.values.push_back(e.value);
          }
          print_fill(fill_report(coo), std::nullopt);
          break;
        }
        case FormatKind::Hybrid:
          print_fill(fill_report(build_hybrid(in.matrix)), std::nullopt);
          break;
        case FormatKind::Bcsr:
          print_fill(fill_report(build_bcsr(in.matrix), in.matrix.nnz()), std::nullopt);
          break;
        case FormatKind::Rgcsr:
          for (const std::size_t g : args.group_sizes) {
            print_fill(fill_report(build_rgcsr(in.matrix, g)), g);
          }
          break;
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> formats{"csr", "hybrid", "rgcsr"};
  std::vector<std::size_t> group_sizes{32, 64, 128, 256};
  std::vector<std::string> precisions{"double"};
  std::string ordering = "none";
  std::size_t reps = 20;
  std::uint64_t seed = 1;
  std::string out;
  std::string x_mode = "random";
  bool drop_zeros = false;
};

json record_json(const BenchRecord& r) {
  json j{{"matrix", r.matrix_name},
         {"format", r.format_name},
         {"group_size", nullptr},
         {"precision", precision_name(r.precision)},
         {"repetitions", r.repetitions},
         {"nnz", r.nnz},
         {"median_seconds", r.median_seconds},
         {"gflops", r.gflops},
         {"fill_percent", r.fill_percent},
         {"artificial_zeros", r.artificial_zeros},
         {"bytes", r.bytes},
         {"checksum", r.checksum}};
  if (r.group_size) j["group_size"] = *r.group_size;
  return j;
}

void write_records(const std::string& out_base, const std::vector<BenchRecord>& records) {
  std::ofstream csv(out_base + ".csv");
  if (!csv) throw std::runtime_error("cannot open " + out_base + ".csv for writing");
  csv << "matrix,format,group_size,precision,repetitions,nnz,median_seconds,gflops,"
         "fill_percent,artificial_zeros,bytes,checksum\n";
  char buf[160];
  for (const BenchRecord& r : records) {
    const std::string group = r.group_size ? std::to_string(*r.group_size) : "";
    std::snprintf(buf, sizeof buf, "%.9e,%.6f,%.6f", r.median_seconds, r.gflops, r.fill_percent);
    std::string numbers = buf;
    std::snprintf(buf, sizeof buf, "%.17g", r.checksum);
    csv << r.matrix_name << ',' << r.format_name << ',' << group << ','
        << precision_name(r.precision) << ',' << r.repetitions << ',' << r.nnz << ',' << numbers
        << ',' << r.artificial_zeros << ',' << r.bytes << ',' << buf << '\n';
  }
  json all = json::array();
  for (const BenchRecord& r : records) all.push_back(record_json(r));
  std::ofstream js(out_base + ".json");
  if (!js) throw std::runtime_error("cannot open " + out_base + ".json for writing");
  js << all.dump(2) << '\n';
}

int run_bench(const BenchArgs& args) {
  BenchOptions options;
  options.repetitions = args.reps;
  options.seed = args.seed;
  if (args.x_mode == "ones") {
    options.x_ones = true;
  } else if (args.x_mode != "random") {
    throw std::runtime_error("bad --x mode '" + args.x_mode + "' (random or ones)");
  }

  std::vector<BenchRecord> records;
  bool failed = false;
  for (const std::string& input : args.inputs) {
    MatrixInput in = load_input(input, args.seed);
    if (args.drop_zeros) in.matrix = drop_stored_zeros(in.matrix);
    in.matrix = apply_ordering(in.matrix, args.ordering);
    for (const FormatKind kind : parse_formats(args.formats)) {
      const std::vector<std::size_t> groups =
          kind == FormatKind::Rgcsr ? args.group_sizes : std::vector<std::size_t>{0};
      for (const std::size_t g : groups) {
        for (const std::string& prec : args.precisions) {
          try {
            const BenchRecord r = run_spmv_bench(
                in.matrix, in.name, kind,
                kind == FormatKind::Rgcsr ? std::optional<std::size_t>(g) : std::nullopt,
                parse_precision(prec), options);
            std::printf("%-20s %-8s %5s %-7s median %.3e s  %8.3f GFLOPS  fill %7.2f%%\n",
                        r.matrix_name.c_str(), r.format_name.c_str(),
                        r.group_size ? std::to_string(*r.group_size).c_str() : "-",
                        precision_name(r.precision), r.median_seconds, r.gflops, r.fill_percent);
            records.push_back(r);
          } catch (const ChecksumError& e) {
            std::fprintf(stderr, "checksum failure: %s\n", e.what());
            failed = true;
          }
        }
      }
    }
  }
  if (!args.out.empty()) write_records(args.out, records);
  return failed ? 1 : 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string input;
  std::string format = "rgcsr";
  std::size_t group_size = 32;
  std::string precision = "double";
  std::size_t cache_lines = 64;
  std::size_t cache_line_bytes = 128;
  std::string ordering = "none";
  std::uint64_t seed = 1;
  std::string out;
};

int run_simulate(const SimulateArgs& args) {
  MatrixInput in = load_input(args.input, args.seed);
  in.matrix = apply_ordering(in.matrix, args.ordering);
  const Precision precision = parse_precision(args.precision);
  const AccessModel model{};

  TransactionReport traffic;
  std::size_t artificial_zeros = 0;
  const auto kind = parse_format(args.format);
  if (kind == FormatKind::Csr) {
    const auto a = build_csr(in.matrix);
    traffic = simulate_spmv_traffic(a, model, precision);
    artificial_zeros = fill_report(a).artificial_zeros;
  } else if (kind == FormatKind::Ellpack) {
    const auto a = build_ellpack(in.matrix);
    traffic = simulate_spmv_traffic(a, model, precision);
    artificial_zeros = fill_report(a).artificial_zeros;
  } else if (kind == FormatKind::Rgcsr) {
    const auto a = build_rgcsr(in.matrix, args.group_size);
    traffic = simulate_spmv_traffic(a, model, precision);
    artificial_zeros = fill_report(a).artificial_zeros;
  } else {
    throw std::runtime_error("simulate supports csr, ellpack and rgcsr, not '" + args.format + "'");
  }

  const CacheConfig cache{args.cache_line_bytes, args.cache_lines};
  const CacheReport cache_report =
      simulate_texture_cache(traffic.x_trace, cache, scalar_bytes(precision));
  const PeakEstimate peak = peak_performance(model, precision, /*cached_x=*/true);

  json doc{{"matrix", in.name},
           {"format", args.format},
           {"precision", args.precision},
           {"nnz", in.matrix.nnz()},
           {"artificial_zeros", artificial_zeros},
           {"transactions",
            {{"values", traffic.values.transactions},
             {"columns", traffic.columns.transactions},
             {"x", traffic.x.transactions},
             {"output", traffic.output.transactions}}},
           {"min_possible", traffic.total_min_possible()},
           {"efficiency", traffic.coalescing_efficiency()},
           {"cache", {{"hits", cache_report.hits}, {"misses", cache_report.misses}}},
           {"peak", {{"bytes_per_nnz", peak.bytes_per_nnz}, {"gflops", peak.gflops}}}};
  if (kind == FormatKind::Rgcsr) doc["group_size"] = args.group_size;

  if (args.out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(args.out);
    if (!out) throw std::runtime_error("cannot open " + args.out + " for writing");
    out << doc.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- reorder

struct ReorderArgs {
  std::string input;
  std::string ordering;
  std::string out;
  std::vector<std::size_t> group_sizes{32, 64, 128, 256};
  std::uint64_t seed = 1;
  bool drop_zeros = false;
};

int run_reorder(const ReorderArgs& args) {
  if (args.ordering == "none") throw std::runtime_error("reorder needs descending or file:PATH");
  MatrixInput in = load_input(args.input, args.seed);
  if (args.drop_zeros) in.matrix = drop_stored_zeros(in.matrix);
  const TripletMatrix permuted = apply_ordering(in.matrix, args.ordering);
  save_matrix_market(args.out, permuted);
  std::printf("%s -> %s\n", in.name.c_str(), args.out.c_str());
  for (const std::size_t g : args.group_sizes) {
    const std::size_t before = fill_report(build_rgcsr(in.matrix, g)).artificial_zeros;
    const std::size_t after = fill_report(build_rgcsr(permuted, g)).artificial_zeros;
    std::printf("  g=%zu: artificial zeros %zu -> %zu\n", g, before, after);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse matrix storage format toolkit"};
  app.require_subcommand(1);

  InspectArgs inspect;
  CLI::App* cmd_inspect = app.add_subcommand("inspect", "matrix statistics and fill reports");
  cmd_inspect->add_option("matrix", inspect.inputs, "Matrix Market files or synth specs")
      ->required();
  cmd_inspect->add_option("--format", inspect.formats, "formats to report")->delimiter(',');
  cmd_inspect->add_option("--group-size", inspect.group_sizes, "rgcsr group sizes")
      ->delimiter(',');
  cmd_inspect->add_option("--ordering", inspect.ordering, "none, descending or file:PATH");
  cmd_inspect->add_option("--seed", inspect.seed, "seed for synthetic inputs");
  cmd_inspect->add_flag("--drop-stored-zeros", inspect.drop_zeros,
                        "drop explicitly stored zero entries");

  BenchArgs bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "wall-clock SpMV benchmark");
  cmd_bench->add_option("matrix", bench.inputs, "Matrix Market files or synth specs")->required();
  cmd_bench->add_option("--format", bench.formats, "formats to run")->delimiter(',');
  cmd_bench->add_option("--group-size", bench.group_sizes, "rgcsr group sizes")->delimiter(',');
  cmd_bench->add_option("--precision", bench.precisions, "single and/or double")->delimiter(',');
  cmd_bench->add_option("--ordering", bench.ordering, "none, descending or file:PATH");
  cmd_bench->add_option("--reps", bench.reps, "timed repetitions per record");
  cmd_bench->add_option("--seed", bench.seed, "seed for x and synthetic inputs");
  cmd_bench->add_option("--out", bench.out, "basename for <out>.csv and <out>.json");
  cmd_bench->add_option("--x", bench.x_mode, "input vector: random (seeded) or ones");
  cmd_bench->add_flag("--drop-stored-zeros", bench.drop_zeros,
                      "drop explicitly stored zero entries");

  SimulateArgs simulate;
  CLI::App* cmd_simulate =
      app.add_subcommand("simulate", "coalescing and texture cache simulation");
  cmd_simulate->add_option("matrix", simulate.input, "Matrix Market file or synth spec")
      ->required();
  cmd_simulate->add_option("--format", simulate.format, "csr, ellpack or rgcsr");
  cmd_simulate->add_option("--group-size", simulate.group_size, "rgcsr group size");
  cmd_simulate->add_option("--precision", simulate.precision, "single or double");
  cmd_simulate->add_option("--cache-lines", simulate.cache_lines, "texture cache lines");
  cmd_simulate->add_option("--cache-line-bytes", simulate.cache_line_bytes,
                           "texture cache line size");
  cmd_simulate->add_option("--ordering", simulate.ordering, "none, descending or file:PATH");
  cmd_simulate->add_option("--seed", simulate.seed, "seed for synthetic inputs");
  cmd_simulate->add_option("--out", simulate.out, "write the JSON report here");

  ReorderArgs reorder;
  CLI::App* cmd_reorder = app.add_subcommand("reorder", "write a row-permuted matrix");
  cmd_reorder->add_option("matrix", reorder.input, "Matrix Market file or synth spec")->required();
  cmd_reorder->add_option("--ordering", reorder.ordering, "descending or file:PATH")->required();
  cmd_reorder->add_option("--out", reorder.out, "output Matrix Market path")->required();
  cmd_reorder->add_option("--group-size", reorder.group_sizes, "group sizes for the fill delta")
      ->delimiter(',');
  cmd_reorder->add_option("--seed", reorder.seed, "seed for synthetic inputs");
  cmd_reorder->add_flag("--drop-stored-zeros", reorder.drop_zeros,
                        "drop explicitly stored zero entries");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_inspect->parsed()) return run_inspect(inspect);
    if (cmd_bench->parsed()) return run_bench(bench);
    if (cmd_simulate->parsed()) return run_simulate(simulate);
    if (cmd_reorder->parsed()) return run_reorder(reorder);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
