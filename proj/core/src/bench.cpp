#include "spmvkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "spmvkit/bcsr.hpp"
#include "spmvkit/csr.hpp"
#include "spmvkit/ellpack.hpp"
#include "spmvkit/fill.hpp"
#include "spmvkit/rgcsr.hpp"
#include "spmvkit/synthetic.hpp"

namespace spmvkit {

namespace {

using clock_type = std::chrono::steady_clock;

double time_once(const std::function<void()>& fn, std::size_t inner) {
  const auto start = clock_type::now();
  for (std::size_t i = 0; i < inner; ++i) fn();
  const auto stop = clock_type::now();
  return std::chrono::duration<double>(stop - start).count() / static_cast<double>(inner);
}

double median_seconds(const std::function<void()>& fn, const BenchOptions& options) {
  // Tiny matrices run far below the clock resolution; calibrate an inner
  // loop so each repetition is long enough to time.
  std::size_t inner = 1;
  double probe = time_once(fn, inner);
  while (probe * static_cast<double>(inner) < options.target_rep_seconds && inner < (1u << 20)) {
    inner *= 8;
    probe = time_once(fn, inner);
  }
  std::vector<double> times(std::max<std::size_t>(options.repetitions, 1));
  for (double& t : times) t = time_once(fn, inner);
  std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
  return times[times.size() / 2];
}

template <class Scalar>
BenchRecord bench_precision(const TripletMatrix& m, const std::string& matrix_name,
                            FormatKind kind, std::optional<std::size_t> group_size,
                            Precision precision, const BenchOptions& options) {
  const std::vector<double> x_double = options.x_ones
                                           ? std::vector<double>(m.num_cols(), 1.0)
                                           : random_vector(m.num_cols(), options.seed);
  std::vector<Scalar> x(x_double.begin(), x_double.end());
  std::vector<Scalar> y(m.num_rows(), Scalar{0});

  // The oracle sees the same storage-precision inputs as the kernel, so the
  // checksum gap is accumulation rounding only.
  std::vector<double> x_ref(x.begin(), x.end());
  std::vector<Entry> quantized = m.entries();
  for (Entry& e : quantized) e.value = static_cast<double>(static_cast<Scalar>(e.value));
  const TripletMatrix m_ref(m.num_rows(), m.num_cols(), std::move(quantized));

  // Own the format instance via a captured shared state in the kernel lambda.
  std::function<void()> kernel;
  FillReport fill;
  switch (kind) {
    case FormatKind::Csr: {
      auto a = std::make_shared<CsrMatrix<Scalar>>(build_csr<Scalar>(m));
      fill = fill_report(*a);
      kernel = [a, &x, &y] { spmv_csr(*a, std::span<const Scalar>(x), std::span<Scalar>(y)); };
      break;
    }
    case FormatKind::Ellpack: {
      auto a = std::make_shared<EllpackMatrix<Scalar>>(build_ellpack<Scalar>(m));
      fill = fill_report(*a);
      kernel = [a, &x, &y] { spmv_ellpack(*a, std::span<const Scalar>(x), std::span<Scalar>(y)); };
      break;
    }
    case FormatKind::Hybrid: {
      auto a = std::make_shared<HybridMatrix<Scalar>>(build_hybrid<Scalar>(m, group_size));
      fill = fill_report(*a);
      kernel = [a, &x, &y] { spmv_hybrid(*a, std::span<const Scalar>(x), std::span<Scalar>(y)); };
      break;
    }
    case FormatKind::Bcsr: {
      auto a = std::make_shared<BcsrMatrix<Scalar>>(build_bcsr<Scalar>(m));
      fill = fill_report(*a, m.nnz());
      kernel = [a, &x, &y] { spmv_bcsr(*a, std::span<const Scalar>(x), std::span<Scalar>(y)); };
      break;
    }
    case FormatKind::Rgcsr: {
      auto a = std::make_shared<RgcsrMatrix<Scalar>>(build_rgcsr<Scalar>(m, group_size.value_or(32)));
      fill = fill_report(*a);
      kernel = [a, &x, &y] { spmv_rgcsr(*a, std::span<const Scalar>(x), std::span<Scalar>(y)); };
      break;
    }
    case FormatKind::Coo:
      throw std::invalid_argument("run_spmv_bench: coo is benchmarked as part of hybrid");
  }

  // Correctness gate before any timing.
  kernel();
  double checksum = 0.0;
  for (Scalar v : y) checksum += static_cast<double>(v);
  double checksum_ref = 0.0;
  for (double v : spmv_reference(m_ref, x_ref)) checksum_ref += v;
  const double tolerance = precision == Precision::Double ? 1e-10 : 1e-5;
  if (std::abs(checksum - checksum_ref) > tolerance * std::max(1.0, std::abs(checksum_ref))) {
    throw ChecksumError(std::string(format_name(kind)) + " checksum " + std::to_string(checksum) +
                        " disagrees with oracle " + std::to_string(checksum_ref) + " on " +
                        matrix_name);
  }

  BenchRecord record;
  record.matrix_name = matrix_name;
  record.format_name = std::string(format_name(kind));
  if (kind == FormatKind::Rgcsr) record.group_size = group_size.value_or(32);
  record.precision = precision;
  record.repetitions = options.repetitions;
  record.nnz = m.nnz();
  record.median_seconds = median_seconds(kernel, options);
  record.gflops = measured_gflops(m.nnz(), record.median_seconds);
  record.fill_percent = fill.fill_percent;
  record.artificial_zeros = fill.artificial_zeros;
  record.bytes = precision == Precision::Double ? fill.bytes_double : fill.bytes_single;
  record.checksum = checksum;
  return record;
}

}  // namespace

BenchRecord run_spmv_bench(const TripletMatrix& m, const std::string& matrix_name, FormatKind kind,
                           std::optional<std::size_t> group_size, Precision precision,
                           const BenchOptions& options) {
  return precision == Precision::Double
             ? bench_precision<double>(m, matrix_name, kind, group_size, precision, options)
             : bench_precision<float>(m, matrix_name, kind, group_size, precision, options);
}

}  // namespace spmvkit
