#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spmvkit/csr.hpp"
#include "spmvkit/ellpack.hpp"
#include "spmvkit/rgcsr.hpp"
#include "spmvkit/triplet.hpp"

namespace spmvkit {

enum class Precision { Single, Double };

inline std::size_t scalar_bytes(Precision p) { return p == Precision::Single ? 4 : 8; }

/// Global-memory access model: memory moves in aligned segments, fed to
/// half-warps of lockstep threads. A half-warp step costs one transaction per
/// distinct segment its active threads touch.
struct AccessModel {
  std::size_t segment_bytes = 128;  // power of two
  std::size_t half_warp = 16;
  std::size_t warp = 32;
  std::size_t index_bytes = 4;
  double bandwidth_gb_s = 141.0;
};

/// Number of distinct aligned segments covered by one half-warp step's
/// element addresses. Elements are size-aligned, so none straddles a segment.
std::size_t count_segment_transactions(std::span<const std::uint64_t> addresses,
                                       const AccessModel& model);

/// Simulated transaction counts per kernel array. min_possible is the
/// transaction count a perfectly packed layout would need for the same bytes
/// (per half-warp step, per array); efficiency = min_possible / transactions.
struct TransactionReport {
  struct ArrayCounts {
    std::uint64_t transactions = 0;
    std::uint64_t min_possible = 0;
  };
  ArrayCounts values;
  ArrayCounts columns;
  ArrayCounts x;
  ArrayCounts output;

  /// Every x-element read, in simulation order (groups ascending, steps
  /// within a group, threads within a step). Input for the cache simulation.
  std::vector<index_t> x_trace;

  std::uint64_t total_transactions() const {
    return values.transactions + columns.transactions + x.transactions + output.transactions;
  }
  std::uint64_t total_min_possible() const {
    return values.min_possible + columns.min_possible + x.min_possible + output.min_possible;
  }
  double coalescing_efficiency() const {
    const std::uint64_t total = total_transactions();
    return total == 0 ? 1.0
                      : static_cast<double>(total_min_possible()) / static_cast<double>(total);
  }
};

/// Replays the address streams of the one-thread-per-row kernels. Threads map
/// to half-warps in row order (for RgCSR, within each group, matching a block
/// per group); a thread whose row is exhausted issues no address.
TransactionReport simulate_spmv_traffic(const CsrMatrix<double>& a, const AccessModel& model,
                                        Precision precision);
TransactionReport simulate_spmv_traffic(const EllpackMatrix<double>& a, const AccessModel& model,
                                        Precision precision);
TransactionReport simulate_spmv_traffic(const RgcsrMatrix<double>& a, const AccessModel& model,
                                        Precision precision);

/// Read-only cache for the input vector: fully associative LRU over lines of
/// line_bytes. The hardware parameters are not publicly documented, so the
/// defaults make comparisons qualitative rather than bit-matched.
struct CacheConfig {
  std::size_t line_bytes = 128;
  std::size_t num_lines = 64;
};

struct CacheReport {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

/// Throws std::invalid_argument for a zero-capacity cache.
CacheReport simulate_texture_cache(std::span<const index_t> x_trace, const CacheConfig& cache,
                                   std::size_t element_bytes);

/// Bandwidth-bound upper bound on SpMV throughput. Each stored nonzero costs
/// two flops and moves one 4-byte column index, one value, and (unless x is
/// assumed cached) one x element; all other arrays are ignored.
struct PeakEstimate {
  Precision precision = Precision::Single;
  bool cached_x = false;
  std::size_t bytes_per_nnz = 0;
  double gflops = 0.0;
};

PeakEstimate peak_performance(const AccessModel& model, Precision precision, bool cached_x);

/// 2 * nnz / seconds / 1e9. Throws std::invalid_argument unless seconds > 0.
double measured_gflops(std::size_t nnz, double seconds);

}  // namespace spmvkit
