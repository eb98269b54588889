#include "spmvkit/memsim.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spmvkit {

namespace {

void validate(const AccessModel& model) {
  if (model.segment_bytes == 0 || (model.segment_bytes & (model.segment_bytes - 1)) != 0) {
    throw std::invalid_argument("access model: segment_bytes must be a power of two");
  }
  if (model.half_warp == 0 || model.half_warp > model.warp) {
    throw std::invalid_argument("access model: need 0 < half_warp <= warp");
  }
}

// Tallies one half-warp step of one array: transactions = distinct segments
// touched, min_possible = segments a perfectly packed layout would need for
// the same distinct elements.
class StepTally {
 public:
  explicit StepTally(const AccessModel& model) : model_(model) {}

  void add(std::uint64_t element_address) { addresses_.push_back(element_address); }
  bool empty() const { return addresses_.empty(); }

  void flush(std::size_t element_bytes, TransactionReport::ArrayCounts& counts) {
    if (addresses_.empty()) return;
    counts.transactions += count_segment_transactions(addresses_, model_);
    std::sort(addresses_.begin(), addresses_.end());
    const auto last = std::unique(addresses_.begin(), addresses_.end());
    const std::size_t distinct = static_cast<std::size_t>(last - addresses_.begin());
    const std::size_t bytes = distinct * element_bytes;
    counts.min_possible += (bytes + model_.segment_bytes - 1) / model_.segment_bytes;
    addresses_.clear();
  }

 private:
  const AccessModel& model_;
  std::vector<std::uint64_t> addresses_;
};

struct StreamSimulator {
  StreamSimulator(const AccessModel& m, std::size_t vb) : model(m), value_bytes(vb) {}

  const AccessModel& model;
  std::size_t value_bytes;
  TransactionReport report;
  StepTally values_step{model};
  StepTally columns_step{model};
  StepTally x_step{model};

  void read_slot(std::uint64_t slot, index_t x_col) {
    values_step.add(slot * value_bytes);
    columns_step.add(slot * model.index_bytes);
    x_step.add(static_cast<std::uint64_t>(x_col) * value_bytes);
    report.x_trace.push_back(x_col);
  }

  void end_step() {
    values_step.flush(value_bytes, report.values);
    columns_step.flush(model.index_bytes, report.columns);
    x_step.flush(value_bytes, report.x);
  }

  // One y write per row, issued per half-warp after its compute steps.
  void write_outputs(std::size_t first_row, std::size_t rows) {
    StepTally out{model};
    for (std::size_t r = first_row; r < first_row + rows; ++r) {
      out.add(static_cast<std::uint64_t>(r) * value_bytes);
    }
    out.flush(value_bytes, report.output);
  }
};

}  // namespace

std::size_t count_segment_transactions(std::span<const std::uint64_t> addresses,
                                       const AccessModel& model) {
  validate(model);
  std::vector<std::uint64_t> segments;
  segments.reserve(addresses.size());
  for (std::uint64_t addr : addresses) segments.push_back(addr / model.segment_bytes);
  std::sort(segments.begin(), segments.end());
  const auto last = std::unique(segments.begin(), segments.end());
  return static_cast<std::size_t>(last - segments.begin());
}

TransactionReport simulate_spmv_traffic(const CsrMatrix<double>& a, const AccessModel& model,
                                        Precision precision) {
  validate(model);
  StreamSimulator sim{model, scalar_bytes(precision)};
  std::size_t max_len = 0;
  for (std::size_t r = 0; r < a.num_rows; ++r) {
    max_len = std::max<std::size_t>(max_len, a.row_pointers[r + 1] - a.row_pointers[r]);
  }
  for (std::size_t j = 0; j < max_len; ++j) {
    for (std::size_t first = 0; first < a.num_rows; first += model.half_warp) {
      const std::size_t rows = std::min(model.half_warp, a.num_rows - first);
      for (std::size_t t = 0; t < rows; ++t) {
        const std::size_t row = first + t;
        const std::size_t len = a.row_pointers[row + 1] - a.row_pointers[row];
        if (j < len) {
          const std::uint64_t slot = a.row_pointers[row] + j;
          sim.read_slot(slot, a.columns[slot]);
        }
      }
      sim.end_step();
    }
  }
  for (std::size_t first = 0; first < a.num_rows; first += model.half_warp) {
    sim.write_outputs(first, std::min(model.half_warp, a.num_rows - first));
  }
  return std::move(sim.report);
}

TransactionReport simulate_spmv_traffic(const EllpackMatrix<double>& a, const AccessModel& model,
                                        Precision precision) {
  validate(model);
  StreamSimulator sim{model, scalar_bytes(precision)};
  // Every thread walks all K slots; pad slots read value 0, column 0, x[0].
  for (std::size_t j = 0; j < a.slots_per_row; ++j) {
    for (std::size_t first = 0; first < a.num_rows; first += model.half_warp) {
      const std::size_t rows = std::min(model.half_warp, a.num_rows - first);
      for (std::size_t t = 0; t < rows; ++t) {
        const std::uint64_t slot = j * a.num_rows + (first + t);
        sim.read_slot(slot, a.columns[slot]);
      }
      sim.end_step();
    }
  }
  for (std::size_t first = 0; first < a.num_rows; first += model.half_warp) {
    sim.write_outputs(first, std::min(model.half_warp, a.num_rows - first));
  }
  return std::move(sim.report);
}

TransactionReport simulate_spmv_traffic(const RgcsrMatrix<double>& a, const AccessModel& model,
                                        Precision precision) {
  validate(model);
  StreamSimulator sim{model, scalar_bytes(precision)};
  for (std::size_t g = 0; g < a.num_groups(); ++g) {
    const std::size_t s = a.rows_in_group(g);
    const std::size_t base = a.group_pointers[g];
    const std::size_t width = s == 0 ? 0 : (a.group_pointers[g + 1] - base) / s;
    for (std::size_t j = 0; j < width; ++j) {
      for (std::size_t first = 0; first < s; first += model.half_warp) {
        const std::size_t rows = std::min(model.half_warp, s - first);
        for (std::size_t t = 0; t < rows; ++t) {
          const std::size_t row = g * a.group_size + first + t;
          if (j < a.row_lengths[row]) {
            const std::uint64_t slot = base + (first + t) + j * s;
            sim.read_slot(slot, a.columns[slot]);
          }
        }
        sim.end_step();
      }
    }
    for (std::size_t first = 0; first < s; first += model.half_warp) {
      sim.write_outputs(g * a.group_size + first, std::min(model.half_warp, s - first));
    }
  }
  return std::move(sim.report);
}

CacheReport simulate_texture_cache(std::span<const index_t> x_trace, const CacheConfig& cache,
                                   std::size_t element_bytes) {
  if (cache.line_bytes == 0 || cache.num_lines == 0) {
    throw std::invalid_argument("texture cache: zero capacity");
  }
  CacheReport report;
  std::vector<std::uint64_t> lines;  // most recently used last
  lines.reserve(cache.num_lines);
  for (index_t col : x_trace) {
    const std::uint64_t line = static_cast<std::uint64_t>(col) * element_bytes / cache.line_bytes;
    const auto it = std::find(lines.begin(), lines.end(), line);
    if (it != lines.end()) {
      ++report.hits;
      lines.erase(it);
    } else {
      ++report.misses;
      if (lines.size() == cache.num_lines) lines.erase(lines.begin());
    }
    lines.push_back(line);
  }
  return report;
}

PeakEstimate peak_performance(const AccessModel& model, Precision precision, bool cached_x) {
  PeakEstimate e;
  e.precision = precision;
  e.cached_x = cached_x;
  e.bytes_per_nnz = model.index_bytes + scalar_bytes(precision) * (cached_x ? 1 : 2);
  e.gflops = 2.0 * model.bandwidth_gb_s / static_cast<double>(e.bytes_per_nnz);
  return e;
}

double measured_gflops(std::size_t nnz, double seconds) {
  if (!(seconds > 0.0)) {
    throw std::invalid_argument("measured_gflops: seconds must be positive, got " +
                                std::to_string(seconds));
  }
  return 2.0 * static_cast<double>(nnz) / seconds / 1e9;
}

}  // namespace spmvkit
