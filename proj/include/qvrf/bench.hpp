// Copyright 2026 The qvrf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qvrf/resources.hpp"

namespace qvrf {

// 32-byte key seed plus 64-byte proof nonce.
inline constexpr std::uint64_t kEntropyPerOp = 96;

enum class BenchSource { file_qrng, system_rand };
enum class PoolMode { unbuffered, pooled };

std::string_view to_string(BenchSource s);
std::string_view to_string(PoolMode m);
std::optional<BenchSource> parse_bench_source(std::string_view s);
std::optional<PoolMode> parse_pool_mode(std::string_view s);

struct BenchConfig {
  std::uint64_t n_ops = 10000;
  BenchSource source = BenchSource::system_rand;
  std::optional<std::filesystem::path> entropy_path;
  PoolMode pool_mode = PoolMode::unbuffered;
  std::size_t block_size = 4096;
  unsigned workers = 1;
  std::uint64_t sample_interval = 100;
  std::size_t message_bytes = 32;
  std::uint64_t warmup_ops = 100;
  // CSV prefix; files are <prefix>.ops.csv and <prefix>.res.csv.
  std::optional<std::filesystem::path> output_path;
  bool log_progress = true;
  // Messages come from a PRNG so they draw nothing from the entropy source.
  std::optional<std::uint64_t> message_seed;
  std::shared_ptr<ProcessProbe> probe;

  // Throws std::invalid_argument.
  void validate() const;
};

// Reads a JSON object whose keys mirror the BenchConfig fields. Throws
// std::invalid_argument on unknown keys or bad values.
BenchConfig load_bench_config(const std::filesystem::path& path);
BenchConfig bench_config_from_json(std::string_view json_text);

struct BenchRecord {
  std::uint64_t op_index = 0;
  std::int64_t keygen_us = 0;
  std::int64_t eval_us = 0;
  std::int64_t verify_us = 0;
  std::int64_t total_us = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

enum class RunStatus { completed, entropy_exhausted, corrupt_run };
std::string_view to_string(RunStatus s);

struct BenchResult {
  std::vector<BenchRecord> records;  // ordered by op_index
  std::vector<ResourceSample> samples;
  RunStatus status = RunStatus::completed;
  std::string error;
  // Measured-op index at which the run aborted.
  std::optional<std::uint64_t> failed_op;
  // Bytes handed to keygen and prove, warmup included.
  std::uint64_t entropy_bytes_consumed = 0;
  // Bytes read from the entropy file (differs from the above in pooled
  // mode, where whole blocks are read ahead). Zero for the system source.
  std::uint64_t source_bytes_read = 0;
  double wall_seconds = 0;
  std::uint64_t n_ops = 0;
  BenchSource source = BenchSource::system_rand;
  PoolMode pool_mode = PoolMode::unbuffered;
  unsigned workers = 1;

  bool ok() const { return status == RunStatus::completed; }
  double throughput() const;  // measured ops per second
};

// Runs warmup_ops then n_ops iterations of keygen, prove and verify.
// Entropy exhaustion and failed verification end the run early with the
// matching status; records completed so far are kept and, if output_path
// is set, written out. Setup errors (missing file, bad config) throw.
// Progress lines go to `log` when config.log_progress is set.
BenchResult run_benchmark(const BenchConfig& config);
BenchResult run_benchmark(const BenchConfig& config, std::ostream& log);

// CSV files

std::filesystem::path ops_csv_path(const std::filesystem::path& prefix);
std::filesystem::path res_csv_path(const std::filesystem::path& prefix);

// Truncates existing files. Throws WriteFailed.
void write_csv(const std::vector<BenchRecord>& records,
               const std::vector<ResourceSample>& samples,
               const std::filesystem::path& prefix);

// Throw std::runtime_error on a missing file, wrong header or bad row.
std::vector<BenchRecord> read_ops_csv(const std::filesystem::path& path);
std::vector<ResourceSample> read_res_csv(const std::filesystem::path& path);

// Statistics

enum class Metric { keygen_us, eval_us, verify_us, total_us, mem_bytes, cpu_pct };
inline constexpr std::array<Metric, 6> kAllMetrics = {
    Metric::keygen_us, Metric::eval_us,   Metric::verify_us,
    Metric::total_us,  Metric::mem_bytes, Metric::cpu_pct};
std::string_view to_string(Metric m);

struct MetricStats {
  std::size_t count = 0;
  std::int64_t min = 0;
  std::int64_t p25 = 0;
  std::int64_t median = 0;
  std::int64_t p75 = 0;
  std::int64_t p95 = 0;
  std::int64_t p99 = 0;
  std::int64_t max = 0;
  std::int64_t iqr = 0;

  friend bool operator==(const MetricStats&, const MetricStats&) = default;
};

// Nearest-rank: the p-th percentile is the ceil(p/100 * N)-th smallest.
std::int64_t nearest_rank(const std::vector<std::int64_t>& sorted, double p);
// Throws NoData on empty input.
MetricStats order_stats(std::vector<std::int64_t> values);

struct BenchSummary {
  std::uint64_t n_ops = 0;
  double throughput = 0;
  std::string source_kind;
  std::string pool_mode;
  // Resource metrics are empty when no sample carried a real value.
  std::array<std::optional<MetricStats>, kAllMetrics.size()> metrics;

  const std::optional<MetricStats>& get(Metric m) const {
    return metrics[static_cast<std::size_t>(m)];
  }
  std::optional<MetricStats>& get(Metric m) {
    return metrics[static_cast<std::size_t>(m)];
  }
  std::string to_text() const;

  friend bool operator==(const BenchSummary&, const BenchSummary&) = default;
};

// Throws NoData on empty records. Samples equal to -1 are skipped.
BenchSummary summarize(const std::vector<BenchRecord>& records,
                       const std::vector<ResourceSample>& samples = {});
BenchSummary summarize(const BenchResult& result);

struct MetricComparison {
  Metric metric = Metric::keygen_us;
  // NaN when a side lacks the metric; 1.0 when both sides are zero.
  double median_ratio = 0;
  double iqr_ratio = 0;
  bool qrng_more_variable = false;
};

struct ComparisonReport {
  std::uint64_t n_ops = 0;
  std::vector<MetricComparison> metrics;  // in kAllMetrics order

  const MetricComparison& get(Metric m) const;
  std::string to_text() const;
  std::string to_json() const;
};

// qrng over rand. Throws IncomparableRuns when n_ops differ.
ComparisonReport compare_sources(const BenchSummary& qrng,
                                 const BenchSummary& rand);

struct ThroughputAb {
  double ratio = 0;  // pooled / unbuffered
  double unbuffered_ops_per_s = 0;
  double pooled_ops_per_s = 0;
  BenchResult unbuffered;
  BenchResult pooled;
};

// Runs both configs to completion. Throws IncomparableRuns when n_ops,
// source or entropy file differ, and CorruptRun / EntropyExhausted if
// either run does not complete.
ThroughputAb throughput_ab(const BenchConfig& unbuffered,
                           const BenchConfig& pooled);

}  // namespace qvrf
