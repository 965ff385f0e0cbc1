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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qvrf/bench.hpp"
#include "qvrf/errors.hpp"

namespace qvrf {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::keygen_us: return "keygen_us";
    case Metric::eval_us: return "eval_us";
    case Metric::verify_us: return "verify_us";
    case Metric::total_us: return "total_us";
    case Metric::mem_bytes: return "mem_bytes";
    case Metric::cpu_pct: return "cpu_pct";
  }
  return "?";
}

std::int64_t nearest_rank(const std::vector<std::int64_t>& sorted, double p) {
  if (sorted.empty()) throw NoData("percentile of an empty sample");
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

MetricStats order_stats(std::vector<std::int64_t> values) {
  if (values.empty()) throw NoData("no values to summarize");
  std::sort(values.begin(), values.end());
  MetricStats s;
  s.count = values.size();
  s.min = values.front();
  s.max = values.back();
  s.p25 = nearest_rank(values, 25);
  s.median = nearest_rank(values, 50);
  s.p75 = nearest_rank(values, 75);
  s.p95 = nearest_rank(values, 95);
  s.p99 = nearest_rank(values, 99);
  s.iqr = s.p75 - s.p25;
  return s;
}

BenchSummary summarize(const std::vector<BenchRecord>& records,
                       const std::vector<ResourceSample>& samples) {
  if (records.empty()) throw NoData("no benchmark records");
  BenchSummary out;
  out.n_ops = records.size();

  auto column = [&](auto field) {
    std::vector<std::int64_t> v;
    v.reserve(records.size());
    for (const auto& r : records) v.push_back(r.*field);
    return order_stats(std::move(v));
  };
  out.get(Metric::keygen_us) = column(&BenchRecord::keygen_us);
  out.get(Metric::eval_us) = column(&BenchRecord::eval_us);
  out.get(Metric::verify_us) = column(&BenchRecord::verify_us);
  out.get(Metric::total_us) = column(&BenchRecord::total_us);

  auto sampled = [&](auto field) -> std::optional<MetricStats> {
    std::vector<std::int64_t> v;
    for (const auto& s : samples) {
      if (s.*field != kUnavailable) v.push_back(s.*field);
    }
    if (v.empty()) return std::nullopt;
    return order_stats(std::move(v));
  };
  out.get(Metric::mem_bytes) = sampled(&ResourceSample::mem_bytes);
  out.get(Metric::cpu_pct) = sampled(&ResourceSample::cpu_pct);
  return out;
}

BenchSummary summarize(const BenchResult& result) {
  BenchSummary s = summarize(result.records, result.samples);
  s.throughput = result.throughput();
  s.source_kind = std::string(to_string(result.source));
  s.pool_mode = std::string(to_string(result.pool_mode));
  return s;
}

std::string BenchSummary::to_text() const {
  std::ostringstream out;
  out << "source=" << (source_kind.empty() ? "-" : source_kind)
      << " pool=" << (pool_mode.empty() ? "-" : pool_mode) << " n_ops=" << n_ops
      << " throughput=" << std::fixed << std::setprecision(1) << throughput
      << " ops/s\n";
  out << std::left << std::setw(10) << "metric" << std::right;
  for (const char* h : {"min", "median", "p95", "p99", "max", "iqr"}) {
    out << std::setw(12) << h;
  }
  out << '\n';
  for (Metric m : kAllMetrics) {
    out << std::left << std::setw(10) << to_string(m) << std::right;
    const auto& s = get(m);
    if (!s) {
      out << std::setw(12) << "n/a" << '\n';
      continue;
    }
    for (std::int64_t v : {s->min, s->median, s->p95, s->p99, s->max, s->iqr}) {
      out << std::setw(12) << v;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

double ratio(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0) return 1.0;
  if (den == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num) / static_cast<double>(den);
}

nlohmann::json json_number(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

ComparisonReport compare_sources(const BenchSummary& qrng, const BenchSummary& rand) {
  if (qrng.n_ops != rand.n_ops) {
    throw IncomparableRuns("n_ops differ: " + std::to_string(qrng.n_ops) + " vs " +
                           std::to_string(rand.n_ops));
  }
  ComparisonReport report;
  report.n_ops = qrng.n_ops;
  for (Metric m : kAllMetrics) {
    MetricComparison c;
    c.metric = m;
    const auto& a = qrng.get(m);
    const auto& b = rand.get(m);
    if (a && b) {
      c.median_ratio = ratio(a->median, b->median);
      c.iqr_ratio = ratio(a->iqr, b->iqr);
      c.qrng_more_variable = a->iqr > b->iqr;
    } else {
      c.median_ratio = c.iqr_ratio = std::numeric_limits<double>::quiet_NaN();
    }
    report.metrics.push_back(c);
  }
  return report;
}

const MetricComparison& ComparisonReport::get(Metric m) const {
  for (const auto& c : metrics) {
    if (c.metric == m) return c;
  }
  throw NoData("metric missing from report");
}

std::string ComparisonReport::to_text() const {
  std::ostringstream out;
  out << "qrng vs rand, n_ops=" << n_ops << '\n';
  out << std::left << std::setw(10) << "metric" << std::right << std::setw(14)
      << "median_ratio" << std::setw(12) << "iqr_ratio" << std::setw(20)
      << "qrng_more_variable" << '\n';
  out << std::fixed << std::setprecision(3);
  for (const auto& c : metrics) {
    out << std::left << std::setw(10) << to_string(c.metric) << std::right
        << std::setw(14) << c.median_ratio << std::setw(12) << c.iqr_ratio
        << std::setw(20) << (c.qrng_more_variable ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string ComparisonReport::to_json() const {
  nlohmann::json j;
  j["n_ops"] = n_ops;
  j["metrics"] = nlohmann::json::array();
  for (const auto& c : metrics) {
    j["metrics"].push_back({{"metric", to_string(c.metric)},
                            {"median_ratio", json_number(c.median_ratio)},
                            {"iqr_ratio", json_number(c.iqr_ratio)},
                            {"qrng_more_variable", c.qrng_more_variable}});
  }
  return j.dump(2);
}

}  // namespace qvrf
