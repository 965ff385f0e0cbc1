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

#include "qvrf/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "qvrf/entropy.hpp"
#include "qvrf/errors.hpp"
#include "qvrf/vrf.hpp"

namespace qvrf {

std::string_view to_string(BenchSource s) {
  return s == BenchSource::file_qrng ? "file-qrng" : "system-rand";
}

std::string_view to_string(PoolMode m) {
  return m == PoolMode::pooled ? "pooled" : "unbuffered";
}

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::entropy_exhausted: return "entropy_exhausted";
    case RunStatus::corrupt_run: return "corrupt_run";
  }
  return "?";
}

std::optional<BenchSource> parse_bench_source(std::string_view s) {
  if (s == "file-qrng" || s == "file_qrng" || s == "qrng") return BenchSource::file_qrng;
  if (s == "system-rand" || s == "system_rand" || s == "rand") return BenchSource::system_rand;
  return std::nullopt;
}

std::optional<PoolMode> parse_pool_mode(std::string_view s) {
  if (s == "unbuffered") return PoolMode::unbuffered;
  if (s == "pooled") return PoolMode::pooled;
  return std::nullopt;
}

void BenchConfig::validate() const {
  if (n_ops < 1) throw std::invalid_argument("n_ops must be >= 1");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (sample_interval < 1) throw std::invalid_argument("sample_interval must be >= 1");
  if (pool_mode == PoolMode::pooled && block_size < 32)
    throw std::invalid_argument("block_size must be >= 32");
  if (source == BenchSource::file_qrng && !entropy_path)
    throw std::invalid_argument("file-qrng source needs entropy_path");
}

BenchConfig bench_config_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bench config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("bench config: expected an object");

  BenchConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "n_ops") c.n_ops = v.get<std::uint64_t>();
      else if (key == "source" || key == "source_kind") {
        auto s = parse_bench_source(v.get<std::string>());
        if (!s) throw std::invalid_argument("bench config: bad source " + v.dump());
        c.source = *s;
      } else if (key == "entropy_path") c.entropy_path = v.get<std::string>();
      else if (key == "pool_mode") {
        auto m = parse_pool_mode(v.get<std::string>());
        if (!m) throw std::invalid_argument("bench config: bad pool_mode " + v.dump());
        c.pool_mode = *m;
      } else if (key == "block_size") c.block_size = v.get<std::size_t>();
      else if (key == "workers") c.workers = v.get<unsigned>();
      else if (key == "sample_interval") c.sample_interval = v.get<std::uint64_t>();
      else if (key == "message_bytes") c.message_bytes = v.get<std::size_t>();
      else if (key == "output_path") c.output_path = v.get<std::string>();
      else if (key == "warmup_ops") c.warmup_ops = v.get<std::uint64_t>();
      else if (key == "message_seed") c.message_seed = v.get<std::uint64_t>();
      else throw std::invalid_argument("bench config: unknown key " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bench config: ") + e.what());
  }
  return c;
}

BenchConfig load_bench_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read bench config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return bench_config_from_json(text.str());
}

double BenchResult::throughput() const {
  return wall_seconds > 0 ? static_cast<double>(records.size()) / wall_seconds : 0.0;
}

namespace {

// Lets a pool sit on top of a reader the runner keeps ownership of.
class SourceRef final : public EntropySource {
 public:
  explicit SourceRef(EntropySource& s) : s_(s) {}
  void read_into(std::span<std::uint8_t> out) override { s_.read_into(out); }
  std::size_t read_some(std::span<std::uint8_t> out) override {
    return s_.read_some(out);
  }
  SourceKind kind() const override { return s_.kind(); }

 private:
  EntropySource& s_;
};

class CountingSource final : public EntropySource {
 public:
  explicit CountingSource(EntropySource& s) : s_(s) {}
  void read_into(std::span<std::uint8_t> out) override {
    s_.read_into(out);
    n_.fetch_add(out.size(), std::memory_order_relaxed);
  }
  SourceKind kind() const override { return s_.kind(); }
  std::uint64_t count() const { return n_.load(); }

 private:
  EntropySource& s_;
  std::atomic<std::uint64_t> n_{0};
};

std::int64_t round_us(std::chrono::steady_clock::duration d) {
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
  return (ns + 500) / 1000;
}

struct Failure {
  RunStatus status;
  std::string message;
  std::uint64_t op;  // absolute, warmup included
};

class Runner {
 public:
  Runner(const BenchConfig& config, EntropySource& source)
      : config_(config), source_(source) {}

  // Runs ops [begin, end) across the workers. Measured ops (index >=
  // warmup) produce records. Sampling and logging run on the calling thread.
  void run_phase(std::uint64_t begin, std::uint64_t end, bool measured,
                 ResourceSampler* sampler, std::ostream* log) {
    next_.store(begin);
    end_ = end;
    measured_ = measured;
    running_ = config_.workers;
    std::vector<std::thread> threads;
    threads.reserve(config_.workers);
    for (unsigned w = 0; w < config_.workers; ++w) {
      threads.emplace_back([this, w] { worker(w); });
    }

    if (measured) {
      std::uint64_t next_sample = config_.sample_interval;
      std::unique_lock lock(mu_);
      for (;;) {
        cv_.wait(lock, [&] {
          return completed_ >= next_sample || running_ == 0 || failure_;
        });
        while (completed_ >= next_sample) {
          const auto& at = records_[next_sample - 1];
          const BenchRecord last = at ? *at : last_record_;
          lock.unlock();
          samples_.push_back(sampler->sample(next_sample));
          if (log) {
            *log << "op=" << last.op_index << " keygen_us=" << last.keygen_us
                 << " eval_us=" << last.eval_us
                 << " verify_us=" << last.verify_us << '\n';
          }
          lock.lock();
          next_sample += config_.sample_interval;
        }
        if (running_ == 0 || failure_) break;
      }
    }
    for (auto& t : threads) t.join();
  }

  std::vector<BenchRecord> take_records() {
    std::vector<BenchRecord> out;
    out.reserve(records_.size());
    for (auto& r : records_) {
      if (r) out.push_back(*r);
    }
    return out;
  }
  std::vector<ResourceSample>& samples() { return samples_; }
  const std::optional<Failure>& failure() const { return failure_; }
  void size_records(std::uint64_t n) { records_.resize(n); }

 private:
  void worker(unsigned id) {
    std::mt19937_64 rng(config_.message_seed.value_or(std::random_device{}()) +
                        id * 0x9e3779b97f4a7c15ULL + next_.load());
    Bytes msg(config_.message_bytes);

    for (;;) {
      {
        std::lock_guard lock(mu_);
        if (failure_) break;
      }
      const std::uint64_t i = next_.fetch_add(1);
      if (i >= end_) break;
      for (auto& b : msg) b = static_cast<std::uint8_t>(rng());

      try {
        const auto t0 = std::chrono::steady_clock::now();
        const KeyPair kp = gen_keypair(source_);
        const auto t1 = std::chrono::steady_clock::now();
        const VrfResult res = vrf_prove(kp.secret, msg, source_);
        const auto t2 = std::chrono::steady_clock::now();
        const VrfVerdict v = vrf_verify(kp.public_key, msg, res.output, res.proof);
        const auto t3 = std::chrono::steady_clock::now();
        if (v != VrfVerdict::valid) {
          fail({RunStatus::corrupt_run, "proof failed verification", i});
          break;
        }
        if (!measured_) continue;
        BenchRecord r{
            .op_index = i - config_.warmup_ops,
            .keygen_us = round_us(t1 - t0),
            .eval_us = round_us(t2 - t1),
            .verify_us = round_us(t3 - t2),
            .total_us = round_us(t3 - t0),
        };
        std::lock_guard lock(mu_);
        records_[r.op_index] = r;
        last_record_ = r;
        ++completed_;
        if (completed_ % config_.sample_interval == 0) cv_.notify_all();
      } catch (const EntropyExhausted& e) {
        fail({RunStatus::entropy_exhausted, e.what(), i});
        break;
      } catch (const Error& e) {
        fail({RunStatus::corrupt_run, e.what(), i});
        break;
      }
    }

    std::lock_guard lock(mu_);
    --running_;
    cv_.notify_all();
  }

  void fail(Failure f) {
    std::lock_guard lock(mu_);
    // Keep the earliest op so the reported index does not depend on which
    // worker noticed first.
    if (!failure_ || f.op < failure_->op) failure_ = std::move(f);
    cv_.notify_all();
  }

  const BenchConfig& config_;
  EntropySource& source_;
  std::atomic<std::uint64_t> next_{0};
  std::uint64_t end_ = 0;
  bool measured_ = false;

  std::mutex mu_;
  std::condition_variable cv_;
  unsigned running_ = 0;
  std::uint64_t completed_ = 0;
  BenchRecord last_record_;
  std::optional<Failure> failure_;
  std::vector<std::optional<BenchRecord>> records_;
  std::vector<ResourceSample> samples_;
};

}  // namespace

BenchResult run_benchmark(const BenchConfig& config) {
  return run_benchmark(config, std::cerr);
}

BenchResult run_benchmark(const BenchConfig& config, std::ostream& log) {
  config.validate();

  std::unique_ptr<FileEntropyReader> reader;
  std::unique_ptr<EntropySource> base;
  if (config.source == BenchSource::file_qrng) {
    reader = FileEntropyReader::open(*config.entropy_path);
    base = std::make_unique<SourceRef>(*reader);
  } else {
    base = std::make_unique<SystemEntropySource>();
  }

  std::unique_ptr<EntropySource> shared;
  if (config.pool_mode == PoolMode::pooled) {
    shared = std::make_unique<EntropyPool>(std::move(base),
                                           PoolOptions{.block_size = config.block_size});
  } else if (config.source == BenchSource::file_qrng) {
    // One positional read per request, serialized across workers.
    shared = std::make_unique<SynchronizedSource>(std::move(base));
  } else {
    shared = std::move(base);
  }
  CountingSource counted(*shared);

  BenchResult result;
  result.n_ops = config.n_ops;
  result.source = config.source;
  result.pool_mode = config.pool_mode;
  result.workers = config.workers;

  Runner runner(config, counted);
  runner.size_records(config.n_ops);
  if (config.warmup_ops > 0) {
    runner.run_phase(0, config.warmup_ops, false, nullptr, nullptr);
  }
  if (!runner.failure()) {
    ResourceSampler sampler(config.probe ? config.probe : default_process_probe());
    const auto start = std::chrono::steady_clock::now();
    runner.run_phase(config.warmup_ops, config.warmup_ops + config.n_ops, true,
                     &sampler, config.log_progress ? &log : nullptr);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  result.records = runner.take_records();
  result.samples = std::move(runner.samples());
  if (const auto& f = runner.failure()) {
    result.status = f->status;
    result.error = f->message;
    if (f->op >= config.warmup_ops) {
      result.failed_op = f->op - config.warmup_ops;
    } else {
      result.error += " (during warmup)";
    }
  }

  // Stops any background refill before the reader is inspected.
  shared.reset();
  result.entropy_bytes_consumed = counted.count();
  if (reader) result.source_bytes_read = reader->offset();

  if (config.output_path) {
    write_csv(result.records, result.samples, *config.output_path);
  }
  return result;
}

ThroughputAb throughput_ab(const BenchConfig& unbuffered, const BenchConfig& pooled) {
  if (unbuffered.n_ops != pooled.n_ops)
    throw IncomparableRuns("throughput A/B needs equal n_ops");
  if (unbuffered.source != pooled.source || unbuffered.entropy_path != pooled.entropy_path)
    throw IncomparableRuns("throughput A/B needs the same entropy source");

  auto check = [](const BenchResult& r) {
    if (r.status == RunStatus::entropy_exhausted) {
      throw EntropyExhausted(kEntropyPerOp, 0);
    }
    if (r.status == RunStatus::corrupt_run) throw CorruptRun(r.error);
  };

  ThroughputAb ab;
  ab.unbuffered = run_benchmark(unbuffered);
  check(ab.unbuffered);
  ab.pooled = run_benchmark(pooled);
  check(ab.pooled);
  ab.unbuffered_ops_per_s = ab.unbuffered.throughput();
  ab.pooled_ops_per_s = ab.pooled.throughput();
  ab.ratio = ab.unbuffered_ops_per_s > 0 ? ab.pooled_ops_per_s / ab.unbuffered_ops_per_s : 0;
  return ab;
}

}  // namespace qvrf
