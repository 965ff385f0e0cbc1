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

#include "qvrf/resources.hpp"

#include <time.h>
#include <unistd.h>

#include <cmath>
#include <fstream>
#include <iostream>

namespace qvrf {
namespace {

class LinuxProcessProbe final : public ProcessProbe {
 public:
  std::optional<std::int64_t> resident_bytes() override {
    std::ifstream statm("/proc/self/statm");
    std::int64_t size = 0, resident = 0;
    if (!(statm >> size >> resident)) return std::nullopt;
    const long page = ::sysconf(_SC_PAGESIZE);
    if (page <= 0) return std::nullopt;
    return resident * page;
  }

  std::optional<std::chrono::nanoseconds> cpu_time() override {
    timespec ts{};
    if (::clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts) != 0) return std::nullopt;
    return std::chrono::seconds(ts.tv_sec) + std::chrono::nanoseconds(ts.tv_nsec);
  }
};

}  // namespace

std::shared_ptr<ProcessProbe> default_process_probe() {
  return std::make_shared<LinuxProcessProbe>();
}

ResourceSampler::ResourceSampler(std::shared_ptr<ProcessProbe> probe)
    : probe_(std::move(probe)),
      last_cpu_(probe_->cpu_time()),
      last_wall_(std::chrono::steady_clock::now()) {}

ResourceSample ResourceSampler::sample(std::uint64_t op_index) {
  ResourceSample s;
  s.op_index = op_index;
  if (auto mem = probe_->resident_bytes()) s.mem_bytes = *mem;

  const auto now = std::chrono::steady_clock::now();
  const auto cpu = probe_->cpu_time();
  if (cpu && last_cpu_) {
    const double wall_ns =
        std::chrono::duration<double, std::nano>(now - last_wall_).count();
    const double cpu_ns = static_cast<double>((*cpu - *last_cpu_).count());
    s.cpu_pct = wall_ns > 0
                    ? static_cast<std::int64_t>(std::llround(100.0 * cpu_ns / wall_ns))
                    : 0;
  }
  last_cpu_ = cpu;
  last_wall_ = now;

  if ((s.mem_bytes == kUnavailable || s.cpu_pct == kUnavailable) && !warned_) {
    std::cerr << "warning: process introspection unavailable; resource "
                 "samples carry -1\n";
    warned_ = true;
  }
  return s;
}

std::int64_t calibrate_cpu_probe(std::chrono::milliseconds busy,
                                 std::shared_ptr<ProcessProbe> probe) {
  ResourceSampler sampler(std::move(probe));
  const auto until = std::chrono::steady_clock::now() + busy;
  volatile std::uint64_t sink = 0;
  while (std::chrono::steady_clock::now() < until) {
    for (int i = 0; i < 1000; ++i) sink = sink + static_cast<std::uint64_t>(i);
  }
  return sampler.sample(0).cpu_pct;
}

}  // namespace qvrf
