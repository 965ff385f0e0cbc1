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

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>

namespace qvrf {

// Process introspection behind the resource sampler. The default probe
// reads /proc/self/statm and the process CPU clock.
class ProcessProbe {
 public:
  virtual ~ProcessProbe() = default;
  virtual std::optional<std::int64_t> resident_bytes() = 0;
  virtual std::optional<std::chrono::nanoseconds> cpu_time() = 0;
};

std::shared_ptr<ProcessProbe> default_process_probe();

// Stand-in for platforms without introspection: every query fails.
class UnsupportedProcessProbe final : public ProcessProbe {
 public:
  std::optional<std::int64_t> resident_bytes() override { return std::nullopt; }
  std::optional<std::chrono::nanoseconds> cpu_time() override {
    return std::nullopt;
  }
};

inline constexpr std::int64_t kUnavailable = -1;

struct ResourceSample {
  std::uint64_t op_index = 0;
  std::int64_t mem_bytes = kUnavailable;
  // Process CPU time over wall time since the previous sample, in percent
  // of one core (so up to 100 * cores).
  std::int64_t cpu_pct = kUnavailable;

  friend bool operator==(const ResourceSample&, const ResourceSample&) = default;
};

class ResourceSampler {
 public:
  explicit ResourceSampler(
      std::shared_ptr<ProcessProbe> probe = default_process_probe());

  // Fields the probe cannot provide are kUnavailable; a warning goes to
  // stderr the first time that happens.
  ResourceSample sample(std::uint64_t op_index);

 private:
  std::shared_ptr<ProcessProbe> probe_;
  std::optional<std::chrono::nanoseconds> last_cpu_;
  std::chrono::steady_clock::time_point last_wall_;
  bool warned_ = false;
};

// Busy-loops for `busy` between two samples and returns the CPU percentage
// observed. A working probe reports well above 50 on an idle machine.
std::int64_t calibrate_cpu_probe(
    std::chrono::milliseconds busy = std::chrono::milliseconds(100),
    std::shared_ptr<ProcessProbe> probe = default_process_probe());

}  // namespace qvrf
