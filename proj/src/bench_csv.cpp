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

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

#include "qvrf/bench.hpp"
#include "qvrf/errors.hpp"

namespace qvrf {
namespace {

constexpr std::string_view kOpsHeader = "op_index,keygen_us,eval_us,verify_us,total_us";
constexpr std::string_view kResHeader = "op_index,mem_bytes,cpu_pct";

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteFailed("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw WriteFailed("write to " + path.string() + " failed");
}

// Splits one CSV row of integers; std::from_chars ignores the locale.
template <std::size_t N>
std::array<std::int64_t, N> parse_row(std::string_view line,
                                      const std::filesystem::path& path,
                                      std::size_t line_no) {
  std::array<std::int64_t, N> out{};
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (std::size_t i = 0; i < N; ++i) {
    auto [next, ec] = std::from_chars(p, end, out[i]);
    const bool last = i + 1 == N;
    if (ec != std::errc() || (last ? next != end : (next == end || *next != ','))) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": malformed row");
    }
    p = next + 1;
  }
  return out;
}

template <std::size_t N, typename F>
void read_rows(const std::filesystem::path& path, std::string_view header, F&& on_row) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::runtime_error(path.string() + ": header must be '" +
                             std::string(header) + "'");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    on_row(parse_row<N>(line, path, line_no));
  }
}

}  // namespace

std::filesystem::path ops_csv_path(const std::filesystem::path& prefix) {
  return prefix.string() + ".ops.csv";
}

std::filesystem::path res_csv_path(const std::filesystem::path& prefix) {
  return prefix.string() + ".res.csv";
}

void write_csv(const std::vector<BenchRecord>& records,
               const std::vector<ResourceSample>& samples,
               const std::filesystem::path& prefix) {
  const auto ops_path = ops_csv_path(prefix);
  auto ops = open_for_write(ops_path);
  ops << kOpsHeader << '\n';
  for (const auto& r : records) {
    ops << r.op_index << ',' << r.keygen_us << ',' << r.eval_us << ','
        << r.verify_us << ',' << r.total_us << '\n';
  }
  finish(ops, ops_path);

  const auto res_path = res_csv_path(prefix);
  auto res = open_for_write(res_path);
  res << kResHeader << '\n';
  for (const auto& s : samples) {
    res << s.op_index << ',' << s.mem_bytes << ',' << s.cpu_pct << '\n';
  }
  finish(res, res_path);
}

std::vector<BenchRecord> read_ops_csv(const std::filesystem::path& path) {
  std::vector<BenchRecord> out;
  read_rows<5>(path, kOpsHeader, [&](const std::array<std::int64_t, 5>& v) {
    out.push_back({static_cast<std::uint64_t>(v[0]), v[1], v[2], v[3], v[4]});
  });
  return out;
}

std::vector<ResourceSample> read_res_csv(const std::filesystem::path& path) {
  std::vector<ResourceSample> out;
  read_rows<3>(path, kResHeader, [&](const std::array<std::int64_t, 3>& v) {
    out.push_back({static_cast<std::uint64_t>(v[0]), v[1], v[2]});
  });
  return out;
}

}  // namespace qvrf
