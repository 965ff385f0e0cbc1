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

#include "qvrf/entropy.hpp"

#include <fcntl.h>
#include <sys/random.h>
#include <sys/stat.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cmath>
#include <cstring>

#include "qvrf/errors.hpp"

namespace qvrf {

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::file: return "file";
    case SourceKind::system: return "system";
    case SourceKind::remote: return "remote";
    case SourceKind::pooled: return "pooled";
    case SourceKind::buffer: return "buffer";
  }
  return "unknown";
}

ByteArray<32> read_seed(EntropySource& source) {
  ByteArray<32> seed{};
  source.read_into(seed);
  return seed;
}

std::unique_ptr<FileEntropyReader> FileEntropyReader::open(
    const std::filesystem::path& path) {
  int fd = ::open(path.c_str(), O_RDONLY | O_CLOEXEC);
  if (fd < 0) {
    throw SourceUnavailable("cannot open entropy file " + path.string() +
                            ": " + std::strerror(errno));
  }
  struct stat st {};
  if (::fstat(fd, &st) != 0 || !S_ISREG(st.st_mode)) {
    ::close(fd);
    throw SourceUnavailable("entropy path is not a regular file: " +
                            path.string());
  }
  return std::unique_ptr<FileEntropyReader>(new FileEntropyReader(
      path, fd, static_cast<std::uint64_t>(st.st_size)));
}

FileEntropyReader::FileEntropyReader(std::filesystem::path path, int fd,
                                     std::uint64_t length)
    : path_(std::move(path)), fd_(fd), length_(length) {}

FileEntropyReader::~FileEntropyReader() { ::close(fd_); }

void FileEntropyReader::pread_exact(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    ssize_t r = ::pread(fd_, out.data() + done, out.size() - done,
                        static_cast<off_t>(offset_ + done));
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) {
      // The file shrank underneath us or the device failed.
      throw SourceUnavailable("read failed on " + path_.string() + ": " +
                              (r < 0 ? std::strerror(errno) : "short file"));
    }
    done += static_cast<std::size_t>(r);
  }
  offset_ += out.size();
}

void FileEntropyReader::read_into(std::span<std::uint8_t> out) {
  if (out.size() > remaining()) {
    throw EntropyExhausted(out.size(), static_cast<std::size_t>(remaining()));
  }
  if (!out.empty()) pread_exact(out);
}

std::size_t FileEntropyReader::read_some(std::span<std::uint8_t> out) {
  const auto n = static_cast<std::size_t>(
      std::min<std::uint64_t>(out.size(), remaining()));
  if (n > 0) pread_exact(out.first(n));
  return n;
}

void SystemEntropySource::read_into(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    ssize_t r = ::getrandom(out.data() + done, out.size() - done, 0);
    if (r < 0) {
      if (errno == EINTR) continue;
      throw SourceUnavailable(std::string("getrandom failed: ") +
                              std::strerror(errno));
    }
    done += static_cast<std::size_t>(r);
  }
}

void BufferEntropySource::read_into(std::span<std::uint8_t> out) {
  if (out.size() > remaining()) throw EntropyExhausted(out.size(), remaining());
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(offset_), out.size(),
              out.begin());
  offset_ += out.size();
}

std::size_t BufferEntropySource::read_some(std::span<std::uint8_t> out) {
  const std::size_t n = std::min(out.size(), remaining());
  read_into(out.first(n));
  return n;
}

void SynchronizedSource::read_into(std::span<std::uint8_t> out) {
  std::lock_guard lock(mu_);
  inner_->read_into(out);
}

std::size_t SynchronizedSource::read_some(std::span<std::uint8_t> out) {
  std::lock_guard lock(mu_);
  return inner_->read_some(out);
}

double min_entropy_estimate(ByteView sample) {
  if (sample.size() < 256) throw InsufficientSample(sample.size());
  std::array<std::size_t, 256> counts{};
  for (std::uint8_t b : sample) ++counts[b];
  std::size_t max = 0;
  for (std::size_t c : counts) max = std::max(max, c);
  const double h = -std::log2(static_cast<double>(max) /
                              static_cast<double>(sample.size()));
  return h == 0.0 ? 0.0 : h;  // fold -0.0
}

}  // namespace qvrf
