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

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <thread>

#include "qvrf/bytes.hpp"

namespace qvrf {

enum class SourceKind { file, system, remote, pooled, buffer };

std::string_view to_string(SourceKind kind);

// Supplier of random bytes for key seeds and proof nonces.
class EntropySource {
 public:
  virtual ~EntropySource() = default;

  // Fills `out` completely, or throws without consuming anything.
  // Finite sources throw EntropyExhausted.
  virtual void read_into(std::span<std::uint8_t> out) = 0;

  // Reads up to out.size() bytes. A short count means the source has hit
  // its end; infinite sources always fill `out`.
  virtual std::size_t read_some(std::span<std::uint8_t> out) {
    read_into(out);
    return out.size();
  }

  virtual SourceKind kind() const = 0;

  Bytes read_bytes(std::size_t n) {
    Bytes out(n);
    read_into(out);
    return out;
  }
};

// 32-byte Ed25519 key seed.
ByteArray<32> read_seed(EntropySource& source);

// Raw binary entropy file, consumed strictly front to back with positional
// reads. Single consumer.
class FileEntropyReader final : public EntropySource {
 public:
  // Throws SourceUnavailable for missing, unreadable or non-regular files.
  static std::unique_ptr<FileEntropyReader> open(
      const std::filesystem::path& path);
  ~FileEntropyReader() override;
  FileEntropyReader(const FileEntropyReader&) = delete;
  FileEntropyReader& operator=(const FileEntropyReader&) = delete;

  void read_into(std::span<std::uint8_t> out) override;
  std::size_t read_some(std::span<std::uint8_t> out) override;
  SourceKind kind() const override { return SourceKind::file; }

  const std::filesystem::path& path() const { return path_; }
  std::uint64_t offset() const { return offset_; }
  std::uint64_t length() const { return length_; }
  std::uint64_t remaining() const { return length_ - offset_; }

 private:
  FileEntropyReader(std::filesystem::path path, int fd, std::uint64_t length);
  void pread_exact(std::span<std::uint8_t> out);

  std::filesystem::path path_;
  int fd_;
  std::uint64_t offset_ = 0;
  std::uint64_t length_;
};

inline std::unique_ptr<FileEntropyReader> open_file_source(
    const std::filesystem::path& path) {
  return FileEntropyReader::open(path);
}

// Operating-system CSPRNG (getrandom). Safe for concurrent use.
class SystemEntropySource final : public EntropySource {
 public:
  void read_into(std::span<std::uint8_t> out) override;
  SourceKind kind() const override { return SourceKind::system; }
};

// In-memory byte string, consumed front to back. Handy for deterministic
// nonces and replaying captured entropy.
class BufferEntropySource final : public EntropySource {
 public:
  explicit BufferEntropySource(Bytes data) : data_(std::move(data)) {}

  void read_into(std::span<std::uint8_t> out) override;
  std::size_t read_some(std::span<std::uint8_t> out) override;
  SourceKind kind() const override { return SourceKind::buffer; }

  std::size_t offset() const { return offset_; }
  std::size_t remaining() const { return data_.size() - offset_; }

 private:
  Bytes data_;
  std::size_t offset_ = 0;
};

// Serializes access to a single-consumer source so several threads can
// share it. Every read still goes straight to the inner source.
class SynchronizedSource final : public EntropySource {
 public:
  explicit SynchronizedSource(std::unique_ptr<EntropySource> inner)
      : inner_(std::move(inner)) {}

  void read_into(std::span<std::uint8_t> out) override;
  std::size_t read_some(std::span<std::uint8_t> out) override;
  SourceKind kind() const override { return inner_->kind(); }

  EntropySource& inner() { return *inner_; }

 private:
  std::mutex mu_;
  std::unique_ptr<EntropySource> inner_;
};

struct PoolOptions {
  std::size_t block_size = 4096;
  // Background refill starts when the cache drops below this many bytes.
  // Defaults to block_size / 4; 0 disables background refill so that inner
  // reads happen only on demand.
  std::optional<std::size_t> low_water_mark;
};

// Block cache in front of another source. Bytes come out in exactly the
// order the inner source produced them; each read is atomic with respect
// to other consumers. At most one inner read is in flight at any time,
// issued either by a consumer that found the cache short or by the
// background refill thread.
class EntropyPool final : public EntropySource {
 public:
  // Throws std::invalid_argument if block_size < 32.
  explicit EntropyPool(std::unique_ptr<EntropySource> inner,
                       PoolOptions options = {});
  ~EntropyPool() override;
  EntropyPool(const EntropyPool&) = delete;
  EntropyPool& operator=(const EntropyPool&) = delete;

  void read_into(std::span<std::uint8_t> out) override;
  std::size_t read_some(std::span<std::uint8_t> out) override;
  SourceKind kind() const override { return SourceKind::pooled; }

  std::size_t block_size() const { return block_size_; }
  std::size_t low_water_mark() const { return low_water_mark_; }
  std::size_t cached() const;
  std::uint64_t refill_count() const;
  std::uint64_t bytes_served() const;
  // Only safe to touch once no reads are in flight.
  EntropySource& inner() { return *inner_; }

 private:
  std::size_t available_locked() const { return cache_.size() - head_; }
  void refill_locked(std::unique_lock<std::mutex>& lock);
  void take_locked(std::span<std::uint8_t> out);
  void prefetch_loop();

  std::unique_ptr<EntropySource> inner_;
  const std::size_t block_size_;
  const std::size_t low_water_mark_;

  mutable std::mutex mu_;
  std::condition_variable cv_;
  Bytes cache_;
  std::size_t head_ = 0;
  bool refilling_ = false;
  bool inner_done_ = false;
  bool primed_ = false;
  bool stop_ = false;
  std::exception_ptr inner_error_;
  std::uint64_t refills_ = 0;
  std::uint64_t served_ = 0;
  std::thread prefetcher_;
};

std::unique_ptr<EntropyPool> pool_wrap(std::unique_ptr<EntropySource> inner,
                                       std::size_t block_size);

// -log2(max byte frequency / sample size), in bits per byte. Throws
// InsufficientSample below 256 bytes.
double min_entropy_estimate(ByteView sample);

}  // namespace qvrf
